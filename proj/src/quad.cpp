#include "piprod/quad.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "piprod/errors.hpp"
#include "piprod/summation.hpp"

namespace piprod::quad {

namespace {

constexpr double kPi = std::numbers::pi;

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1] (QUADPACK qk15).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

struct ByError {
    bool operator()(const Panel& l, const Panel& r) const { return l.error < r.error; }
};

template <class F>
Panel gauss_kronrod(const F& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[static_cast<std::size_t>(j)];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kWgk[static_cast<std::size_t>(j)] * pair;
        if (j % 2 == 1) {
            gauss += kWg[static_cast<std::size_t>(j / 2)] * pair;
        }
    }
    return {a, b, kronrod * half, std::fabs((kronrod - gauss) * half)};
}

struct AdaptiveResult {
    double value;
    double error;
    int panels;
};

template <class F>
AdaptiveResult adaptive(const F& f, double a, double b, double tol, int max_panels) {
    std::priority_queue<Panel, std::vector<Panel>, ByError> heap;
    heap.push(gauss_kronrod(f, a, b));
    double total_err = heap.top().error;
    int panels = 1;
    while (total_err > tol && panels < max_panels) {
        const Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const Panel left = gauss_kronrod(f, worst.a, mid);
        const Panel right = gauss_kronrod(f, mid, worst.b);
        heap.push(left);
        heap.push(right);
        ++panels;
        total_err += left.error + right.error - worst.error;
    }
    // Re-sum in left-to-right order so the result does not depend on heap layout.
    std::vector<Panel> all;
    all.reserve(heap.size());
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    CompensatedSum value;
    CompensatedSum error;
    for (const Panel& p : all) {
        value += p.value;
        error += p.error;
    }
    return {value.value(), error.value(), panels};
}

// tanh-sinh on d in [0, width] with the singular end at d = 0. f receives d,
// computed without forming (endpoint + d) so it stays exact near the endpoint.
template <class F>
AdaptiveResult tanh_sinh_edge(const F& f, double width, double tol) {
    constexpr double kMaxAbscissa = 4.5;
    constexpr int kMaxLevel = 10;

    auto node = [&](double s) {
        const double z = 0.5 * kPi * std::sinh(s);
        const double q = std::exp(-2.0 * std::fabs(z));
        // d = width * sigma(2z); d/ds = width * pi cosh(s) * sigma (1 - sigma)
        const double sigma = z >= 0.0 ? 1.0 / (1.0 + q) : q / (1.0 + q);
        const double d = width * sigma;
        const double dd = width * kPi * std::cosh(s) * q / ((1.0 + q) * (1.0 + q));
        if (d <= 0.0 || dd == 0.0) {
            return 0.0;
        }
        return dd * f(d);
    };

    double h = 0.5;
    CompensatedSum sum;
    sum += node(0.0);
    for (int k = 1; k * h <= kMaxAbscissa; ++k) {
        sum += node(k * h);
        sum += node(-k * h);
    }
    double estimate = h * sum.value();
    double error = std::fabs(estimate);
    int level = 0;
    while (level < kMaxLevel) {
        ++level;
        h *= 0.5;
        for (int k = 1; k * h <= kMaxAbscissa; k += 2) {
            sum += node(k * h);
            sum += node(-k * h);
        }
        const double refined = h * sum.value();
        error = std::fabs(refined - estimate);
        estimate = refined;
        if (level >= 3 && error <= tol) {
            break;
        }
    }
    return {estimate, error, 1};
}

}  // namespace

double log_sin_pi_from_edge(double d) {
    const double x = kPi * d;
    if (d < 0.25) {
        return std::log(x) + std::log(std::sin(x) / x);
    }
    return std::log(std::sin(x));
}

double log_sin_pi(double t) {
    if (!(t > 0.0) || !(t < 1.0)) {
        throw std::domain_error("log_sin_pi: t must lie in (0, 1)");
    }
    // 1 - t is exact for t in [1/2, 1]
    return log_sin_pi_from_edge(t <= 0.5 ? t : 1.0 - t);
}

QuadratureResult integrate_logsin_weighted(const std::function<double(double)>& weight,
                                           double lower, double upper,
                                           const QuadratureOptions& options) {
    if (!(lower >= 0.0) || !(upper <= 1.0) || !(lower < upper)) {
        throw std::domain_error("integrate_logsin_weighted: need 0 <= lower < upper <= 1");
    }
    const bool left_singular = lower == 0.0;
    const bool right_singular = upper == 1.0;
    const double length = upper - lower;
    const double share = (left_singular && right_singular) ? 0.5 : 1.0;
    const double left_guard = left_singular ? std::min(options.guard_width, share * length) : 0.0;
    const double right_guard = right_singular ? std::min(options.guard_width, share * length) : 0.0;

    CompensatedSum value;
    CompensatedSum error;
    int panels = 0;

    if (left_guard > 0.0) {
        auto f = [&](double d) { return weight(d) * log_sin_pi_from_edge(d); };
        const AdaptiveResult r = tanh_sinh_edge(f, left_guard, 0.25 * options.tolerance);
        value += r.value;
        error += r.error;
        panels += r.panels;
    }
    if (right_guard > 0.0) {
        auto f = [&](double d) { return weight(1.0 - d) * log_sin_pi_from_edge(d); };
        const AdaptiveResult r = tanh_sinh_edge(f, right_guard, 0.25 * options.tolerance);
        value += r.value;
        error += r.error;
        panels += r.panels;
    }
    const double a = lower + left_guard;
    const double b = upper - right_guard;
    if (b > a) {
        auto f = [&](double t) { return weight(t) * log_sin_pi(t); };
        const int budget = std::max(1, options.max_panels - panels);
        const AdaptiveResult r = adaptive(f, a, b, 0.5 * options.tolerance, budget);
        value += r.value;
        error += r.error;
        panels += r.panels;
    }

    QuadratureResult out;
    out.value = value.value();
    out.abs_error_estimate = error.value();
    out.panels = std::max(panels, 1);
    out.converged = out.abs_error_estimate <= options.tolerance;
    return out;
}

QuadratureResult integrate_t_logsin(double upper, const QuadratureOptions& options) {
    if (!(upper > 0.0) || !(upper <= 1.0)) {
        throw std::domain_error("integrate_t_logsin: upper must lie in (0, 1]");
    }
    return integrate_t_logsin(0.0, upper, options);
}

QuadratureResult integrate_t_logsin(double lower, double upper,
                                    const QuadratureOptions& options) {
    return integrate_logsin_weighted([](double t) { return t; }, lower, upper, options);
}

double r_of_y(double y) {
    if (!(y >= 1.0)) {
        throw std::domain_error("r_of_y: y must be >= 1, got " + std::to_string(y));
    }
    const QuadratureResult q = integrate_t_logsin(1.0 / std::sqrt(y));
    if (!q.converged) {
        throw NumericalFailure("r_of_y: quadrature did not converge (error estimate " +
                               std::to_string(q.abs_error_estimate) + ")");
    }
    return 2.0 * y * q.value;
}

}  // namespace piprod::quad
