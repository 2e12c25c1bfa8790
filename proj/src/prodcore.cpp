#include "piprod/prodcore.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "piprod/specfun.hpp"
#include "piprod/summation.hpp"

namespace piprod::prodcore {

namespace {

void check_args(double x, long long n) {
    if (!(x > 0.25)) {
        throw std::domain_error("product scale x must be > 1/4, got " + std::to_string(x));
    }
    if (n < 2) {
        throw std::domain_error("product index must be >= 2, got " + std::to_string(n));
    }
}

// u^24/25 < 1e-17 * u/2 for u < 0.1.
constexpr int kSeriesTerms = 24;

}  // namespace

std::string_view to_string(Method m) {
    switch (m) {
        case Method::naive: return "naive";
        case Method::tail_corrected: return "tail_corrected";
        case Method::extrapolated: return "extrapolated";
        case Method::series: return "series";
    }
    return "unknown";
}

std::string_view to_string(Convergence c) {
    switch (c) {
        case Convergence::converges_to_zero: return "converges_to_zero";
        case Convergence::converges_nonzero: return "converges_nonzero";
        case Convergence::diverges: return "diverges";
    }
    return "unknown";
}

ProductFamily ProductFamily::make(double x, double correction_base) {
    if (!(x > 0.25)) {
        throw std::domain_error("ProductFamily: x must be > 1/4");
    }
    if (!(correction_base > 0.0)) {
        throw std::domain_error("ProductFamily: correction base must be > 0");
    }
    return {x, correction_base};
}

double log_term(double x, long long n) {
    check_args(x, n);
    const double nn = static_cast<double>(n);
    const double u = 1.0 / (x * nn * nn);
    if (u < kSeriesSwitch) {
        double acc = 0.0;
        for (int k = kSeriesTerms; k >= 1; --k) {
            acc = acc * u + 1.0 / (k + 1);
        }
        return -u * acc;
    }
    return std::log1p(-u) / u + 1.0;
}

PartialEvaluation corrected_partial(double x, long long N) {
    check_args(x, N);
    CompensatedSum acc;
    for (long long n = 2; n <= N; ++n) {
        acc += log_term(x, n);
    }
    return {N, acc.value(), 0.0, Method::naive};
}

PartialEvaluation family_partial(const ProductFamily& family, long long N) {
    check_args(family.x, N);
    // log of each factor is log_term - 1 + log a; the constant part is exact
    // apart from one rounding, so add it once.
    const PartialEvaluation base = corrected_partial(family.x, N);
    const double per_term = std::log(family.correction_base) - 1.0;
    return {N, base.log_value + static_cast<double>(N - 1) * per_term, 0.0, Method::naive};
}

std::vector<double> corrected_partials(double x, std::span<const long long> schedule) {
    std::vector<double> out;
    out.reserve(schedule.size());
    CompensatedSum acc;
    long long next = 2;
    long long prev_stop = 0;
    for (long long stop : schedule) {
        if (stop < 1 || stop <= prev_stop) {
            throw std::invalid_argument("corrected_partials: schedule must be ascending and >= 1");
        }
        for (; next <= stop; ++next) {
            acc += log_term(x, next);
        }
        out.push_back(acc.value());
        prev_stop = stop;
    }
    return out;
}

PartialEvaluation q_partial(long long N) {
    PartialEvaluation p = corrected_partial(1.0, N);
    p.log_value -= static_cast<double>(N - 1);
    return p;
}

PartialEvaluation u_partial(long long N) {
    PartialEvaluation p = corrected_partial(4.0, N);
    p.log_value -= static_cast<double>(N - 1);
    return p;
}

PartialEvaluation p_partial(long long N) {
    // log Q_N and log U_N share the offset -(N-1); subtracting the corrected
    // sums directly avoids rounding that large offset twice.
    const PartialEvaluation q = corrected_partial(1.0, N);
    const PartialEvaluation u = corrected_partial(4.0, N);
    return {N, q.log_value - u.log_value, 0.0, Method::naive};
}

double tail_correction(double x, long long N, int K) {
    check_args(x, N);
    if (K < 1) {
        throw std::domain_error("tail_correction: K must be >= 1");
    }
    CompensatedSum acc;
    // smallest terms first
    for (int k = K; k >= 1; --k) {
        const double tail = specfun::zeta_tail(2.0 * k, N);
        acc += tail / ((k + 1) * std::pow(x, k));
    }
    return -acc.value();
}

PartialEvaluation tail_corrected_partial(double x, long long N, int K) {
    PartialEvaluation p = corrected_partial(x, N);
    p.tail_estimate = tail_correction(x, N, K);
    p.log_value += p.tail_estimate;
    p.method = Method::tail_corrected;
    return p;
}

Convergence classify(double a, double x) {
    if (!(a > 0.0)) {
        throw std::domain_error("classify: a must be > 0");
    }
    if (!(x > 0.25)) {
        throw std::domain_error("classify: x must be > 1/4");
    }
    constexpr double e = std::numbers::e;
    const double ulp = std::nextafter(e, 2.0 * e) - e;
    if (std::fabs(a - e) <= ulp) {
        return Convergence::converges_nonzero;
    }
    return a < e ? Convergence::converges_to_zero : Convergence::diverges;
}

}  // namespace piprod::prodcore
