#include "properties.hpp"

#include <cmath>
#include <algorithm>
#include <cstdint>
#include <cstring>
#include <random>
#include <sstream>

#include "piprod/chains.hpp"
#include "piprod/prodcore.hpp"
#include "piprod/quad.hpp"
#include "piprod/verify.hpp"

namespace piprod::testing {

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr int kCases = 200;

template <typename... Args>
std::string describe(Args&&... args) {
    std::ostringstream os;
    os.precision(17);
    (os << ... << args);
    return os.str();
}

long long log_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> d(std::log(lo), std::log(hi));
    return std::llround(std::exp(d(rng)));
}

bool same_bits(double a, double b) {
    return std::memcmp(&a, &b, sizeof a) == 0;
}

}  // namespace

std::vector<PropertyResult> prodcore_properties() {
    std::vector<PropertyResult> out;
    std::mt19937_64 rng(kSeed);

    {
        PropertyResult r{"prodcore: partial sums strictly decrease in N", true, ""};
        std::uniform_real_distribution<double> xs(0.3, 10.0);
        for (int i = 0; i < kCases && r.pass; ++i) {
            const double x = xs(rng);
            const long long n1 = log_uniform(rng, 2, 5000);
            const long long n2 = n1 + 1 + log_uniform(rng, 1, 5000);
            const double a = prodcore::corrected_partial(x, n1).log_value;
            const double b = prodcore::corrected_partial(x, n2).log_value;
            if (!(b < a)) {
                r.pass = false;
                r.detail = describe("x=", x, " N1=", n1, " N2=", n2, " ", a, " <= ", b);
            }
        }
        out.push_back(r);
    }
    {
        PropertyResult r{"prodcore: factors increase toward 1 as x grows", true, ""};
        std::uniform_real_distribution<double> xs(0.3, 50.0);
        for (int i = 0; i < kCases && r.pass; ++i) {
            double x1 = xs(rng);
            double x2 = xs(rng);
            if (x1 > x2) std::swap(x1, x2);
            if (x1 == x2) continue;
            const long long n = log_uniform(rng, 2, 1e6);
            const double a = prodcore::log_term(x1, n);
            const double b = prodcore::log_term(x2, n);
            if (!(a < 0.0 && b < 0.0 && a <= b)) {
                r.pass = false;
                r.detail = describe("n=", n, " x1=", x1, " x2=", x2, " ", a, " ", b);
            }
        }
        out.push_back(r);
    }
    {
        // long double direct evaluation keeps ~16 digits after the cancellation
        // for u >= 1e-4, which brackets the switch to the series at 1e-3
        PropertyResult r{"prodcore: log_term matches extended-precision direct form", true, ""};
        std::uniform_real_distribution<double> logu(std::log(1e-4), std::log(0.2));
        double worst = 0.0;
        for (int i = 0; i < kCases; ++i) {
            const long long n = 2 + static_cast<long long>(rng() % 60);
            const double u = std::exp(logu(rng));
            const double x = 1.0 / (u * static_cast<double>(n) * static_cast<double>(n));
            if (x <= 0.3) continue;
            const long double xl = x;
            const long double nn = static_cast<long double>(n) * n;
            const long double ref = xl * nn * std::log1p(-1.0L / (xl * nn)) + 1.0L;
            const double got = prodcore::log_term(x, n);
            const double rel = static_cast<double>(std::fabs((got - ref) / ref));
            if (rel > worst) worst = rel;
            if (rel > 1e-12) {
                r.pass = false;
                r.detail = describe("x=", x, " n=", n, " rel=", rel);
                break;
            }
        }
        if (r.pass) r.detail = describe("worst rel ", worst);
        out.push_back(r);
    }
    {
        PropertyResult r{"prodcore: series branch tracks -1/(2 x n^2) for huge n", true, ""};
        for (int i = 0; i < kCases && r.pass; ++i) {
            const long long n = log_uniform(rng, 1e4, 1e9);
            const double nn = static_cast<double>(n);
            const double u = 1.0 / (nn * nn);
            const double ref = -(0.5 * u + u * u / 3.0);
            const double got = prodcore::log_term(1.0, n);
            if (!(std::fabs(got - ref) <= 1e-15 * std::fabs(ref))) {
                r.pass = false;
                r.detail = describe("n=", n, " got ", got, " want ", ref);
            }
        }
        out.push_back(r);
    }
    return out;
}

std::vector<PropertyResult> quad_properties() {
    std::vector<PropertyResult> out;
    std::mt19937_64 rng(kSeed + 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    constexpr int cases = 40;

    {
        PropertyResult r{"quad: additivity over a split point", true, ""};
        double worst = 0.0;
        for (int i = 0; i < cases; ++i) {
            double p[3] = {unit(rng), unit(rng), unit(rng)};
            std::sort(p, p + 3);
            if (i % 4 == 0) p[0] = 0.0;
            if (i % 4 == 1) p[2] = 1.0;
            if (p[1] - p[0] < 1e-6 || p[2] - p[1] < 1e-6) continue;
            const double whole = quad::integrate_t_logsin(p[0], p[2]).value;
            const double parts = quad::integrate_t_logsin(p[0], p[1]).value +
                                 quad::integrate_t_logsin(p[1], p[2]).value;
            const double diff = std::fabs(whole - parts);
            worst = std::max(worst, diff);
            if (diff > 1e-11) {
                r.pass = false;
                r.detail = describe("split ", p[0], " ", p[1], " ", p[2], " diff ", diff);
                break;
            }
        }
        if (r.pass) r.detail = describe("worst diff ", worst);
        out.push_back(r);
    }
    {
        PropertyResult r{"quad: integral of t log sin(pi t) is negative", true, ""};
        for (int i = 0; i < cases && r.pass; ++i) {
            double a = unit(rng);
            double b = unit(rng);
            if (a > b) std::swap(a, b);
            if (b - a < 1e-9) continue;
            const quad::QuadratureResult q = quad::integrate_t_logsin(a, b);
            if (!(q.converged && q.value < 0.0)) {
                r.pass = false;
                r.detail = describe("[", a, ", ", b, "] -> ", q.value);
            }
        }
        out.push_back(r);
    }
    {
        PropertyResult r{"quad: log sin(pi t) is symmetric about 1/2", true, ""};
        const auto one = [](double) { return 1.0; };
        for (int i = 0; i < cases && r.pass; ++i) {
            double a = unit(rng);
            double b = unit(rng);
            if (a > b) std::swap(a, b);
            if (i % 3 == 0) a = 0.0;
            if (b - a < 1e-9) continue;
            const double left = quad::integrate_logsin_weighted(one, a, b).value;
            const double right = quad::integrate_logsin_weighted(one, 1.0 - b, 1.0 - a).value;
            const double pointwise =
                std::fabs(quad::log_sin_pi(0.5 * (a + b)) - quad::log_sin_pi(1.0 - 0.5 * (a + b)));
            if (std::fabs(left - right) > 1e-11 || pointwise > 1e-15) {
                r.pass = false;
                r.detail = describe("[", a, ", ", b, "] ", left, " vs ", right);
            }
        }
        out.push_back(r);
    }
    return out;
}

std::vector<PropertyResult> chains_properties() {
    std::vector<PropertyResult> out;
    std::mt19937_64 rng(kSeed + 2);
    PropertyResult r{"chains: n^2 bracket collapses to the product summand", true, ""};
    double worst = 0.0;
    auto probe = [&](long long n) {
        const double diff = std::fabs(chains::term_1_3(n).quadratic_bracket - chains::term_1_4(n));
        worst = std::max(worst, diff);
        if (diff > 1e-12 && r.pass) {
            r.pass = false;
            r.detail = describe("n=", n, " diff ", diff);
        }
    };
    for (long long n = 2; n <= 2000; ++n) probe(n);
    for (int i = 0; i < kCases; ++i) probe(log_uniform(rng, 2000, 1e7));
    if (r.pass) r.detail = describe("worst diff ", worst);
    out.push_back(r);
    return out;
}

std::vector<PropertyResult> verify_properties() {
    PropertyResult r{"verify: repeated runs are bit-identical", true, ""};
    const auto a = verify::run_all();
    const auto b = verify::run_all();
    if (a.size() != b.size()) {
        r.pass = false;
        r.detail = "result count differs";
    }
    for (std::size_t i = 0; i < a.size() && r.pass; ++i) {
        const bool same = a[i].id == b[i].id && same_bits(a[i].lhs, b[i].lhs) &&
                          same_bits(a[i].rhs, b[i].rhs) && same_bits(a[i].abs_err, b[i].abs_err) &&
                          same_bits(a[i].rel_err, b[i].rel_err) && a[i].pass == b[i].pass &&
                          a[i].method == b[i].method;
        if (!same) {
            r.pass = false;
            r.detail = "differs at " + a[i].id;
        }
    }
    return {r};
}

std::vector<PropertyResult> all_properties() {
    std::vector<PropertyResult> out;
    for (auto suite : {prodcore_properties, quad_properties, chains_properties, verify_properties}) {
        for (auto& r : suite()) {
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace piprod::testing
