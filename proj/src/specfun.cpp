#include "piprod/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "piprod/summation.hpp"

namespace piprod::specfun {

namespace {

constexpr double kEps = 1e-17;

// (2j)! / B_{2j}, j = 1..12
constexpr std::array<double, 12> kEulerMaclaurinDenom = {
    12.0,
    -720.0,
    30240.0,
    -1209600.0,
    47900160.0,
    -1.8924375803183791606e9,
    7.47242496e10,
    -2.950130727918164224e12,
    1.1646782814350067249e14,
    -4.5979787224074726105e15,
    1.8152105401943546773e17,
    -7.1661652561756670113e18,
};

// sum_{j>=0} (m + j)^{-s} by Euler-Maclaurin anchored at m.
double euler_maclaurin_tail(double s, double m) {
    const double p = std::pow(m, -s);
    if (p == 0.0) {
        return 0.0;
    }
    CompensatedSum acc;
    acc += p * m / (s - 1.0);
    acc += 0.5 * p;
    double factor = p * s / m;  // rising factorial (s)_{2j-1} * m^{-s-2j+1}
    for (std::size_t j = 0; j < kEulerMaclaurinDenom.size(); ++j) {
        const double term = factor / kEulerMaclaurinDenom[j];
        acc += term;
        if (std::fabs(term) < kEps * std::fabs(acc.value())) {
            break;
        }
        factor *= (s + 2.0 * j + 1.0) * (s + 2.0 * j + 2.0) / (m * m);
    }
    return acc.value();
}

// Stirling coefficients B_{2j} / (2j (2j-1)).
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
};

// With x >= 10 the first omitted Stirling term is below 2e-18.
constexpr double kStirlingThreshold = 10.0;

double log_gamma_stirling(double x) {
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    double series = 0.0;
    for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) {
        series = series * inv2 + *it;
    }
    series *= inv;
    return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

}  // namespace

double zeta(double s) {
    if (!(s >= 2.0)) {
        throw std::domain_error("zeta: s must be >= 2, got " + std::to_string(s));
    }
    // Fixed cutoff; the Euler-Maclaurin ratio (s+2j)^2/(2 pi M)^2 stays small.
    const double cutoff = 10.0 + std::ceil(s);
    CompensatedSum acc;
    for (double n = cutoff - 1.0; n >= 1.0; n -= 1.0) {
        acc += std::pow(n, -s);
    }
    acc += euler_maclaurin_tail(s, cutoff);
    return acc.value();
}

double hurwitz_zeta(double s, double q) {
    if (!(s > 1.0) || !(q > 0.0)) {
        throw std::domain_error("hurwitz_zeta: need s > 1 and q > 0");
    }
    const double cutoff = 2.0 * std::ceil(s) + 20.0;
    CompensatedSum acc;
    double a = q;
    while (a < cutoff) {
        const double term = std::pow(a, -s);
        acc += term;
        // remaining tail is at most term * a / (s - 1)
        if (term * a / (s - 1.0) < kEps * acc.value()) {
            return acc.value();
        }
        a += 1.0;
    }
    acc += euler_maclaurin_tail(s, a);
    return acc.value();
}

double zeta_tail(double s, long long n) {
    if (n < 0) {
        throw std::domain_error("zeta_tail: n must be >= 0");
    }
    return hurwitz_zeta(s, static_cast<double>(n) + 1.0);
}

double zeta_even_minus_1(int k) {
    if (k < 1) {
        throw std::domain_error("zeta_even_minus_1: k must be >= 1");
    }
    return hurwitz_zeta(2.0 * k, 2.0);
}

double apery() { return zeta(3.0); }

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_gamma: x must be > 0, got " + std::to_string(x));
    }
    if (x >= kStirlingThreshold) {
        return log_gamma_stirling(x);
    }
    // Gamma(x) = Gamma(x + m) / (x (x+1) ... (x+m-1))
    double shifted = x;
    double product = 1.0;
    while (shifted < kStirlingThreshold) {
        product *= shifted;
        shifted += 1.0;
    }
    return log_gamma_stirling(shifted) - std::log(product);
}

ZetaCache::ZetaCache(int max_k) : zeta3_(apery()) {
    if (max_k < 1) {
        throw std::invalid_argument("ZetaCache: max_k must be >= 1");
    }
    even_minus_1_.reserve(static_cast<std::size_t>(max_k));
    for (int k = 1; k <= max_k; ++k) {
        even_minus_1_.push_back(zeta_even_minus_1(k));
    }
}

double ZetaCache::even_minus_1(int k) const {
    if (k < 1 || k > max_k()) {
        throw std::out_of_range("ZetaCache: k = " + std::to_string(k) + " outside 1.." +
                                std::to_string(max_k()));
    }
    return even_minus_1_[static_cast<std::size_t>(k - 1)];
}

const ZetaCache& default_zeta_cache() {
    static const ZetaCache cache;
    return cache;
}

}  // namespace piprod::specfun
