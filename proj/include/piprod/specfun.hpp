#pragma once

#include <vector>

namespace piprod::specfun {

/// Riemann zeta for real s >= 2: direct partial sum to a fixed cutoff plus an
/// Euler-Maclaurin tail. Absolute error below 1e-13.
/// Throws std::domain_error for s < 2.
double zeta(double s);

/// Hurwitz zeta  sum_{j>=0} (q + j)^{-s}  for s > 1, q > 0.
///
/// Terms are summed directly until the remainder is either negligible or the
/// argument is large enough for the Euler-Maclaurin tail to converge quickly,
/// so the result carries a relative error near 1e-15 even when the sum is tiny.
double hurwitz_zeta(double s, double q);

/// sum_{m > n} m^{-s}, the tail left over by a partial zeta sum.
double zeta_tail(double s, long long n);

/// zeta(2k) - 1, summed from n = 2 so that large k does not cancel.
double zeta_even_minus_1(int k);

/// Apery's constant zeta(3).
double apery();

/// log Gamma(x) for x > 0 via Stirling's series after shifting the argument
/// up to x >= 10. Absolute error is a few ulp of log Gamma(x + m) for the
/// shift m, so below 10 it is about 2e-15 rather than relative.
/// Throws std::domain_error for x <= 0.
double log_gamma(double x);

/// Precomputed zeta(2k) - 1 for k = 1..max_k, plus zeta(3). Immutable.
class ZetaCache {
public:
    static constexpr int kDefaultMaxK = 60;

    explicit ZetaCache(int max_k = kDefaultMaxK);

    [[nodiscard]] int max_k() const { return static_cast<int>(even_minus_1_.size()); }
    /// zeta(2k) - 1 for 1 <= k <= max_k.
    [[nodiscard]] double even_minus_1(int k) const;
    [[nodiscard]] double zeta3() const { return zeta3_; }

private:
    std::vector<double> even_minus_1_;
    double zeta3_;
};

/// Shared cache with max_k = 60.
const ZetaCache& default_zeta_cache();

}  // namespace piprod::specfun
