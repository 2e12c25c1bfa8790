#pragma once

#include "piprod/accel.hpp"
#include "piprod/prodcore.hpp"
#include "piprod/specfun.hpp"

namespace piprod::afunc {

enum class AMethod { series, closed };

/// A(y), the normaliser with  prod_{n>=2} (1 - 1/(y n^2))^{y n^2} e = 1 / A(y).
struct AFunctionValue {
    double y = 0.0;
    double log_A = 0.0;
    AMethod method = AMethod::series;
    int truncation_K = 0;  // series only
    double est_error = 0.0;

    [[nodiscard]] double value() const;
};

/// K = 40 for y >= 1 and 60 below, where the 1/(4y) decay is slower.
int default_truncation(double y);

/// log A(y) = sum_{k=1}^{K} (zeta(2k) - 1) / ((k+1) y^k).
///
/// est_error is the first omitted term scaled by the geometric majorant
/// 1 / (1 - 1/(4y)). Throws std::domain_error for y <= 1/4 and
/// std::out_of_range when K exceeds the cache.
AFunctionValue log_A_series(double y, int K,
                            const specfun::ZetaCache& cache = specfun::default_zeta_cache());

/// Closed form
///   log A(y) = -log sin(pi/sqrt y) + y log(1 - 1/y) + 3/2 + R(y),  y > 1.
/// At y = 1 both the sine and (1 - 1/y)^y vanish, so y = 1 is rejected.
AFunctionValue A_closed(double y);

/// P(x, y) = A(y) / A(x), both from the series at the default truncation.
double p_ratio(double x, double y);

/// (1 - 1/x)^{-x} sin(pi/sqrt x) at x = 1 + h, evaluated without the
/// cancellations in 1 - 1/x and in sin near pi.
double limit_sample(double h);

/// Richardson table for  lim_{x->1} (1 - 1/x)^{-x} sin(pi/sqrt x)  built from
/// h = 2^-j, j = 4..20. The error carries h^m log^i h terms (i <= m), so the
/// exponents are repeated: {1, 1, 2, 2, 2}.
accel::ExtrapolationTable limit_at_one_table();

/// Best estimate from limit_at_one_table(). Throws NumericalFailure if the
/// table's own error estimate exceeds 1e-8.
double limit_at_one();

/// Tail order used by the tail_corrected method.
inline constexpr int kDefaultTailOrder = 6;

/// pi = e^{3/2} * exp(L), L the limit of  sum_{n>=2} log_term(1, n).
///
/// naive: the partial sum to N = terms. tail_corrected: plus
/// tail_correction(1, terms, tail_order). extrapolated: Wynn epsilon over
/// partial sums on a doubling schedule ending at or below `terms`. series: L =
/// -log A(1) with K = terms.
double pi_from_product(prodcore::Method method, long long terms,
                       int tail_order = kDefaultTailOrder);

/// Wynn table behind the extrapolated method (values are log-space sums).
accel::ExtrapolationTable product_wynn_table(double x, long long budget);

}  // namespace piprod::afunc
