#pragma once

#include <cmath>
#include <span>
#include <string_view>
#include <vector>

namespace piprod::prodcore {

/// How a partial product (or its limit estimate) was obtained.
enum class Method { naive, tail_corrected, extrapolated, series };

std::string_view to_string(Method m);

/// The family  prod_{n>=2} (1 - 1/(x n^2))^{x n^2} * a.
struct ProductFamily {
    double x;
    double correction_base;

    /// Throws std::domain_error unless x > 1/4 and a > 0.
    static ProductFamily make(double x, double correction_base);
};

/// A partial product  prod_{n=2}^{N}  kept in log space.
struct PartialEvaluation {
    long long n_terms = 0;
    double log_value = 0.0;
    double tail_estimate = 0.0;
    Method method = Method::naive;

    [[nodiscard]] double value() const { return std::exp(log_value); }
};

/// Below this value of 1/(x n^2) log_term switches to its power series.
inline constexpr double kSeriesSwitch = 0.1;

/// x n^2 log(1 - 1/(x n^2)) + 1, the log of one e-corrected factor.
///
/// The two O(1) pieces cancel as n grows, so for 1/(x n^2) < kSeriesSwitch the
/// value comes from  -sum_k u^k/(k+1)  with u = 1/(x n^2).
double log_term(double x, long long n);

/// Sum of log_term(x, n) for n = 2..N, ascending, compensated.
PartialEvaluation corrected_partial(double x, long long N);

/// Partial product with an arbitrary per-term multiplier a instead of e.
PartialEvaluation family_partial(const ProductFamily& family, long long N);

/// Corrected partial sums at every N in `schedule` (ascending, >= 1) in one
/// pass. N = 1 is the empty product.
std::vector<double> corrected_partials(double x, std::span<const long long> schedule);

/// Q_N = prod (1 - 1/n^2)^{n^2}, no e factors.
PartialEvaluation q_partial(long long N);
/// U_N = prod (1 - 1/(4n^2))^{4n^2}, no e factors.
PartialEvaluation u_partial(long long N);
/// P_N = Q_N / U_N as a difference of log sums.
PartialEvaluation p_partial(long long N);

/// Log of the omitted tail  sum_{n>N} log_term(x, n), truncated after K terms
/// of its expansion in zeta tails:  -sum_{k<=K} zeta_{>N}(2k) / ((k+1) x^k).
double tail_correction(double x, long long N, int K);

/// corrected_partial plus tail_correction, tagged tail_corrected.
PartialEvaluation tail_corrected_partial(double x, long long N, int K);

enum class Convergence { converges_to_zero, converges_nonzero, diverges };

std::string_view to_string(Convergence c);

/// Behaviour of  prod (1 - 1/(x n^2))^{x n^2} a : each factor is about a/e.
Convergence classify(double a, double x);

}  // namespace piprod::prodcore
