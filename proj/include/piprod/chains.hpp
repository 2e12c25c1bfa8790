#pragma once

#include <utility>

#include "piprod/accel.hpp"

namespace piprod::chains {

/// sum_{n=1}^{N} ((-1)^n - 1)^2 / n^3, i.e. 4 * sum over odd n <= N of n^-3.
double s_direct(long long N);

/// The omitted part  sum_{n>N} ((-1)^n - 1)^2 / n^3, via a Hurwitz zeta tail
/// over the odd integers.
double s_odd_tail(long long N);

/// s_direct(N) + s_odd_tail(N).
double s_tail_corrected(long long N);

/// One summand of the three-bracket log series, bracket by bracket.
///
/// Every log argument is written as 1 + delta with delta expanded exactly:
///   (n^2-1) 2^8 n^6 / (4n^2-1)^4       = 1 - (96n^4 - 16n^2 + 1) / (4n^2-1)^4
///   (1+n)(2n-1)^2 / ((n-1)(1+2n)^2)    = 1 + 2 / ((n-1)(2n+1)^2)
///   1 - 3/(4n^2-1)
/// so log1p keeps full relative accuracy as n grows.
struct SeriesTerm13 {
    long long n = 0;
    double quadratic_bracket = 0.0;  // n^2 log(...)
    double linear_bracket = 0.0;     // 2n log(...)
    double constant_bracket = 0.0;   // log(1 - 3/(4n^2-1))
    double value = 0.0;
};

SeriesTerm13 term_1_3(long long n);

/// Tail  sum_{n>N} term_1_3(n).value  from the expansion
///   term_1_3(n) = sum_j (1 - 4^-j)(4/(2j+1) - 1/(j+1) - 1/j) n^{-2j}.
double term_1_3_tail(long long N, int K);

/// sum_{n=2}^{N} term_1_3(n).value plus term_1_3_tail(N, K).
double sum_term_1_3(long long N, int K);

/// n^2 log(1 - 1/n^2) - 4n^2 log(1 - 1/(4n^2)), computed as
/// log_term(1, n) - log_term(4, n): the +1 corrections cancel exactly.
double term_1_4(long long n);

/// sum_{n=2}^{N} term_1_4(n) plus tail_correction(1, N, K) - tail_correction(4, N, K).
double sum_term_1_4(long long N, int K);

/// Constant part of the closed S / pi^2 chain: 15 log 2 - 9 log 3 - log(64 pi / 243).
double chain_1_4_constant();

/// Log of  prod_{n=2}^{N} (1+n)^{2n} (2n-1)^{4n} / ((n-1)^{2n} (1+2n)^{4n}).
double gamma_product_lhs(long long N);

/// Log of the closed form
///   81/(4 pi^2) * N^{2N} (N+1)^{2N} / (N+1/2)^{4N} * Gamma^4(N+1/2) / (Gamma^2(N) Gamma^2(N+1)).
double gamma_product_rhs(long long N);

/// The variant with (N+2)^{2N} (N+1)^{2N} / (N+3/2)^{4N}. It differs from the
/// product by O(1/N) at finite N and shares only the limit.
double gamma_product_rhs_shifted(long long N);

/// (log of prod_{n=1}^{N} (1+n)^n,  N log Gamma(N+2) - sum_{n=1}^{N} log Gamma(n+1)).
std::pair<double, double> superfactorial_identity(long long N);

/// sum_{n=2}^{N} [ n log((n-1)/(n+1)) + 2n log((2n+1)/(2n-1)) ].
double euler_92_log_partial(long long N);

/// (9/2) exp(euler_92_log_partial(N)); tends to pi with O(1/N) error.
double euler_92_product(long long N);

/// Tail of euler_92_log_partial beyond N:
///   -sum_{j<=K} 2 (1 - 4^-j) / (2j+1) * zeta_{>N}(2j).
double euler_92_tail(long long N, int K);

/// Wynn epsilon over log partials on a doubling schedule within `budget`
/// terms. Values are logs; the pi estimate is (9/2) exp(best).
accel::ExtrapolationTable euler_92_wynn_table(long long budget);

/// (9/2) exp(euler_92_wynn_table(budget).best).
double euler_92_extrapolated(long long budget);

}  // namespace piprod::chains
