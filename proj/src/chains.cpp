#include "piprod/chains.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "piprod/prodcore.hpp"
#include "piprod/specfun.hpp"
#include "piprod/summation.hpp"

namespace piprod::chains {

namespace {

constexpr double kPi = std::numbers::pi;

void require_at_least(long long value, long long minimum, const char* what) {
    if (value < minimum) {
        throw std::domain_error(std::string(what) + " must be >= " + std::to_string(minimum) +
                                ", got " + std::to_string(value));
    }
}

// Coefficient of n^{-2j} in term_1_3(n).
double term_1_3_coefficient(int j) {
    const double damp = 1.0 - std::pow(4.0, -j);
    return damp * (4.0 / (2 * j + 1) - 1.0 / (j + 1) - 1.0 / j);
}

// Coefficient of n^{-2j} in the 9/2-product summand.
double euler_92_coefficient(int j) {
    return -2.0 * (1.0 - std::pow(4.0, -j)) / (2 * j + 1);
}

// Below this n the 9/2 summand is evaluated from its logarithms directly.
constexpr long long kEuler92SeriesFrom = 32;
constexpr int kEuler92SeriesTerms = 8;

double euler_92_summand(long long n) {
    const double nn = static_cast<double>(n);
    if (n < kEuler92SeriesFrom) {
        return nn * std::log1p(-2.0 / (nn + 1.0)) + 2.0 * nn * std::log1p(2.0 / (2.0 * nn - 1.0));
    }
    // the two logarithms are each close to +-2 and cancel to about -1/(2 n^2)
    const double inv2 = 1.0 / (nn * nn);
    double acc = 0.0;
    for (int j = kEuler92SeriesTerms; j >= 1; --j) {
        acc = acc * inv2 + euler_92_coefficient(j);
    }
    return acc * inv2;
}

}  // namespace

double s_direct(long long N) {
    require_at_least(N, 1, "s_direct: N");
    CompensatedSum acc;
    for (long long n = 1; n <= N; n += 2) {
        const double nn = static_cast<double>(n);
        acc += 4.0 / (nn * nn * nn);
    }
    return acc.value();
}

double s_odd_tail(long long N) {
    require_at_least(N, 0, "s_odd_tail: N");
    const long long first_odd = (N % 2 == 0) ? N + 1 : N + 2;
    // 4 * sum_{j>=0} (first_odd + 2j)^-3 = (1/2) sum_{j>=0} (first_odd/2 + j)^-3
    return 0.5 * specfun::hurwitz_zeta(3.0, 0.5 * static_cast<double>(first_odd));
}

double s_tail_corrected(long long N) { return s_direct(N) + s_odd_tail(N); }

SeriesTerm13 term_1_3(long long n) {
    require_at_least(n, 2, "term_1_3: n");
    const double nn = static_cast<double>(n);
    const double n2 = nn * nn;
    const double four_n2_m1 = 4.0 * n2 - 1.0;
    const double denom4 = (four_n2_m1 * four_n2_m1) * (four_n2_m1 * four_n2_m1);

    SeriesTerm13 t;
    t.n = n;
    t.quadratic_bracket = n2 * std::log1p(-(96.0 * n2 * n2 - 16.0 * n2 + 1.0) / denom4);
    const double two_n_p1 = 2.0 * nn + 1.0;
    t.linear_bracket = 2.0 * nn * std::log1p(2.0 / ((nn - 1.0) * two_n_p1 * two_n_p1));
    t.constant_bracket = std::log1p(-3.0 / four_n2_m1);
    t.value = t.quadratic_bracket + t.linear_bracket + t.constant_bracket;
    return t;
}

double term_1_3_tail(long long N, int K) {
    require_at_least(N, 1, "term_1_3_tail: N");
    require_at_least(K, 1, "term_1_3_tail: K");
    CompensatedSum acc;
    for (int j = K; j >= 1; --j) {
        acc += term_1_3_coefficient(j) * specfun::zeta_tail(2.0 * j, N);
    }
    return acc.value();
}

double sum_term_1_3(long long N, int K) {
    require_at_least(N, 2, "sum_term_1_3: N");
    CompensatedSum acc;
    for (long long n = 2; n <= N; ++n) {
        acc += term_1_3(n).value;
    }
    acc += term_1_3_tail(N, K);
    return acc.value();
}

double term_1_4(long long n) {
    require_at_least(n, 2, "term_1_4: n");
    return prodcore::log_term(1.0, n) - prodcore::log_term(4.0, n);
}

double sum_term_1_4(long long N, int K) {
    require_at_least(N, 2, "sum_term_1_4: N");
    CompensatedSum acc;
    for (long long n = 2; n <= N; ++n) {
        acc += term_1_4(n);
    }
    acc += prodcore::tail_correction(1.0, N, K);
    acc -= prodcore::tail_correction(4.0, N, K);
    return acc.value();
}

double chain_1_4_constant() {
    return 15.0 * std::log(2.0) - 9.0 * std::log(3.0) - std::log(64.0 * kPi / 243.0);
}

double gamma_product_lhs(long long N) {
    require_at_least(N, 2, "gamma_product_lhs: N");
    CompensatedSum acc;
    for (long long n = 2; n <= N; ++n) {
        const double nn = static_cast<double>(n);
        // 2n log((n+1)/(n-1)) - 4n log((2n+1)/(2n-1))
        acc += 2.0 * nn * std::log1p(2.0 / (nn - 1.0));
        acc -= 4.0 * nn * std::log1p(2.0 / (2.0 * nn - 1.0));
    }
    return acc.value();
}

double gamma_product_rhs(long long N) {
    require_at_least(N, 2, "gamma_product_rhs: N");
    const double nn = static_cast<double>(N);
    const double mid = 1.0 / (2.0 * nn + 1.0);
    // 2N [log(N/(N+1/2)) + log((N+1)/(N+1/2))]
    const double powers = 2.0 * nn * (std::log1p(-mid) + std::log1p(mid));
    const double gammas = 4.0 * specfun::log_gamma(nn + 0.5) - 2.0 * specfun::log_gamma(nn) -
                          2.0 * specfun::log_gamma(nn + 1.0);
    return std::log(81.0 / (4.0 * kPi * kPi)) + powers + gammas;
}

double gamma_product_rhs_shifted(long long N) {
    require_at_least(N, 2, "gamma_product_rhs_shifted: N");
    const double nn = static_cast<double>(N);
    const double mid = 1.0 / (2.0 * nn + 3.0);
    // 2N [log((N+2)/(N+3/2)) + log((N+1)/(N+3/2))]
    const double powers = 2.0 * nn * (std::log1p(mid) + std::log1p(-mid));
    const double gammas = 4.0 * specfun::log_gamma(nn + 0.5) - 2.0 * specfun::log_gamma(nn) -
                          2.0 * specfun::log_gamma(nn + 1.0);
    return std::log(81.0 / (4.0 * kPi * kPi)) + powers + gammas;
}

std::pair<double, double> superfactorial_identity(long long N) {
    require_at_least(N, 1, "superfactorial_identity: N");
    CompensatedSum lhs;
    CompensatedSum factorials;
    for (long long n = 1; n <= N; ++n) {
        const double nn = static_cast<double>(n);
        lhs += nn * std::log1p(nn);
        factorials += specfun::log_gamma(nn + 1.0);
    }
    const double nn = static_cast<double>(N);
    const double rhs = nn * specfun::log_gamma(nn + 2.0) - factorials.value();
    return {lhs.value(), rhs};
}

double euler_92_log_partial(long long N) {
    require_at_least(N, 1, "euler_92_log_partial: N");
    CompensatedSum acc;
    for (long long n = 2; n <= N; ++n) {
        acc += euler_92_summand(n);
    }
    return acc.value();
}

double euler_92_product(long long N) {
    require_at_least(N, 2, "euler_92_product: N");
    return 4.5 * std::exp(euler_92_log_partial(N));
}

double euler_92_tail(long long N, int K) {
    require_at_least(N, 1, "euler_92_tail: N");
    require_at_least(K, 1, "euler_92_tail: K");
    CompensatedSum acc;
    for (int j = K; j >= 1; --j) {
        acc += euler_92_coefficient(j) * specfun::zeta_tail(2.0 * j, N);
    }
    return acc.value();
}

accel::ExtrapolationTable euler_92_wynn_table(long long budget) {
    const std::vector<long long> schedule = accel::doubling_schedule(budget);
    std::vector<double> partials;
    partials.reserve(schedule.size());
    CompensatedSum acc;
    long long next = 2;
    for (long long stop : schedule) {
        for (; next <= stop; ++next) {
            acc += euler_92_summand(next);
        }
        partials.push_back(acc.value());
    }
    const int max_order = static_cast<int>((partials.size() - 1) / 2);
    if (max_order < 1) {
        throw std::domain_error("euler_92_wynn_table: budget too small for extrapolation");
    }
    accel::ExtrapolationTable table = accel::wynn_epsilon(partials, max_order);
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        table.base[i].index = static_cast<double>(schedule[i]);
    }
    return table;
}

double euler_92_extrapolated(long long budget) {
    return 4.5 * std::exp(euler_92_wynn_table(budget).best);
}

}  // namespace piprod::chains
