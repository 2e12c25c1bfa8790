#include "piprod/afunc.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "piprod/errors.hpp"
#include "piprod/quad.hpp"
#include "piprod/summation.hpp"

namespace piprod::afunc {

namespace {

constexpr double kPi = std::numbers::pi;

void check_y(double y) {
    if (!(y > 0.25)) {
        throw std::domain_error("A-function needs y > 1/4, got " + std::to_string(y));
    }
}

}  // namespace

double AFunctionValue::value() const { return std::exp(log_A); }

int default_truncation(double y) { return y >= 1.0 ? 40 : 60; }

AFunctionValue log_A_series(double y, int K, const specfun::ZetaCache& cache) {
    check_y(y);
    if (K < 1) {
        throw std::domain_error("log_A_series: K must be >= 1");
    }
    if (K > cache.max_k()) {
        throw std::out_of_range("log_A_series: K = " + std::to_string(K) +
                                " exceeds zeta cache size " + std::to_string(cache.max_k()));
    }
    CompensatedSum acc;
    for (int k = K; k >= 1; --k) {
        acc += cache.even_minus_1(k) / ((k + 1) * std::pow(y, k));
    }
    const double next_coeff =
        K < cache.max_k() ? cache.even_minus_1(K + 1) : specfun::zeta_even_minus_1(K + 1);
    const double next_term = next_coeff / ((K + 2) * std::pow(y, K + 1));

    AFunctionValue out;
    out.y = y;
    out.log_A = acc.value();
    out.method = AMethod::series;
    out.truncation_K = K;
    out.est_error = next_term / (1.0 - 1.0 / (4.0 * y));
    return out;
}

AFunctionValue A_closed(double y) {
    if (!(y > 1.0)) {
        throw std::domain_error("A_closed: y must be > 1, got " + std::to_string(y));
    }
    const double sin_term = std::log(std::sin(kPi / std::sqrt(y)));
    const double power_term = y * std::log1p(-1.0 / y);
    const double r = quad::r_of_y(y);

    AFunctionValue out;
    out.y = y;
    out.log_A = -sin_term + power_term + 1.5 + r;
    out.method = AMethod::closed;
    out.truncation_K = 0;
    out.est_error = 1e-10;  // r_of_y's contracted accuracy dominates
    return out;
}

double p_ratio(double x, double y) {
    const AFunctionValue ax = log_A_series(x, default_truncation(x));
    const AFunctionValue ay = log_A_series(y, default_truncation(y));
    return std::exp(ay.log_A - ax.log_A);
}

double limit_sample(double h) {
    if (!(h > 0.0)) {
        throw std::domain_error("limit_sample: h must be > 0");
    }
    const double x = 1.0 + h;
    const double root = std::sqrt(x);
    // 1 - 1/x = h/x and pi - pi/sqrt(x) = pi h / (sqrt(x) (1 + sqrt(x)))
    const double log_power = -x * std::log(h / x);
    const double angle = kPi * h / (root * (1.0 + root));
    return std::exp(log_power) * std::sin(angle);
}

accel::ExtrapolationTable limit_at_one_table() {
    std::vector<accel::Sample> samples;
    for (int j = 4; j <= 20; ++j) {
        const double h = std::ldexp(1.0, -j);
        samples.push_back({h, limit_sample(h)});
    }
    constexpr std::array<double, 5> exponents = {1.0, 1.0, 2.0, 2.0, 2.0};
    return accel::richardson(samples, exponents);
}

double limit_at_one() {
    const accel::ExtrapolationTable table = limit_at_one_table();
    if (!(table.est_error <= 1e-8)) {
        throw NumericalFailure("limit_at_one: extrapolation unstable, estimated error " +
                               std::to_string(table.est_error));
    }
    return table.best;
}

accel::ExtrapolationTable product_wynn_table(double x, long long budget) {
    const std::vector<long long> schedule = accel::doubling_schedule(budget);
    const std::vector<double> partials = prodcore::corrected_partials(x, schedule);
    const int max_order = static_cast<int>((partials.size() - 1) / 2);
    if (max_order < 1) {
        throw std::domain_error("extrapolation needs a budget of at least 12 terms");
    }
    accel::ExtrapolationTable table = accel::wynn_epsilon(partials, max_order);
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        table.base[i].index = static_cast<double>(schedule[i]);
    }
    return table;
}

double pi_from_product(prodcore::Method method, long long terms, int tail_order) {
    using prodcore::Method;
    double limit_log = 0.0;
    switch (method) {
        case Method::naive:
            limit_log = prodcore::corrected_partial(1.0, terms).log_value;
            break;
        case Method::tail_corrected:
            limit_log = prodcore::tail_corrected_partial(1.0, terms, tail_order).log_value;
            break;
        case Method::extrapolated:
            limit_log = product_wynn_table(1.0, terms).best;
            break;
        case Method::series: {
            if (terms < 1 || terms > 1000) {
                throw std::domain_error("series method needs 1 <= K <= 1000");
            }
            const int K = static_cast<int>(terms);
            std::unique_ptr<specfun::ZetaCache> local;
            const specfun::ZetaCache* cache = &specfun::default_zeta_cache();
            if (K >= cache->max_k()) {
                local = std::make_unique<specfun::ZetaCache>(K + 1);
                cache = local.get();
            }
            limit_log = -log_A_series(1.0, K, *cache).log_A;
            break;
        }
    }
    return std::exp(1.5 + limit_log);
}

}  // namespace piprod::afunc
