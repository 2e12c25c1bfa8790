#include "piprod/table.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>
#include <string>

#include "piprod/afunc.hpp"
#include "piprod/chains.hpp"
#include "piprod/prodcore.hpp"
#include "piprod/specfun.hpp"

namespace piprod::table {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

std::string_view to_string(Target t) {
    switch (t) {
        case Target::pi_product: return "pi_product";
        case Target::euler_product: return "euler_product";
        case Target::s_series: return "s_series";
        case Target::a_series: return "a_series";
    }
    return "unknown";
}

Target parse_target(std::string_view name) {
    for (Target t : {Target::pi_product, Target::euler_product, Target::s_series, Target::a_series}) {
        if (name == to_string(t)) {
            return t;
        }
    }
    throw std::invalid_argument("unknown table target: " + std::string(name));
}

long long max_n(Target t) { return t == Target::a_series ? 1000 : 100000000; }

std::vector<long long> geometric_schedule(long long n_start, long long n_stop, double factor) {
    if (n_start < 2 || n_stop <= n_start) {
        throw std::domain_error("need 2 <= n-start < n-stop");
    }
    if (!(factor > 1.0) || !std::isfinite(factor)) {
        throw std::domain_error("n-factor must be > 1");
    }
    std::vector<long long> out;
    double next = static_cast<double>(n_start);
    while (next <= static_cast<double>(n_stop) * (1.0 + 1e-12)) {
        const long long n = std::llround(next);
        if (out.empty() || n > out.back()) {
            out.push_back(n);
        }
        next *= factor;
    }
    return out;
}

std::vector<Row> convergence_table(Target target, long long n_start, long long n_stop,
                                   double factor) {
    if (n_stop > max_n(target)) {
        throw std::domain_error("n-stop exceeds " + std::to_string(max_n(target)) + " for " +
                                std::string(to_string(target)));
    }
    const std::vector<long long> schedule = geometric_schedule(n_start, n_stop, factor);
    std::vector<Row> rows;
    rows.reserve(schedule.size());

    switch (target) {
        case Target::pi_product: {
            const std::vector<double> logs = prodcore::corrected_partials(1.0, schedule);
            for (std::size_t i = 0; i < schedule.size(); ++i) {
                const double v = std::exp(1.5 + logs[i]);
                rows.push_back({schedule[i], v, std::fabs(v - kPi), {}});
            }
            break;
        }
        case Target::euler_product:
            for (long long n : schedule) {
                const double v = chains::euler_92_product(n);
                rows.push_back({n, v, std::fabs(v - kPi), {}});
            }
            break;
        case Target::s_series: {
            const double ref = 3.5 * specfun::apery();
            for (long long n : schedule) {
                const double v = chains::s_direct(n);
                rows.push_back({n, v, std::fabs(v - ref), {}});
            }
            break;
        }
        case Target::a_series: {
            const double ref = std::exp(1.5) / kPi;
            std::unique_ptr<specfun::ZetaCache> local;
            const specfun::ZetaCache* cache = &specfun::default_zeta_cache();
            if (schedule.back() >= cache->max_k()) {
                local = std::make_unique<specfun::ZetaCache>(static_cast<int>(schedule.back()) + 1);
                cache = local.get();
            }
            for (long long n : schedule) {
                const double v = afunc::log_A_series(1.0, static_cast<int>(n), *cache).value();
                rows.push_back({n, v, std::fabs(v - ref), {}});
            }
            break;
        }
    }

    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double prev = rows[i - 1].abs_err;
        const double cur = rows[i].abs_err;
        if (prev > 0.0 && cur > 0.0) {
            const double gain = std::log(prev / cur);
            if (target == Target::a_series) {
                rows[i].observed_order =
                    gain / std::log(10.0) / static_cast<double>(rows[i].n - rows[i - 1].n);
            } else {
                rows[i].observed_order =
                    gain / std::log(static_cast<double>(rows[i].n) / static_cast<double>(rows[i - 1].n));
            }
        }
    }
    return rows;
}

}  // namespace piprod::table
