#include "piprod/bench.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "piprod/accel.hpp"
#include "piprod/afunc.hpp"
#include "piprod/chains.hpp"
#include "piprod/prodcore.hpp"

namespace piprod::bench {

namespace {

constexpr double kPi = std::numbers::pi;

Estimate against_pi(double value) { return {value, std::fabs(value - kPi)}; }

// Richardson in h = 1/N over the log partials of a Wynn table.
double richardson_log(const accel::ExtrapolationTable& wynn) {
    std::vector<accel::Sample> samples;
    for (const accel::Sample& s : wynn.base) {
        samples.push_back({1.0 / s.index, s.value});
    }
    const int order = static_cast<int>(samples.size()) - 1;
    return accel::richardson(samples, order).best;
}

}  // namespace

std::string_view to_string(Target t) {
    return t == Target::pi_product ? "pi_product" : "euler_product";
}

Target parse_target(std::string_view name) {
    if (name == "pi_product") {
        return Target::pi_product;
    }
    if (name == "euler_product") {
        return Target::euler_product;
    }
    throw std::invalid_argument("unknown bench target: " + std::string(name));
}

BenchResult run(Target target, long long budget) {
    if (budget < kMinBudget) {
        throw std::domain_error("bench budget must be >= " + std::to_string(kMinBudget));
    }
    BenchResult r;
    r.target = target;
    r.budget = budget;
    r.reference = kPi;

    if (target == Target::pi_product) {
        using prodcore::Method;
        r.naive = against_pi(afunc::pi_from_product(Method::naive, budget));
        const accel::ExtrapolationTable table = afunc::product_wynn_table(1.0, budget);
        r.wynn = against_pi(std::exp(1.5 + table.best));
        r.tail = against_pi(afunc::pi_from_product(Method::tail_corrected, budget, kTailOrder));
        r.richardson = against_pi(std::exp(1.5 + richardson_log(table)));
    } else {
        r.naive = against_pi(chains::euler_92_product(budget));
        const accel::ExtrapolationTable table = chains::euler_92_wynn_table(budget);
        r.wynn = against_pi(4.5 * std::exp(table.best));
        const double tail_log =
            chains::euler_92_log_partial(budget) + chains::euler_92_tail(budget, kTailOrder);
        r.tail = against_pi(4.5 * std::exp(tail_log));
        r.richardson = against_pi(4.5 * std::exp(richardson_log(table)));
    }
    r.digits_wynn = accel::digits_gained(kPi, r.naive.value, r.wynn.value);
    r.digits_tail = accel::digits_gained(kPi, r.naive.value, r.tail.value);
    r.digits_richardson = accel::digits_gained(kPi, r.naive.value, r.richardson.value);
    return r;
}

}  // namespace piprod::bench
