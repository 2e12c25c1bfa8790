#pragma once

#include <string>
#include <string_view>

namespace piprod::bench {

enum class Target { pi_product, euler_product };

std::string_view to_string(Target t);

/// Throws std::invalid_argument for an unknown name.
Target parse_target(std::string_view name);

struct Estimate {
    double value = 0.0;
    double abs_err = 0.0;
};

/// Every estimate below uses at most `budget` terms of the same product.
struct BenchResult {
    Target target = Target::pi_product;
    long long budget = 0;
    double reference = 0.0;
    Estimate naive;
    Estimate wynn;
    Estimate tail;        // K = 6
    Estimate richardson;  // on the Wynn schedule, for comparison only
    double digits_wynn = 0.0;
    double digits_tail = 0.0;
    double digits_richardson = 0.0;
};

inline constexpr long long kMinBudget = 20;
inline constexpr int kTailOrder = 6;

/// Throws std::domain_error when budget < kMinBudget.
BenchResult run(Target target, long long budget);

}  // namespace piprod::bench
