#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace piprod::accel {

struct Sample {
    double index;  // step size h for Richardson, position or N for Wynn
    double value;
};

enum class ExtrapolationMethod { richardson, wynn_epsilon };

std::string_view to_string(ExtrapolationMethod m);

/// Triangular table of accelerated values.
///
/// For Richardson, estimates[m] is the column after eliminating m error terms.
/// For Wynn, estimates[m] is the even column epsilon_{2m}; entries that hit the
/// denominator guard are NaN and never selected.
struct ExtrapolationTable {
    std::vector<Sample> base;
    std::vector<std::vector<double>> estimates;
    double best = 0.0;
    double est_error = 0.0;
    /// Column that produced `best`.
    int best_order = 0;
    ExtrapolationMethod method = ExtrapolationMethod::richardson;
};

/// Richardson extrapolation to h -> 0 assuming
///   f(h) = L + c1 h^p + c2 h^{2p} + ...,  p = exponent_step.
/// Works for any strictly decreasing positive h (Neville form in h^p).
/// Throws std::invalid_argument on a degenerate table or order >= base size.
ExtrapolationTable richardson(std::span<const Sample> base, int order, double exponent_step = 1.0);

/// Richardson with an explicit exponent per column. Repeating an exponent m
/// times removes h^p log^i(h) terms for i < m; that only holds for a constant
/// ratio h_i / h_{i+1}, which is therefore required.
ExtrapolationTable richardson(std::span<const Sample> base, std::span<const double> exponents);

/// Denominators smaller than this, relative to the local scale, are unusable.
inline constexpr double kWynnGuard = 1e-14;

/// Wynn epsilon algorithm on a sequence of values, up to epsilon_{2 max_order}.
/// Needs at least 2 * max_order + 1 values. best comes from the deepest even
/// column whose trailing difference is no larger than that of the shallower
/// pick, or failing that the deepest usable column. Throws NumericalFailure
/// when no even column is usable.
ExtrapolationTable wynn_epsilon(std::span<const double> values, int max_order);

/// log10(|naive - target| / |accelerated - target|), denominator floored at 1e-300.
double digits_gained(double target, double naive_value, double accelerated_value);

/// N0 * 2^j for j = 0..m with the largest m such that N0 = budget / 2^m >= min_start.
std::vector<long long> doubling_schedule(long long budget, long long min_start = 3);

}  // namespace piprod::accel
