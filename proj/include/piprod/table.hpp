#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace piprod::table {

enum class Target { pi_product, euler_product, s_series, a_series };

std::string_view to_string(Target t);

/// Throws std::invalid_argument for an unknown name.
Target parse_target(std::string_view name);

struct Row {
    long long n = 0;
    double estimate = 0.0;
    double abs_err = 0.0;
    /// log(err_prev / err) / log(n / n_prev); for a_series, digits gained per
    /// added term instead. Empty on the first row or when an error is zero.
    std::optional<double> observed_order;
};

/// n_start, n_start * factor, ... up to n_stop, rounded to integers, without
/// repeats. Throws std::domain_error unless 2 <= n_start < n_stop and factor > 1.
std::vector<long long> geometric_schedule(long long n_start, long long n_stop, double factor);

/// Largest N accepted per target (a_series counts zeta terms).
long long max_n(Target t);

/// pi_product: naive e-corrected product times e^{3/2}, against pi.
/// euler_product: the 9/2 product, against pi.
/// s_series: direct partial sum of ((-1)^n - 1)^2 / n^3, against (7/2) zeta(3).
/// a_series: A(1) from K = N series terms, against e^{3/2} / pi.
std::vector<Row> convergence_table(Target target, long long n_start, long long n_stop,
                                   double factor);

}  // namespace piprod::table
