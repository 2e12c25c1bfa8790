#include "piprod/accel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "piprod/errors.hpp"

namespace piprod::accel {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_base(std::span<const Sample> base, std::size_t order) {
    if (base.size() < 3) {
        throw std::invalid_argument("richardson: need at least 3 samples");
    }
    if (order >= base.size()) {
        throw std::invalid_argument("richardson: order " + std::to_string(order) +
                                    " needs more than " + std::to_string(base.size()) + " samples");
    }
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (!(base[i].index > 0.0)) {
            throw std::invalid_argument("richardson: step sizes must be positive");
        }
        if (i > 0 && !(base[i].index < base[i - 1].index)) {
            throw std::invalid_argument("richardson: step sizes must be strictly decreasing");
        }
    }
}

double column_error(const std::vector<std::vector<double>>& columns, std::size_t m) {
    const auto& col = columns[m];
    if (col.size() >= 2) {
        return std::fabs(col.back() - col[col.size() - 2]);
    }
    if (m == 0) {
        return 0.0;
    }
    return std::fabs(col.back() - columns[m - 1].back());
}

ExtrapolationTable finish_richardson(std::span<const Sample> base,
                                     std::vector<std::vector<double>> columns) {
    ExtrapolationTable table;
    table.base.assign(base.begin(), base.end());
    table.method = ExtrapolationMethod::richardson;
    table.best_order = static_cast<int>(columns.size()) - 1;
    table.best = columns.back().back();
    table.est_error = column_error(columns, columns.size() - 1);
    table.estimates = std::move(columns);
    return table;
}

}  // namespace

std::string_view to_string(ExtrapolationMethod m) {
    return m == ExtrapolationMethod::richardson ? "richardson" : "wynn_epsilon";
}

ExtrapolationTable richardson(std::span<const Sample> base, int order, double exponent_step) {
    if (order < 0) {
        throw std::invalid_argument("richardson: order must be >= 0");
    }
    if (!(exponent_step > 0.0)) {
        throw std::invalid_argument("richardson: exponent_step must be > 0");
    }
    const auto m_max = static_cast<std::size_t>(order);
    check_base(base, m_max);

    std::vector<std::vector<double>> columns;
    columns.reserve(m_max + 1);
    std::vector<double> first;
    first.reserve(base.size());
    for (const Sample& s : base) {
        first.push_back(s.value);
    }
    columns.push_back(std::move(first));
    for (std::size_t m = 1; m <= m_max; ++m) {
        const auto& prev = columns.back();
        std::vector<double> next(prev.size() - 1);
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
            const double ratio = std::pow(base[i].index / base[i + m].index, exponent_step);
            next[i] = prev[i + 1] + (prev[i + 1] - prev[i]) / (ratio - 1.0);
        }
        columns.push_back(std::move(next));
    }
    return finish_richardson(base, std::move(columns));
}

ExtrapolationTable richardson(std::span<const Sample> base, std::span<const double> exponents) {
    check_base(base, exponents.size());
    const double ratio = base[0].index / base[1].index;
    for (std::size_t i = 1; i + 1 < base.size(); ++i) {
        const double r = base[i].index / base[i + 1].index;
        if (std::fabs(r - ratio) > 1e-12 * ratio) {
            throw std::invalid_argument("richardson: explicit exponents need a geometric step schedule");
        }
    }
    std::vector<std::vector<double>> columns;
    std::vector<double> first;
    for (const Sample& s : base) {
        first.push_back(s.value);
    }
    columns.push_back(std::move(first));
    for (double p : exponents) {
        if (!(p > 0.0)) {
            throw std::invalid_argument("richardson: exponents must be positive");
        }
        const double factor = std::pow(ratio, p);
        const auto& prev = columns.back();
        std::vector<double> next(prev.size() - 1);
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) {
            next[i] = (factor * prev[i + 1] - prev[i]) / (factor - 1.0);
        }
        columns.push_back(std::move(next));
    }
    return finish_richardson(base, std::move(columns));
}

ExtrapolationTable wynn_epsilon(std::span<const double> values, int max_order) {
    if (max_order < 1) {
        throw std::invalid_argument("wynn_epsilon: max_order must be >= 1");
    }
    const std::size_t needed = 2 * static_cast<std::size_t>(max_order) + 1;
    if (values.size() < needed) {
        throw std::invalid_argument("wynn_epsilon: need at least " + std::to_string(needed) +
                                    " values, got " + std::to_string(values.size()));
    }

    ExtrapolationTable table;
    table.method = ExtrapolationMethod::wynn_epsilon;
    for (std::size_t i = 0; i < values.size(); ++i) {
        table.base.push_back({static_cast<double>(i), values[i]});
    }

    // eps_{k+1}^{(n)} = eps_{k-1}^{(n+1)} + 1 / (eps_k^{(n+1)} - eps_k^{(n)})
    std::vector<double> older(values.size() + 1, 0.0);
    std::vector<double> current(values.begin(), values.end());
    table.estimates.push_back(current);
    const std::size_t max_column = 2 * static_cast<std::size_t>(max_order);
    for (std::size_t k = 1; k <= max_column && current.size() > 1; ++k) {
        std::vector<double> next(current.size() - 1);
        for (std::size_t n = 0; n + 1 < current.size(); ++n) {
            const double diff = current[n + 1] - current[n];
            const double scale = std::max(std::fabs(current[n + 1]), std::fabs(current[n]));
            if (std::isnan(diff) || std::fabs(diff) <= kWynnGuard * scale || diff == 0.0) {
                next[n] = kNaN;
            } else {
                next[n] = older[n + 1] + 1.0 / diff;
            }
        }
        older = std::move(current);
        current = std::move(next);
        if (k % 2 == 0) {
            table.estimates.push_back(current);
        }
    }

    // Deepest even column whose trailing difference does not exceed that of
    // the best shallower column.
    const auto& raw = table.estimates[0];
    double best_error = std::fabs(raw.back() - raw[raw.size() - 2]);
    bool found = false;
    // used when no column beats the raw difference, e.g. a single-entry column
    int fallback = -1;
    double fallback_error = 0.0;
    for (std::size_t m = 1; m < table.estimates.size(); ++m) {
        const auto& col = table.estimates[m];
        if (col.empty() || std::isnan(col.back())) {
            continue;
        }
        double err;
        if (col.size() >= 2 && !std::isnan(col[col.size() - 2])) {
            err = std::fabs(col.back() - col[col.size() - 2]);
        } else {
            const auto& shallower = table.estimates[m - 1];
            if (shallower.empty() || std::isnan(shallower.back())) {
                continue;
            }
            err = std::fabs(col.back() - shallower.back());
        }
        fallback = static_cast<int>(m);
        fallback_error = err;
        if (err <= best_error) {
            best_error = err;
            table.best = col.back();
            table.best_order = static_cast<int>(m);
            found = true;
        }
    }
    if (!found && fallback < 0) {
        throw NumericalFailure("wynn_epsilon: every accelerated column is unusable");
    }
    if (!found) {
        best_error = fallback_error;
        table.best = table.estimates[fallback].back();
        table.best_order = fallback;
    }
    table.est_error = best_error;
    return table;
}

double digits_gained(double target, double naive_value, double accelerated_value) {
    const double naive_err = std::fabs(naive_value - target);
    const double accel_err = std::max(std::fabs(accelerated_value - target), 1e-300);
    return std::log10(naive_err / accel_err);
}

std::vector<long long> doubling_schedule(long long budget, long long min_start) {
    if (min_start < 1 || budget < min_start) {
        throw std::invalid_argument("doubling_schedule: need budget >= min_start >= 1");
    }
    int doublings = 0;
    while ((budget >> (doublings + 1)) >= min_start) {
        ++doublings;
    }
    const long long start = budget >> doublings;
    std::vector<long long> out;
    for (int j = 0; j <= doublings; ++j) {
        out.push_back(start << j);
    }
    return out;
}

}  // namespace piprod::accel
