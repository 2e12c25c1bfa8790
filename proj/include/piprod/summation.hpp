#pragma once

#include <cmath>

#ifdef __FAST_MATH__
#error "fast math reassociates floating point and breaks compensated summation"
#endif

namespace piprod {

/// Neumaier's variant of Kahan summation. The carry is folded in on read.
class CompensatedSum {
public:
    CompensatedSum() = default;
    explicit CompensatedSum(double start) : sum_(start) {}

    CompensatedSum& operator+=(double x) {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
        return *this;
    }

    CompensatedSum& operator-=(double x) { return *this += -x; }

    [[nodiscard]] double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

}  // namespace piprod
