#pragma once

#include <numbers>

namespace piprod {

// Reference constants for reporting only. Cross-validation code paths compute
// their own values and never compare against these.
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kE = std::numbers::e;
inline constexpr double kLn2 = std::numbers::ln2;

}  // namespace piprod
