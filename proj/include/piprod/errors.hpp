#pragma once

#include <stdexcept>
#include <string>

namespace piprod {

/// A numerical routine could not reach its contracted accuracy
/// (quadrature out of panels, unstable extrapolation table).
class NumericalFailure : public std::runtime_error {
public:
    explicit NumericalFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace piprod
