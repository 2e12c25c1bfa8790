#pragma once

#include <functional>

namespace piprod::quad {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    int panels = 0;
    bool converged = false;
};

struct QuadratureOptions {
    /// Absolute tolerance on the whole integral.
    double tolerance = 1e-12;
    /// Budget for adaptive interior panels.
    int max_panels = 4096;
    /// Width of the endpoint panels split off at t = 0 and t = 1.
    double guard_width = 1e-3;
};

/// log(sin(pi t)) for t in (0, 1), evaluated through the nearer endpoint so
/// that neither the argument nor the logarithm loses digits.
double log_sin_pi(double t);

/// log(sin(pi d)) where d is the distance from t to the nearer of 0 or 1.
double log_sin_pi_from_edge(double d);

/// Integral of weight(t) * log(sin(pi t)) over [lower, upper] within [0, 1].
///
/// An endpoint at exactly 0 or 1 is a logarithmic singularity. A guard panel
/// of width guard_width is split off there and integrated with a tanh-sinh
/// substitution that feeds the integrand the exact distance to the endpoint.
/// The remaining interval is handled by adaptive Gauss-Kronrod (7/15).
QuadratureResult integrate_logsin_weighted(const std::function<double(double)>& weight,
                                           double lower, double upper,
                                           const QuadratureOptions& options = {});

/// Integral of t log(sin(pi t)) over [0, upper], 0 < upper <= 1.
QuadratureResult integrate_t_logsin(double upper, const QuadratureOptions& options = {});

/// Integral of t log(sin(pi t)) over [lower, upper], 0 <= lower < upper <= 1.
QuadratureResult integrate_t_logsin(double lower, double upper,
                                    const QuadratureOptions& options = {});

/// R(y) = 2 y * integral_0^{1/sqrt y} t log(sin(pi t)) dt for y >= 1.
/// Throws std::domain_error for y < 1, NumericalFailure if quadrature fails.
double r_of_y(double y);

}  // namespace piprod::quad
