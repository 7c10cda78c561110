#pragma once

#include <functional>

namespace ratiolab {

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;  // summed Gauss-Kronrod error estimate
    int intervals = 0;
};

// Globally adaptive Gauss-Kronrod (G7, K15): repeatedly bisects the interval
// with the largest error estimate until the total estimate satisfies
// max(abs_tol, rel_tol * |value|). Endpoints are never evaluated (all K15
// abscissae are interior), so integrable endpoint behavior is tolerated.
// Throws numerical_error when the interval budget runs out.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol = 1e-12, double rel_tol = 1e-12,
                           int max_intervals = 4000);

}  // namespace ratiolab
