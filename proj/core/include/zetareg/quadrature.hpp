#pragma once

#include <zetareg/types.hpp>

#include <functional>
#include <utility>
#include <vector>

namespace zetareg {

/// Result of a 1D adaptive integration.
struct QuadResult {
    Complex value{};
    double abs_err = 0.0;
    double abs_integral = 0.0;  // integral of |f|, for roundoff models
    int evals = 0;
    int panels = 0;  // intervals in the final partition
};

/// Adaptive Gauss-Kronrod 7/15 integration of a complex-valued integrand
/// over [a, b]. Worst-interval-first refinement against an absolute error
/// target. Throws QuadratureFailure if the panel budget is exhausted while
/// the error estimate is still above 10x the target.
QuadResult integrate_gk(const std::function<Complex(double)>& f, double a, double b,
                        double abs_tol, int max_panels);

/// Same, over a union of disjoint intervals (integrated left to right,
/// summed in order).
QuadResult integrate_gk_segments(const std::function<Complex(double)>& f,
                                 const std::vector<std::pair<double, double>>& segments,
                                 double abs_tol, int max_panels);

}  // namespace zetareg
