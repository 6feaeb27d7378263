#pragma once

#include "grunbaum/common.hpp"

#include <functional>

namespace grunbaum {

/// Thrown when the interval budget runs out before the requested
/// tolerance is met; carries the best value so far.
struct QuadratureError : Error {
    QuadratureError(const std::string& what, double partial_value)
        : Error(what), partial(partial_value) {}
    double partial;
};

struct QuadratureOptions {
    double abs_tol = 1e-10;
    // Total number of interval refinements allowed.
    long budget = 1'000'000;
};

/// Adaptive 1-D integral of f over [a, b].
///
/// Intervals whose endpoint values are finite are estimated by Simpson
/// with Richardson halving; intervals touching a non-finite endpoint
/// fall back to the open midpoint rule. Refinement is driven by a global
/// error heap, so integrable endpoint singularities (power/log) are
/// resolved without poisoning the smooth part of the domain.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = {});

/// Adaptive 2-D integral of f over [ax, bx] x [ay, by] by quadrant
/// refinement with midpoint/Richardson cell estimates (open rule; the
/// integrand is never evaluated on the boundary).
double integrate2(const std::function<double(double, double)>& f, double ax,
                  double bx, double ay, double by,
                  const QuadratureOptions& opts = {});

}  // namespace grunbaum
