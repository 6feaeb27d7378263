#pragma once

#include "grunbaum/common.hpp"
#include "grunbaum/rng.hpp"

#include <functional>
#include <vector>

namespace grunbaum {

/// Halton low-discrepancy point in [0,1)^dim (bases 2,3,5,7,11,13).
Vec halton_point(long index, int dim);

struct SearchTrace {
    long evals = 0;
    int starts = 0;
    double final_step = 0.0;
    std::vector<double> argbest;
};

struct PatternSearchOptions {
    int starts = 16;
    double shrink = 0.5;
    double initial_step_rel = 0.25;  // of the box extent
    double step_tol = 1e-5;          // absolute step size at termination
};

/// Multistart coordinate pattern search maximizing f over a box, with an
/// optional feasibility predicate (infeasible probes are skipped). The
/// first start is always the origin when it is feasible and inside the box.
struct PatternSearchResult {
    Vec x;
    double value = 0.0;
    SearchTrace trace;
};
PatternSearchResult pattern_search_max(
    const std::function<double(const Vec&)>& f, const Vec& lo, const Vec& hi,
    const std::function<bool(const Vec&)>& feasible,
    const PatternSearchOptions& opts);

/// Deterministic direction grid on S^{k-1}: +-1 for k = 1, uniform angles
/// for k = 2, a Fibonacci sphere for k = 3, seeded uniform samples above.
std::vector<Vec> direction_grid(int k, int count, const Seed& seed);

/// Pattern search on the unit sphere minimizing f, started from `start`.
Vec refine_direction_min(const std::function<double(const Vec&)>& f, Vec start,
                         double initial_step, double step_tol, double shrink);

}  // namespace grunbaum
