#include "grunbaum/search.hpp"

#include <cmath>

namespace grunbaum {

namespace {

double halton(long index, int base) {
    double f = 1.0, r = 0.0;
    long j = index + 1;  // skip the origin of the sequence
    while (j > 0) {
        f /= base;
        r += f * (j % base);
        j /= base;
    }
    return r;
}

constexpr int kHaltonBases[] = {2, 3, 5, 7, 11, 13};

}  // namespace

Vec halton_point(long index, int dim) {
    require(dim >= 1 && dim <= 6, "halton_point: dim must be in [1, 6]");
    Vec p(dim);
    for (int d = 0; d < dim; ++d) p[d] = halton(index, kHaltonBases[d]);
    return p;
}

PatternSearchResult pattern_search_max(
    const std::function<double(const Vec&)>& f, const Vec& lo, const Vec& hi,
    const std::function<bool(const Vec&)>& feasible,
    const PatternSearchOptions& opts) {
    const int dim = static_cast<int>(lo.size());
    const double extent = (hi - lo).norm();
    require(extent > 0.0, "pattern_search_max: empty box");

    SearchTrace trace;
    auto eval = [&](const Vec& x) {
        ++trace.evals;
        return f(x);
    };
    auto in_box = [&](const Vec& x) {
        return (x.array() >= lo.array() - 1e-12).all() &&
               (x.array() <= hi.array() + 1e-12).all();
    };

    std::vector<Vec> starts;
    const Vec origin = Vec::Zero(dim);
    if (in_box(origin) && feasible(origin)) starts.push_back(origin);
    for (long idx = 0; static_cast<int>(starts.size()) < opts.starts && idx < 64 * opts.starts; ++idx) {
        const Vec u = halton_point(idx, dim);
        const Vec x = lo + u.cwiseProduct(hi - lo);
        if (feasible(x)) starts.push_back(x);
    }
    require(!starts.empty(), "pattern_search_max: no feasible start point");
    trace.starts = static_cast<int>(starts.size());

    Vec best_x = starts.front();
    double best_val = -std::numeric_limits<double>::infinity();
    double last_step = 0.0;
    for (const Vec& start : starts) {
        Vec x = start;
        double val = eval(x);
        double step = opts.initial_step_rel * extent;
        while (step > opts.step_tol) {
            bool improved = false;
            Vec cand_x = x;
            double cand_val = val;
            for (int d = 0; d < dim; ++d) {
                for (double sgn : {1.0, -1.0}) {
                    Vec probe = x;
                    probe[d] += sgn * step;
                    if (!in_box(probe) || !feasible(probe)) continue;
                    const double pv = eval(probe);
                    if (pv > cand_val) {
                        cand_val = pv;
                        cand_x = probe;
                        improved = true;
                    }
                }
            }
            if (improved) {
                x = cand_x;
                val = cand_val;
            } else {
                step *= opts.shrink;
            }
        }
        last_step = step;
        if (val > best_val) {
            best_val = val;
            best_x = x;
        }
    }
    trace.final_step = last_step;
    trace.argbest.assign(best_x.data(), best_x.data() + best_x.size());
    return {best_x, best_val, trace};
}

std::vector<Vec> direction_grid(int k, int count, const Seed& seed) {
    require(k >= 1, "direction_grid: bad dimension");
    std::vector<Vec> dirs;
    if (k == 1) {
        Vec plus(1), minus(1);
        plus[0] = 1.0;
        minus[0] = -1.0;
        return {plus, minus};
    }
    if (k == 2) {
        dirs.reserve(count);
        for (int j = 0; j < count; ++j) {
            const double theta = 2.0 * M_PI * j / count;
            Vec u(2);
            u[0] = std::cos(theta);
            u[1] = std::sin(theta);
            dirs.push_back(u);
        }
        return dirs;
    }
    if (k == 3) {
        // Fibonacci sphere.
        dirs.reserve(count);
        const double golden = M_PI * (3.0 - std::sqrt(5.0));
        for (int j = 0; j < count; ++j) {
            const double z = 1.0 - 2.0 * (j + 0.5) / count;
            const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
            const double theta = golden * j;
            Vec u(3);
            u[0] = r * std::cos(theta);
            u[1] = r * std::sin(theta);
            u[2] = z;
            dirs.push_back(u);
        }
        return dirs;
    }
    Rng rng(seed);
    dirs.reserve(count);
    for (int j = 0; j < count; ++j) dirs.push_back(rng.unit_vector(k));
    return dirs;
}

Vec refine_direction_min(const std::function<double(const Vec&)>& f, Vec start,
                         double initial_step, double step_tol, double shrink) {
    const int k = static_cast<int>(start.size());
    Vec x = start / start.norm();
    double val = f(x);
    double step = initial_step;
    while (step > step_tol) {
        bool improved = false;
        // Probe along the coordinate tangent directions and renormalize.
        for (int d = 0; d < k; ++d) {
            for (double sgn : {1.0, -1.0}) {
                Vec probe = x;
                probe[d] += sgn * step;
                const double norm = probe.norm();
                if (norm < 1e-12) continue;
                probe /= norm;
                const double pv = f(probe);
                if (pv < val) {
                    val = pv;
                    x = probe;
                    improved = true;
                }
            }
        }
        if (!improved) step *= shrink;
    }
    return x;
}

}  // namespace grunbaum
