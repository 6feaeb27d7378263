#include "grunbaum/quadrature.hpp"

#include <cmath>
#include <queue>
#include <vector>

namespace grunbaum {

namespace {

constexpr double kBigErr = 1e50;  // sentinel for cells with non-finite samples

struct Node1 {
    double a, b;
    double value;
    double err;
    bool frozen = false;
};

struct CmpErr {
    bool operator()(const Node1& lhs, const Node1& rhs) const {
        return (lhs.frozen ? -1.0 : lhs.err) < (rhs.frozen ? -1.0 : rhs.err);
    }
};

// Simpson with Richardson halving when the five samples are finite,
// otherwise the open midpoint rule on the two halves.
Node1 estimate1(const std::function<double(double)>& f, double a, double b) {
    const double h = b - a;
    const double m = 0.5 * (a + b);
    const double q1 = 0.5 * (a + m);
    const double q3 = 0.5 * (m + b);
    const double fm = f(m), fq1 = f(q1), fq3 = f(q3);
    if (std::isfinite(fm) && std::isfinite(fq1) && std::isfinite(fq3)) {
        const double fa = f(a), fb = f(b);
        if (std::isfinite(fa) && std::isfinite(fb)) {
            const double s1 = h * (fa + 4.0 * fm + fb) / 6.0;
            const double s2 = h * (fa + 4.0 * fq1 + 2.0 * fm + 4.0 * fq3 + fb) / 12.0;
            if (std::isfinite(s1) && std::isfinite(s2)) {
                const double corr = (s2 - s1) / 15.0;
                return {a, b, s2 + corr, std::abs(corr)};
            }
        }
        const double m1 = h * fm;
        const double m2 = 0.5 * h * (fq1 + fq3);
        if (std::isfinite(m1) && std::isfinite(m2)) {
            const double corr = (m2 - m1) / 3.0;
            return {a, b, m2 + corr, std::abs(corr)};
        }
    }
    return {a, b, 0.0, kBigErr * std::abs(h)};
}

struct Node2 {
    double ax, bx, ay, by;
    double value;
    double err;
    bool frozen = false;
};

struct CmpErr2 {
    bool operator()(const Node2& lhs, const Node2& rhs) const {
        return (lhs.frozen ? -1.0 : lhs.err) < (rhs.frozen ? -1.0 : rhs.err);
    }
};

Node2 estimate2(const std::function<double(double, double)>& f, double ax,
                double bx, double ay, double by) {
    const double area = (bx - ax) * (by - ay);
    const double cx = 0.5 * (ax + bx), cy = 0.5 * (ay + by);
    const double qx0 = 0.5 * (ax + cx), qx1 = 0.5 * (cx + bx);
    const double qy0 = 0.5 * (ay + cy), qy1 = 0.5 * (cy + by);
    const double m1 = f(cx, cy) * area;
    const double m4 =
        0.25 * area * (f(qx0, qy0) + f(qx0, qy1) + f(qx1, qy0) + f(qx1, qy1));
    if (std::isfinite(m1) && std::isfinite(m4)) {
        const double corr = (m4 - m1) / 3.0;
        return {ax, bx, ay, by, m4 + corr, std::abs(corr)};
    }
    return {ax, bx, ay, by, 0.0, kBigErr * std::abs(area)};
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts) {
    require(opts.abs_tol > 0.0, "integrate: tolerance must be positive");
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }

    std::priority_queue<Node1, std::vector<Node1>, CmpErr> heap;
    double total_value = 0.0, total_err = 0.0;
    auto push = [&](Node1 n) {
        // An interval with no representable midpoint cannot improve.
        const double m = 0.5 * (n.a + n.b);
        if (m <= n.a || m >= n.b) n.frozen = true;
        total_value += n.value;
        total_err += n.err;
        heap.push(n);
    };

    // Seed with a few panels so structure away from [a,b]'s ends is seen.
    const int seed_panels = 8;
    for (int j = 0; j < seed_panels; ++j) {
        const double x0 = a + (b - a) * j / seed_panels;
        const double x1 = a + (b - a) * (j + 1) / seed_panels;
        push(estimate1(f, x0, x1));
    }

    long splits = 0;
    bool stuck = false;
    while (total_err > opts.abs_tol) {
        const Node1 top = heap.top();
        if (top.frozen || top.err <= 0.0) {
            stuck = true;  // nothing left to refine
            break;
        }
        heap.pop();
        total_value -= top.value;
        total_err -= top.err;
        const double m = 0.5 * (top.a + top.b);
        push(estimate1(f, top.a, m));
        push(estimate1(f, m, top.b));
        if (++splits > opts.budget) {
            throw QuadratureError("integrate: interval budget exhausted",
                                  sign * total_value);
        }
    }

    // Recompute the total once to shed running-sum drift.
    double value = 0.0, err = 0.0;
    while (!heap.empty()) {
        value += heap.top().value;
        err += heap.top().err;
        heap.pop();
    }
    if (stuck && err > 8.0 * opts.abs_tol) {
        throw QuadratureError("integrate: tolerance not reached", sign * value);
    }
    return sign * value;
}

double integrate2(const std::function<double(double, double)>& f, double ax,
                  double bx, double ay, double by,
                  const QuadratureOptions& opts) {
    require(opts.abs_tol > 0.0, "integrate2: tolerance must be positive");
    require(bx >= ax && by >= ay, "integrate2: malformed rectangle");
    if (bx == ax || by == ay) return 0.0;

    std::priority_queue<Node2, std::vector<Node2>, CmpErr2> heap;
    double total_value = 0.0, total_err = 0.0;
    auto push = [&](Node2 n) {
        const double cx = 0.5 * (n.ax + n.bx), cy = 0.5 * (n.ay + n.by);
        if (cx <= n.ax || cx >= n.bx || cy <= n.ay || cy >= n.by) n.frozen = true;
        total_value += n.value;
        total_err += n.err;
        heap.push(n);
    };

    for (int jx = 0; jx < 2; ++jx) {
        for (int jy = 0; jy < 2; ++jy) {
            const double x0 = ax + (bx - ax) * jx / 2.0;
            const double x1 = ax + (bx - ax) * (jx + 1) / 2.0;
            const double y0 = ay + (by - ay) * jy / 2.0;
            const double y1 = ay + (by - ay) * (jy + 1) / 2.0;
            push(estimate2(f, x0, x1, y0, y1));
        }
    }

    long splits = 0;
    bool stuck = false;
    while (total_err > opts.abs_tol) {
        const Node2 top = heap.top();
        if (top.frozen || top.err <= 0.0) {
            stuck = true;
            break;
        }
        heap.pop();
        total_value -= top.value;
        total_err -= top.err;
        const double cx = 0.5 * (top.ax + top.bx), cy = 0.5 * (top.ay + top.by);
        push(estimate2(f, top.ax, cx, top.ay, cy));
        push(estimate2(f, top.ax, cx, cy, top.by));
        push(estimate2(f, cx, top.bx, top.ay, cy));
        push(estimate2(f, cx, top.bx, cy, top.by));
        if (++splits > opts.budget) {
            throw QuadratureError("integrate2: interval budget exhausted", total_value);
        }
    }

    double value = 0.0, err = 0.0;
    while (!heap.empty()) {
        value += heap.top().value;
        err += heap.top().err;
        heap.pop();
    }
    if (stuck && err > 8.0 * opts.abs_tol) {
        throw QuadratureError("integrate2: tolerance not reached", value);
    }
    return value;
}

}  // namespace grunbaum
