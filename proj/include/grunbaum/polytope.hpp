#pragma once

#include "grunbaum/common.hpp"
#include "grunbaum/rng.hpp"
#include "grunbaum/subspace.hpp"

#include <optional>
#include <vector>

namespace grunbaum {

/// One linear constraint <normal, x> <= offset with |normal| = 1.
struct Facet {
    Vec normal;
    double offset;
};

/// Half-space through the origin, {<x, xi> >= 0} (plus) or <= 0 (minus).
struct HalfSpace {
    Vec normal;  // unit
    enum class Side { plus, minus } side = Side::plus;
};

/// Full-dimensional convex polytope in vertex representation with a
/// facet (H-representation) cache computed at construction. Immutable.
class Polytope {
public:
    int ambient_dim() const { return dim_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }

    bool contains(const Vec& x, double tol = kGeomTol) const;
    std::pair<Vec, Vec> bounding_box() const;
    double circumradius() const;
    double diameter() const;

    Polytope translated(const Vec& t) const;
    Polytope scaled(double s) const;
    /// Image under an invertible linear map followed by a translation.
    Polytope transformed(const Mat& a, const Vec& t) const;

    friend Polytope hull(const std::vector<Vec>& points);

private:
    Polytope() = default;
    int dim_ = 0;
    std::vector<Vec> vertices_;
    std::vector<Facet> facets_;
};

/// Convex hull by exhaustive d-subset facet scan. Requires points that
/// affinely span the ambient space; throws on degenerate input.
Polytope hull(const std::vector<Vec>& points);

/// Exact Lebesgue volume via facet-pyramid recursion.
double volume(const Polytope& p);

/// Exact centroid (volume-weighted pyramid decomposition).
Vec centroid(const Polytope& p);

/// Sum of the (d-1)-volumes of the facets; V_{d-1} is half of this.
double surface_area(const Polytope& p);

/// K cap span(E) expressed in E-coordinates. Empty or lower-dimensional
/// sections yield nullopt (zero measure), not an exception.
std::optional<Polytope> section(const Polytope& p, const Subspace& e);

/// (K - x) cap span(E) in E-coordinates.
std::optional<Polytope> section_translated(const Polytope& p, const Subspace& e,
                                           const Vec& x);

/// Orthogonal projection K|E in E-coordinates.
Polytope project(const Polytope& p, const Subspace& e);

/// Clip by the half-space through the origin; empty side yields nullopt.
std::optional<Polytope> halfspace_cut(const Polytope& p, const HalfSpace& h);

/// Radial function rho_P(u) = max{a >= 0 : a u in P}; requires the
/// origin interior.
double radial(const Polytope& p, const Vec& u);

/// As radial(), but returns 0 instead of throwing when the origin is on
/// the boundary (or marginally outside); used by star-body estimators.
double radial_or_zero(const Polytope& p, const Vec& u);

/// Hull of m standard-normal points translated so the centroid is the
/// origin. Retries degenerate samples up to 8 times.
Polytope random_centered_polytope(int n, int m, const Seed& seed);

/// Vertices of a 2-D polytope in counter-clockwise order.
std::vector<Vec> vertices_ccw(const Polytope& p);

/// Perimeter of a 2-D polytope.
double perimeter(const Polytope& p);

/// Euclidean distance from x to the polytope (0 if inside).
double distance_to(const Polytope& p, const Vec& x);

}  // namespace grunbaum
