#pragma once

#include "grunbaum/polytope.hpp"
#include "grunbaum/product_cone.hpp"

#include <functional>
#include <vector>

namespace grunbaum {

/// Sampled 1-D radius function t -> r(t) on a uniform grid: the
/// i-symmetral of a body along an axis, or a fitted cone.
struct Profile {
    Vec axis;
    int cross_dim = 1;
    std::vector<double> ts;  // uniform, strictly increasing, endpoints included
    std::vector<double> rs;  // r >= 0

    double value_at(double t) const;  // linear interpolation
};

/// Generic engine: r(t) = (slice_volume(t) / kappa_i)^(1/i) sampled on a
/// uniform grid over [t_min, t_max].
Profile profile_from_slices(const std::function<double(double)>& slice_volume,
                            double t_min, double t_max, const Vec& axis, int i,
                            int grid_size = 2048);

/// i-symmetral of a polytope along xi (slices are exact hyperplane
/// sections; requires i = ambient_dim - 1).
Profile symmetral_profile(const Polytope& body, const Vec& xi, int i,
                          int grid_size = 2048);

/// i-symmetral of a product-cone body along its own axis (closed-form
/// slice volumes; requires i = p + q and xi = +-axis).
Profile symmetral_profile(const ProductConeBody& body, const Vec& xi, int i,
                          int grid_size = 2048);

/// The unique cone profile through (-t0, r(-t0)) and (0, r(0)) with
/// linear radius; the apex sits at t1 = t0 r(0) / (r(-t0) - r(0)) > 0.
/// Returned on the same grid, clamped at zero beyond the apex.
struct ConeFit {
    double apex;
    Profile cone;
};
ConeFit fit_cone_profile(const Profile& prof, double t0);

}  // namespace grunbaum
