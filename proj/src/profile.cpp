#include "grunbaum/profile.hpp"

#include "grunbaum/constants.hpp"

#include <cmath>

namespace grunbaum {

double Profile::value_at(double t) const {
    require(!ts.empty(), "Profile: empty grid");
    if (t <= ts.front()) return (t < ts.front() - 1e-12) ? 0.0 : rs.front();
    if (t >= ts.back()) return (t > ts.back() + 1e-12) ? 0.0 : rs.back();
    const double step = (ts.back() - ts.front()) / (static_cast<double>(ts.size()) - 1.0);
    const auto j = static_cast<size_t>((t - ts.front()) / step);
    const size_t j0 = std::min(j, ts.size() - 2);
    const double w = (t - ts[j0]) / (ts[j0 + 1] - ts[j0]);
    return rs[j0] + w * (rs[j0 + 1] - rs[j0]);
}

Profile profile_from_slices(const std::function<double(double)>& slice_volume,
                            double t_min, double t_max, const Vec& axis, int i,
                            int grid_size) {
    require(grid_size >= 2, "profile_from_slices: need at least 2 grid points");
    require(t_max > t_min, "profile_from_slices: empty axial extent");
    require(i >= 1, "profile_from_slices: cross dimension must be >= 1");
    Profile prof;
    prof.axis = axis;
    prof.cross_dim = i;
    prof.ts.resize(grid_size);
    prof.rs.resize(grid_size);
    const double kappa = ball_volume(i);
    for (int j = 0; j < grid_size; ++j) {
        const double t = t_min + (t_max - t_min) * j / (grid_size - 1.0);
        prof.ts[j] = t;
        const double vol = slice_volume(t);
        require(vol >= -1e-12, "profile_from_slices: negative slice volume");
        prof.rs[j] = std::pow(std::max(vol, 0.0) / kappa, 1.0 / i);
    }
    return prof;
}

Profile symmetral_profile(const Polytope& body, const Vec& xi, int i, int grid_size) {
    const int d = body.ambient_dim();
    require(i == d - 1, "symmetral_profile: slices of a d-polytope are (d-1)-dimensional");
    require(std::abs(xi.norm() - 1.0) <= 1e-10, "symmetral_profile: xi must be unit");
    double t_min = std::numeric_limits<double>::infinity(), t_max = -t_min;
    for (const Vec& v : body.vertices()) {
        const double t = xi.dot(v);
        t_min = std::min(t_min, t);
        t_max = std::max(t_max, t);
    }
    const Subspace perp = Subspace::span_of(xi).orthogonal_complement();
    return profile_from_slices(
        [&](double t) {
            const auto slice = section_translated(body, perp, t * xi);
            return slice ? volume(*slice) : 0.0;
        },
        t_min, t_max, xi, i, grid_size);
}

Profile symmetral_profile(const ProductConeBody& body, const Vec& xi, int i,
                          int grid_size) {
    require(i == body.p() + body.q(),
            "symmetral_profile: slices of a product cone have dimension p + q");
    const double along = xi.dot(body.axis());
    require(std::abs(std::abs(along) - 1.0) <= 1e-10,
            "symmetral_profile: xi must be the axis (up to sign)");
    const double kp = ball_volume(body.p());
    const double kq = ball_volume(body.q());
    const double lo = (along > 0) ? body.c0() : -body.c1();
    const double hi = (along > 0) ? body.c1() : -body.c0();
    return profile_from_slices(
        [&](double t) {
            const auto [ra, rb] = body.slice_radii(along > 0 ? t : -t);
            return kp * kq * std::pow(ra, body.p()) * std::pow(rb, body.q());
        },
        lo, hi, xi, i, grid_size);
}

ConeFit fit_cone_profile(const Profile& prof, double t0) {
    require(t0 > 0.0, "fit_cone_profile: t0 must be positive");
    const double r_base = prof.value_at(-t0);
    const double r_mid = prof.value_at(0.0);
    require(r_mid > 0.0, "fit_cone_profile: r(0) must be positive");
    require(r_base > r_mid, "fit_cone_profile: no apex on the positive side (r(-t0) <= r(0))");
    const double slope = (r_mid - r_base) / t0;
    const double apex = t0 * r_mid / (r_base - r_mid);
    Profile cone;
    cone.axis = prof.axis;
    cone.cross_dim = prof.cross_dim;
    cone.ts = prof.ts;
    cone.rs.resize(prof.ts.size());
    for (size_t j = 0; j < prof.ts.size(); ++j) {
        cone.rs[j] = std::max(0.0, r_mid + slope * prof.ts[j]);
    }
    return {apex, std::move(cone)};
}

}  // namespace grunbaum
