#include "grunbaum/measures.hpp"

#include "grunbaum/constants.hpp"
#include "grunbaum/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace grunbaum {

namespace {

Seed sample_seed(const Seed& seed, long index) {
    return Seed{seed_at(seed, static_cast<std::uint64_t>(index)), seed.stream};
}

struct MeanAccumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
    long n = 0;
    void add(double x) {
        sum += x;
        sum_sq += x * x;
        ++n;
    }
    double mean() const { return sum / n; }
    double stderr_of_mean() const {
        if (n < 2) return 0.0;
        const double var = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0));
        return std::sqrt(var / n);
    }
};

double polygon_angle_radial(const Polytope& poly, double theta) {
    Vec u(2);
    u[0] = std::cos(theta);
    u[1] = std::sin(theta);
    return radial_or_zero(poly, u);
}

// (1/2) int rho(theta)^i over [lo, hi], split at polygon vertex angles
// so each panel is smooth.
double half_integral_rho_2d(const StarBody& body, int i, double lo, double hi) {
    std::vector<double> knots{lo, hi};
    if (const Polytope* poly = body.as_polytope()) {
        for (const Vec& v : poly->vertices()) {
            const double base = std::atan2(v[1], v[0]);
            for (int wrap = -1; wrap <= 1; ++wrap) {
                const double a = base + 2.0 * M_PI * wrap;
                if (a > lo + 1e-12 && a < hi - 1e-12) knots.push_back(a);
            }
        }
    }
    std::sort(knots.begin(), knots.end());
    QuadratureOptions opts;
    opts.abs_tol = 1e-11;
    double total = 0.0;
    for (size_t j = 0; j + 1 < knots.size(); ++j) {
        total += integrate(
            [&](double theta) {
                Vec u(2);
                u[0] = std::cos(theta);
                u[1] = std::sin(theta);
                return std::pow(body.radial(u), i);
            },
            knots[j], knots[j + 1], opts);
    }
    return 0.5 * total;
}

}  // namespace

const char* to_string(IntrinsicMethod m) {
    switch (m) {
        case IntrinsicMethod::kubota_mc: return "kubota_mc";
        case IntrinsicMethod::exact_2d: return "exact_2d";
    }
    return "unknown";
}

const char* to_string(DualMethod m) {
    switch (m) {
        case DualMethod::sphere_mc: return "sphere_mc";
        case DualMethod::sphere_quadrature: return "sphere_quadrature";
        case DualMethod::kubota_mc: return "kubota_mc";
        case DualMethod::solid_mc: return "solid_mc";
    }
    return "unknown";
}

Estimate intrinsic_volume(const Polytope& body, int i, IntrinsicMethod method,
                          long samples, const Seed& seed) {
    const int k = body.ambient_dim();
    require(1 <= i && i <= k, "intrinsic_volume: need 1 <= i <= k");

    if (method == IntrinsicMethod::exact_2d) {
        require(k == 2, "intrinsic_volume: exact_2d needs a 2-D body");
        const double value = (i == 1) ? 0.5 * perimeter(body) : volume(body);
        return {value, 0.0, 0, "exact_2d", std::nullopt};
    }

    require(samples >= 1, "intrinsic_volume: need samples >= 1");
    const double constant =
        ball_volume(k) / (ball_volume(i) * ball_volume(k - i)) * binomial(k, i);
    MeanAccumulator acc;
    for (long j = 0; j < samples; ++j) {
        const Subspace f = random_subspace(k, i, sample_seed(seed, j));
        acc.add(volume(project(body, f)));
    }
    return {constant * acc.mean(), constant * acc.stderr_of_mean(), samples,
            "kubota_mc", seed};
}

Estimate dual_volume(const StarBody& body, int i, DualMethod method, long samples,
                     const Seed& seed) {
    const int k = body.dim();
    require(1 <= i && i <= k, "dual_volume: need 1 <= i <= k");

    switch (method) {
        case DualMethod::sphere_quadrature: {
            require(k <= 2, "dual_volume: sphere_quadrature supports k <= 2 only");
            double value = 0.0;
            if (k == 1) {
                Vec plus(1), minus(1);
                plus[0] = 1.0;
                minus[0] = -1.0;
                value = std::pow(body.radial(plus), i) + std::pow(body.radial(minus), i);
            } else {
                value = half_integral_rho_2d(body, i, 0.0, 2.0 * M_PI);
            }
            return {value, 0.0, 0, "sphere_quadrature", std::nullopt};
        }
        case DualMethod::sphere_mc: {
            require(samples >= 1, "dual_volume: need samples >= 1");
            MeanAccumulator acc;
            for (long j = 0; j < samples; ++j) {
                Rng rng(sample_seed(seed, j));
                acc.add(std::pow(body.radial(rng.unit_vector(k)), i));
            }
            const double front = sphere_area(k) / k;
            return {front * acc.mean(), front * acc.stderr_of_mean(), samples,
                    "sphere_mc", seed};
        }
        case DualMethod::kubota_mc: {
            require(samples >= 1, "dual_volume: need samples >= 1");
            MeanAccumulator acc;
            for (long j = 0; j < samples; ++j) {
                const Subspace f = random_subspace(k, i, sample_seed(seed, j));
                const auto vol = body.section_volume(f);
                require(vol.has_value(), "dual_volume: kubota_mc unsupported for this body");
                acc.add(*vol);
            }
            const double front = ball_volume(k) / ball_volume(i);
            return {front * acc.mean(), front * acc.stderr_of_mean(), samples,
                    "kubota_mc", seed};
        }
        case DualMethod::solid_mc: {
            require(samples >= 1, "dual_volume: need samples >= 1");
            const auto [lo, hi] = body.bounding_box();
            double box_vol = 1.0;
            for (int d = 0; d < k; ++d) box_vol *= hi[d] - lo[d];
            MeanAccumulator acc;
            for (long j = 0; j < samples; ++j) {
                Rng rng(sample_seed(seed, j));
                Vec x(k);
                for (int d = 0; d < k; ++d) x[d] = rng.uniform(lo[d], hi[d]);
                double w = 0.0;
                if (body.member(x)) {
                    const double norm = x.norm();
                    w = (i == k) ? 1.0 : std::pow(norm, i - k);
                    if (!std::isfinite(w)) w = 0.0;  // measure-zero event
                }
                acc.add(w);
            }
            const double front = static_cast<double>(i) / k * box_vol;
            return {front * acc.mean(), front * acc.stderr_of_mean(), samples,
                    "solid_mc", seed};
        }
    }
    throw Error("dual_volume: unknown method");
}

Estimate dual_volume_halfspace(const StarBody& body, int i, const Vec& xi,
                               DualMethod method, long samples, const Seed& seed) {
    const int k = body.dim();
    require(1 <= i && i <= k, "dual_volume_halfspace: need 1 <= i <= k");
    require(xi.size() == k && std::abs(xi.norm() - 1.0) <= 1e-10,
            "dual_volume_halfspace: xi must be a unit vector in the body's space");

    switch (method) {
        case DualMethod::sphere_quadrature: {
            require(k <= 2, "dual_volume_halfspace: sphere_quadrature supports k <= 2 only");
            if (k == 1) {
                return {std::pow(body.radial(xi), i), 0.0, 0, "sphere_quadrature",
                        std::nullopt};
            }
            const double theta_xi = std::atan2(xi[1], xi[0]);
            const double value =
                half_integral_rho_2d(body, i, theta_xi - 0.5 * M_PI, theta_xi + 0.5 * M_PI);
            return {value, 0.0, 0, "sphere_quadrature", std::nullopt};
        }
        case DualMethod::sphere_mc: {
            require(samples >= 1, "dual_volume_halfspace: need samples >= 1");
            MeanAccumulator acc;
            for (long j = 0; j < samples; ++j) {
                Rng rng(sample_seed(seed, j));
                const Vec u = rng.unit_vector(k);
                acc.add(u.dot(xi) >= 0.0 ? std::pow(body.radial(u), i) : 0.0);
            }
            const double front = sphere_area(k) / k;
            return {front * acc.mean(), front * acc.stderr_of_mean(), samples,
                    "sphere_mc", seed};
        }
        case DualMethod::solid_mc: {
            require(samples >= 1, "dual_volume_halfspace: need samples >= 1");
            const auto [lo, hi] = body.bounding_box();
            double box_vol = 1.0;
            for (int d = 0; d < k; ++d) box_vol *= hi[d] - lo[d];
            MeanAccumulator acc;
            for (long j = 0; j < samples; ++j) {
                Rng rng(sample_seed(seed, j));
                Vec x(k);
                for (int d = 0; d < k; ++d) x[d] = rng.uniform(lo[d], hi[d]);
                double w = 0.0;
                if (x.dot(xi) >= 0.0 && body.member(x)) {
                    const double norm = x.norm();
                    w = (i == k) ? 1.0 : std::pow(norm, i - k);
                    if (!std::isfinite(w)) w = 0.0;
                }
                acc.add(w);
            }
            const double front = static_cast<double>(i) / k * box_vol;
            return {front * acc.mean(), front * acc.stderr_of_mean(), samples,
                    "solid_mc", seed};
        }
        case DualMethod::kubota_mc:
            throw Error("dual_volume_halfspace: kubota_mc is not defined for hemispheres");
    }
    throw Error("dual_volume_halfspace: unknown method");
}

SteinerCheck steiner_check_2d(const Polytope& p, double t, long samples,
                              const Seed& seed) {
    require(p.ambient_dim() == 2, "steiner_check_2d: 2-D only");
    require(t >= 0.0, "steiner_check_2d: t must be nonnegative");
    require(samples >= 1, "steiner_check_2d: need samples >= 1");

    const double area = volume(p);
    const double perim = perimeter(p);
    const double formula = area + perim * t + M_PI * t * t;

    auto [lo, hi] = p.bounding_box();
    lo.array() -= t;
    hi.array() += t;
    const double box_vol = (hi[0] - lo[0]) * (hi[1] - lo[1]);
    MeanAccumulator acc;
    for (long j = 0; j < samples; ++j) {
        Rng rng(sample_seed(seed, j));
        Vec x(2);
        x[0] = rng.uniform(lo[0], hi[0]);
        x[1] = rng.uniform(lo[1], hi[1]);
        acc.add(distance_to(p, x) <= t ? 1.0 : 0.0);
    }
    Estimate mc{box_vol * acc.mean(), box_vol * acc.stderr_of_mean(), samples,
                "membership_mc", seed};
    return {mc, formula};
}

double dual_steiner_check(const StarBody& body, double t, long directions,
                          const Seed& seed) {
    const int k = body.dim();
    require(t >= 0.0, "dual_steiner_check: t must be nonnegative");
    require(directions >= 1, "dual_steiner_check: need directions >= 1");

    double max_residual = 0.0;
    std::vector<double> power_means(k + 1, 0.0);
    double sum_outer = 0.0;
    for (long j = 0; j < directions; ++j) {
        Rng rng(sample_seed(seed, j));
        const double rho = body.radial(rng.unit_vector(k));
        double expanded = 0.0;
        for (int l = 0; l <= k; ++l) {
            const double term = binomial(k, l) * std::pow(rho, l) * std::pow(t, k - l);
            expanded += term;
            power_means[l] += std::pow(rho, l);
        }
        const double direct = std::pow(rho + t, k);
        sum_outer += direct;
        max_residual = std::max(max_residual, std::abs(direct - expanded));
    }
    // Integrated form on the same directions: both sides share the sample,
    // so only floating-point rounding remains.
    const double front = sphere_area(k) / k;
    const double lhs = front * sum_outer / directions;
    double rhs = 0.0;
    for (int l = 0; l <= k; ++l) {
        rhs += binomial(k, l) * (front * power_means[l] / directions) * std::pow(t, k - l);
    }
    return std::max(max_residual, std::abs(lhs - rhs));
}

}  // namespace grunbaum
