#include "grunbaum/constants.hpp"

#include "grunbaum/quadrature.hpp"

#include <cmath>

namespace grunbaum {

double ball_volume(int d) {
    require(d >= 0, "ball_volume: dimension must be >= 0");
    return std::pow(M_PI, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

double sphere_area(int d) {
    require(d >= 1, "sphere_area: dimension must be >= 1");
    return d * ball_volume(d);
}

double binomial(int n, int k) {
    require(n >= 0 && k >= 0 && k <= n, "binomial: bad arguments");
    double r = 1.0;
    k = std::min(k, n - k);
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return std::round(r);
}

const char* to_string(SharpConstantKind kind) {
    switch (kind) {
        case SharpConstantKind::centroid_section_volume: return "centroid_section_volume";
        case SharpConstantKind::centroid_section_intrinsic: return "centroid_section_intrinsic";
        case SharpConstantKind::centroid_section_dual: return "centroid_section_dual";
        case SharpConstantKind::halfspace_dual: return "halfspace_dual";
        case SharpConstantKind::halfspace_volume: return "halfspace_volume";
        case SharpConstantKind::halfspace_ratio: return "halfspace_ratio";
    }
    return "unknown";
}

namespace {
// (num/den)^e computed in log space; stays accurate for very large e.
double ratio_pow(double num, double den, double e) {
    return std::exp(e * (std::log(num) - std::log(den)));
}
}  // namespace

double sharp_constant(SharpConstantKind kind, long n, long i) {
    require(n >= 1 && i >= 1 && i <= n, "sharp_constant: need 1 <= i <= n");
    const double dn = static_cast<double>(n);
    const double di = static_cast<double>(i);
    switch (kind) {
        case SharpConstantKind::centroid_section_volume:
        case SharpConstantKind::centroid_section_intrinsic:
        case SharpConstantKind::centroid_section_dual:
            return ratio_pow(di + 1.0, dn + 1.0, di);
        case SharpConstantKind::halfspace_dual:
        case SharpConstantKind::halfspace_volume:
            return ratio_pow(di, dn + 1.0, di);
        case SharpConstantKind::halfspace_ratio: {
            const double p = ratio_pow(di, dn + 1.0, di);  // (i/(n+1))^i
            return p / (1.0 - p);
        }
    }
    throw Error("sharp_constant: unknown kind");
}

double beta_moment(int n, int i) {
    require(i >= 1 && i <= n, "beta_moment: need 1 <= i <= n");
    QuadratureOptions opts;
    opts.abs_tol = 1e-14;
    const auto power = [&](double expo_t) {
        return integrate(
            [=](double t) { return std::pow(t, expo_t) * std::pow(1.0 - t, i - 1.0); },
            0.0, 1.0, opts);
    };
    const double first = power(n - i + 1.0);
    const double second = power(static_cast<double>(n - i));
    return first - (n - i + 1.0) / (n + 1.0) * second;
}

}  // namespace grunbaum
