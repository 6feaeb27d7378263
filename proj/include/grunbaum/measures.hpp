#pragma once

#include "grunbaum/polytope.hpp"
#include "grunbaum/rng.hpp"
#include "grunbaum/star_body.hpp"

#include <optional>
#include <string>

namespace grunbaum {

/// One estimated (or exactly computed) quantity. Exact and quadrature
/// paths report stderr = 0.
struct Estimate {
    double value = 0.0;
    double stderr_ = 0.0;
    long samples = 0;
    std::string method;
    std::optional<Seed> seed;
};

enum class IntrinsicMethod { kubota_mc, exact_2d };
enum class DualMethod { sphere_mc, sphere_quadrature, kubota_mc, solid_mc };

const char* to_string(IntrinsicMethod m);
const char* to_string(DualMethod m);

/// i-th intrinsic volume of a k-dimensional polytope (in its own
/// coordinates). kubota_mc averages exact projection volumes over Haar
/// subspaces of G(k, i) with constant (kappa_k / (kappa_i kappa_{k-i})) C(k,i);
/// exact_2d returns the semiperimeter (i=1) or area (i=2) of a polygon.
Estimate intrinsic_volume(const Polytope& body, int i, IntrinsicMethod method,
                          long samples, const Seed& seed);

/// i-th dual volume of a star body, taken within its own k-dimensional
/// space. Methods: sphere_mc (1/k) E[rho^i] omega_k; sphere_quadrature
/// (k <= 2; exact up to quadrature tolerance); kubota_mc
/// (kappa_k/kappa_i) E[vol_i(body cap F)]; solid_mc (i/k) int |x|^{i-k}
/// by rejection sampling from the bounding box.
Estimate dual_volume(const StarBody& body, int i, DualMethod method, long samples,
                     const Seed& seed);

/// Hemisphere-restricted dual volume (1/k) int_{S cap xi+} rho^i.
Estimate dual_volume_halfspace(const StarBody& body, int i, const Vec& xi,
                               DualMethod method, long samples, const Seed& seed);

/// Monte-Carlo area of P + t B^2 against Steiner's polynomial
/// A + perimeter t + pi t^2.
struct SteinerCheck {
    Estimate mc_area;
    double formula_area;
};
SteinerCheck steiner_check_2d(const Polytope& p, double t, long samples,
                              const Seed& seed);

/// Max residual of the dual Steiner expansion
/// (rho(u)+t)^k = sum_i C(k,i) rho(u)^i t^{k-i}, checked pointwise on
/// sampled directions and in integrated form on the same sample.
double dual_steiner_check(const StarBody& body, double t, long directions,
                          const Seed& seed);

}  // namespace grunbaum
