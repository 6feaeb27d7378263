#pragma once

#include "grunbaum/common.hpp"

namespace grunbaum {

/// Volume kappa_d of the d-dimensional unit ball.
double ball_volume(int d);

/// Surface measure omega_d of S^{d-1} (= d * kappa_d).
double sphere_area(int d);

double binomial(int n, int k);

/// The sharp constants of the inequality family. For the volume kinds
/// the second dimension argument plays the role of k.
enum class SharpConstantKind {
    centroid_section_volume,     // ((k+1)/(n+1))^k
    centroid_section_intrinsic,  // ((i+1)/(n+1))^i
    centroid_section_dual,       // ((i+1)/(n+1))^i
    halfspace_dual,              // (i/(n+1))^i
    halfspace_volume,            // (k/(n+1))^k
    halfspace_ratio,             // i^i / ((n+1)^i - i^i)
};

const char* to_string(SharpConstantKind kind);

double sharp_constant(SharpConstantKind kind, long n, long i);

/// Gamma-identity residual
///   int_0^1 t^{n-i+1}(1-t)^{i-1} dt
///     - ((n-i+1)/(n+1)) int_0^1 t^{n-i}(1-t)^{i-1} dt,
/// evaluated by adaptive quadrature. Identically zero; |result| <= 1e-12.
double beta_moment(int n, int i);

}  // namespace grunbaum
