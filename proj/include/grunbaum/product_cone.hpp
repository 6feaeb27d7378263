#pragma once

#include "grunbaum/common.hpp"
#include "grunbaum/polytope.hpp"
#include "grunbaum/subspace.hpp"

#include <optional>

namespace grunbaum {

/// Cartesian product of two centered balls, a B^p x b B^q, living in a
/// (p+q)-dimensional space. Sections of product-cone bodies with
/// compatible subspaces take this form; intrinsic and dual volumes of
/// such products have closed or quadrature forms.
struct BallProduct {
    int p = 0;  // dimension of the first factor
    int q = 0;  // dimension of the second factor
    double a = 0.0;
    double b = 0.0;

    int dim() const { return p + q; }
};

/// V_j of a ball r B^d: C(d, j) * kappa_d / kappa_{d-j} * r^j.
double ball_intrinsic_volume(int d, int j, double r);

/// V_i of a product of balls via the product formula
/// V_i(A x B) = sum_j V_j(A) V_{i-j}(B).
double ball_product_intrinsic_volume(const BallProduct& bp, int i);

/// i-th dual volume (within k = i + ... dimensions) of aB^i x bB^{k-i}
/// by polar-coordinate double quadrature:
///   (i/k) omega_i omega_{k-i}
///     int_0^a r1^{i-1} int_0^b r2^{k-i-1} (r1^2+r2^2)^{(i-k)/2} dr2 dr1.
double dual_volume_ball_product(int k, int i, double a, double b, double tol);

/// conv(r0 B^p + c0 xi, r1 B^q + c1 xi) with p + q + 1 = n; the balls
/// live in the stored orthonormal frames, both orthogonal to the axis.
/// Houses the equality body of the half-space inequalities and all
/// three sharpness families.
class ProductConeBody {
public:
    ProductConeBody(int n, int p, int q, double r0, double r1, double c0, double c1,
                    Vec axis, Mat frame_p, Mat frame_q);

    int ambient_dim() const { return n_; }
    int p() const { return p_; }
    int q() const { return q_; }
    double r0() const { return r0_; }
    double r1() const { return r1_; }
    double c0() const { return c0_; }
    double c1() const { return c1_; }
    const Vec& axis() const { return axis_; }
    const Mat& frame_p() const { return frame_p_; }
    const Mat& frame_q() const { return frame_q_; }

    /// Radii of the slice {t xi + xi^perp}: linear interpolation between
    /// the end balls.
    std::pair<double, double> slice_radii(double t) const;

    bool member(const Vec& x, double tol = kGeomTol) const;
    /// Radial function by bisection on membership (origin must be interior).
    double radial(const Vec& u) const;
    double radial_or_zero(const Vec& u) const;
    bool origin_interior() const;

    double circumradius() const;

private:
    int n_, p_, q_;
    double r0_, r1_, c0_, c1_;
    Vec axis_;
    Mat frame_p_, frame_q_;
};

/// Exact volume: kappa_p kappa_q r0^p r1^q (c1-c0) Beta(p+1, q+1).
double pc_volume(const ProductConeBody& b);

/// Axial centroid coordinate c0 + (c1-c0)(q+1)/(n+1); transverse
/// coordinates vanish by symmetry.
double pc_centroid(const ProductConeBody& b);

/// Volume of the part with axial coordinate >= t (polynomial quadrature).
double pc_volume_above(const ProductConeBody& b, double t);

/// Equality body of the projected/sectioned half-space inequalities:
/// p = i-1 ball in F cap xi^perp at -a(n-i+1)/(n+1), q = n-i ball in
/// F^perp at a i/(n+1). F must contain xi.
ProductConeBody make_equality_body(int n, int i, double a, double r0, double r1,
                                   const Subspace& f, const Vec& xi);

enum class SharpnessTheorem { thm1, thm2, thm3 };

/// The K_epsilon families showing each constant is best possible.
/// thm1/thm2: xi orthogonal to F (and to E); p = i, q = n-i-1.
/// thm3: xi in F; p = i-1, q = n-i, with epsilon-scaled axial offsets
/// (r0 = 0 encodes the degenerate point base when i = 1).
ProductConeBody make_sharpness_family(SharpnessTheorem theorem, int n, int i,
                                      double epsilon, const Subspace& f,
                                      const Vec& xi);

/// Exact polytope form when both ball factors are at most segments
/// (p <= 1 and q <= 1).
Polytope pc_to_polytope(const ProductConeBody& b);

/// Section of the body with a linear subspace E.
/// - axis in E and frame_p within E: the section is a product-cone body
///   in E-coordinates (first p coordinates = frame_p, last ones the part
///   of frame_q inside E).
/// - axis orthogonal to E and frame_p within E: the section through the
///   origin is a ball product in E.
struct PcSection {
    std::optional<ProductConeBody> cone;  // axis-in-E case
    std::optional<BallProduct> product;   // axis-perp-to-E case
};
PcSection pc_section(const ProductConeBody& b, const Subspace& e);

/// Ball-product section of (B - x) cap E for the axis-perp case, where
/// x = t axis + w with w in E^perp cap axis^perp. Returns nullopt when
/// the section is empty.
std::optional<BallProduct> pc_translated_section(const ProductConeBody& b,
                                                 const Subspace& e, const Vec& x);

}  // namespace grunbaum
