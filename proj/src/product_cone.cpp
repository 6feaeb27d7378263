#include "grunbaum/product_cone.hpp"

#include "grunbaum/constants.hpp"
#include "grunbaum/quadrature.hpp"

#include <cmath>

namespace grunbaum {

double ball_intrinsic_volume(int d, int j, double r) {
    require(d >= 0 && j >= 0, "ball_intrinsic_volume: bad dimensions");
    if (j > d) return 0.0;
    return binomial(d, j) * ball_volume(d) / ball_volume(d - j) * std::pow(r, j);
}

double ball_product_intrinsic_volume(const BallProduct& bp, int i) {
    require(i >= 0 && i <= bp.dim(), "ball_product_intrinsic_volume: bad order");
    double total = 0.0;
    for (int j = std::max(0, i - bp.q); j <= std::min(i, bp.p); ++j) {
        total += ball_intrinsic_volume(bp.p, j, bp.a) *
                 ball_intrinsic_volume(bp.q, i - j, bp.b);
    }
    return total;
}

double dual_volume_ball_product(int k, int i, double a, double b, double tol) {
    require(1 <= i && i < k, "dual_volume_ball_product: need 1 <= i < k");
    require(a > 0.0 && b > 0.0, "dual_volume_ball_product: radii must be positive");
    require(tol > 0.0, "dual_volume_ball_product: tolerance must be positive");
    const double front =
        (static_cast<double>(i) / k) * sphere_area(i) * sphere_area(k - i);
    const double expo = 0.5 * (i - k);
    // Substituting r1 = a s keeps the outer integral O(1) even for very
    // thin products (a << b), so the requested tolerance stays meaningful.
    //   J = int_0^1 s^{i-1} I(s) ds,
    //   I(s) = int_0^b r^{k-i-1} ((a s)^2 + r^2)^{(i-k)/2} dr.
    // The inner integrand turns over at r ~ a s; nested 1-D adaptive
    // quadrature resolves that scale in O(log(b/(a s))) intervals.
    const double scale = front * std::pow(a, i);
    QuadratureOptions outer_opts;
    outer_opts.abs_tol = tol / scale;
    QuadratureOptions inner_opts;
    inner_opts.abs_tol = std::max(0.02 * outer_opts.abs_tol, 2e-13);
    // In log coordinates r = e^w the inner integral becomes
    //   I = int_{-inf}^{ln b} (1 + (r1 e^{-w})^2)^{-(m+1)/2} dw,  m = k-i-1,
    // a smooth O(1) sigmoid rising near w = ln r1. That keeps the inner
    // quadrature cheap and stable even when r1 is many orders of
    // magnitude below b (thin sharpness bodies).
    const int m_exp = k - i;  // = m + 1 > 0
    const auto inner_log = [&](double r1) {
        const double w_hi = std::log(b);
        const double w_lo = std::min(std::log(r1) - 45.0 / m_exp, w_hi - 1.0);
        return integrate(
            [=](double w) {
                const double z = r1 * std::exp(-w);
                return std::pow(1.0 + z * z, -0.5 * m_exp);
            },
            w_lo, w_hi, inner_opts);
    };
    (void)expo;
    const double j = integrate(
        [&](double s) -> double {
            // I(s) diverges logarithmically as s -> 0; reporting infinity
            // makes the outer rule fall back to open midpoint panels.
            if (s < 1e-14) return std::numeric_limits<double>::infinity();
            return std::pow(s, i - 1) * inner_log(a * s);
        },
        0.0, 1.0, outer_opts);
    return scale * j;
}

ProductConeBody::ProductConeBody(int n, int p, int q, double r0, double r1,
                                 double c0, double c1, Vec axis, Mat frame_p,
                                 Mat frame_q)
    : n_(n), p_(p), q_(q), r0_(r0), r1_(r1), c0_(c0), c1_(c1),
      axis_(std::move(axis)), frame_p_(std::move(frame_p)), frame_q_(std::move(frame_q)) {
    require(p_ >= 0 && q_ >= 0 && p_ + q_ + 1 == n_, "ProductConeBody: need p + q + 1 = n");
    require(c0_ < c1_, "ProductConeBody: need c0 < c1");
    require(r0_ >= 0.0 && r1_ >= 0.0 && (r0_ > 0.0 || r1_ > 0.0 || (p_ == 0 && q_ == 0)),
            "ProductConeBody: radii must be nonnegative, not both zero");
    require(r0_ > 0.0 || p_ == 0, "ProductConeBody: r0 = 0 requires p = 0");
    require(r1_ > 0.0 || q_ == 0, "ProductConeBody: r1 = 0 requires q = 0");
    require(axis_.size() == n_ && std::abs(axis_.norm() - 1.0) <= kOrthoTol,
            "ProductConeBody: axis must be a unit vector");
    require(frame_p_.rows() == n_ && frame_p_.cols() == p_, "ProductConeBody: frame_p shape");
    require(frame_q_.rows() == n_ && frame_q_.cols() == q_, "ProductConeBody: frame_q shape");
    Mat all(n_, n_);
    all.col(0) = axis_;
    if (p_ > 0) all.middleCols(1, p_) = frame_p_;
    if (q_ > 0) all.middleCols(1 + p_, q_) = frame_q_;
    const Mat gram = all.transpose() * all;
    require((gram - Mat::Identity(n_, n_)).cwiseAbs().maxCoeff() <= kOrthoTol,
            "ProductConeBody: axis and frames must be mutually orthonormal");
}

std::pair<double, double> ProductConeBody::slice_radii(double t) const {
    require(t >= c0_ - kGeomTol && t <= c1_ + kGeomTol,
            "slice_radii: t outside the axial extent");
    const double s = std::clamp((t - c0_) / (c1_ - c0_), 0.0, 1.0);
    return {r0_ * (1.0 - s), r1_ * s};
}

bool ProductConeBody::member(const Vec& x, double tol) const {
    const double t = axis_.dot(x);
    if (t < c0_ - tol || t > c1_ + tol) return false;
    Vec rest = x - t * axis_;
    double yp = 0.0, yq = 0.0;
    if (p_ > 0) {
        const Vec cp = frame_p_.transpose() * rest;
        yp = cp.norm();
        rest -= frame_p_ * cp;
    }
    if (q_ > 0) {
        const Vec cq = frame_q_.transpose() * rest;
        yq = cq.norm();
        rest -= frame_q_ * cq;
    }
    if (rest.norm() > std::max(tol, 1e-12)) return false;
    const auto [ra, rb] = slice_radii(std::clamp(t, c0_, c1_));
    return yp <= ra + tol && yq <= rb + tol;
}

bool ProductConeBody::origin_interior() const {
    if (!(c0_ < -1e-12 && c1_ > 1e-12)) return false;
    const auto [ra, rb] = slice_radii(0.0);
    if (p_ > 0 && ra <= 1e-12) return false;
    if (q_ > 0 && rb <= 1e-12) return false;
    return true;
}

double ProductConeBody::radial(const Vec& u) const {
    require(origin_interior(), "pc radial: origin not interior");
    return radial_or_zero(u);
}

double ProductConeBody::radial_or_zero(const Vec& u) const {
    const double tol = 1e-13;
    if (!member(Vec::Zero(n_), tol)) return 0.0;
    double lo = 0.0;
    double hi = circumradius() + 1.0;
    if (member(hi * u, tol)) return hi;  // cannot happen for valid bodies
    for (int iter = 0; iter < 200 && (hi - lo) > 1e-12; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (member(mid * u, tol) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double ProductConeBody::circumradius() const {
    return std::max(std::hypot(c0_, r0_), std::hypot(c1_, r1_));
}

double pc_volume(const ProductConeBody& b) {
    return ball_volume(b.p()) * ball_volume(b.q()) * std::pow(b.r0(), b.p()) *
           std::pow(b.r1(), b.q()) * (b.c1() - b.c0()) *
           std::beta(b.p() + 1.0, b.q() + 1.0);
}

double pc_centroid(const ProductConeBody& b) {
    return b.c0() + (b.c1() - b.c0()) * (b.q() + 1.0) / (b.ambient_dim() + 1.0);
}

double pc_volume_above(const ProductConeBody& b, double t) {
    if (t <= b.c0()) return pc_volume(b);
    if (t >= b.c1()) return 0.0;
    const double s0 = (t - b.c0()) / (b.c1() - b.c0());
    QuadratureOptions opts;
    opts.abs_tol = 1e-14;
    const double frac = integrate(
        [&](double s) { return std::pow(1.0 - s, b.p()) * std::pow(s, b.q()); },
        s0, 1.0, opts);
    return ball_volume(b.p()) * ball_volume(b.q()) * std::pow(b.r0(), b.p()) *
           std::pow(b.r1(), b.q()) * (b.c1() - b.c0()) * frac;
}

namespace {

// Orthonormal basis of span(f) cap xi^perp, i.e. the frame left after
// removing the axis direction from an i-dimensional subspace containing it.
Mat frame_without_axis(const Subspace& f, const Vec& xi) {
    Mat cols = f.basis();
    for (int j = 0; j < cols.cols(); ++j) cols.col(j) -= xi.dot(cols.col(j)) * xi;
    Mat kept(cols.rows(), cols.cols());
    int nkept = 0;
    for (int j = 0; j < cols.cols(); ++j) {
        Vec v = cols.col(j);
        for (int k = 0; k < nkept; ++k) v -= kept.col(k).dot(v) * kept.col(k);
        const double norm = v.norm();
        if (norm > 1e-8) kept.col(nkept++) = v / norm;
    }
    Mat out = kept.leftCols(nkept);
    if (nkept > 0) require(modified_gram_schmidt(out), "frame_without_axis: degenerate frame");
    return out;
}

}  // namespace

ProductConeBody make_equality_body(int n, int i, double a, double r0, double r1,
                                   const Subspace& f, const Vec& xi) {
    require(1 <= i && i <= n - 1, "make_equality_body: need 1 <= i <= n-1");
    require(a > 0.0 && r0 > 0.0 && r1 > 0.0, "make_equality_body: a, r0, r1 must be positive");
    require(f.ambient_dim() == n && f.dim() == i, "make_equality_body: dim(F) must equal i");
    require(std::abs(xi.norm() - 1.0) <= kOrthoTol, "make_equality_body: xi must be unit");
    require(f.contains(xi), "make_equality_body: xi must lie in F");

    const Mat fp = frame_without_axis(f, xi);
    require(fp.cols() == i - 1, "make_equality_body: F cap xi^perp has wrong dimension");
    const Mat fq = (i < n) ? f.orthogonal_complement().basis() : Mat(n, 0);
    const double c0 = -a * (n - i + 1.0) / (n + 1.0);
    const double c1 = a * static_cast<double>(i) / (n + 1.0);
    return ProductConeBody(n, i - 1, n - i, (i == 1) ? 0.0 : r0, r1, c0, c1, xi, fp, fq);
}

ProductConeBody make_sharpness_family(SharpnessTheorem theorem, int n, int i,
                                      double epsilon, const Subspace& f,
                                      const Vec& xi) {
    require(epsilon > 0.0, "make_sharpness_family: epsilon must be positive");
    require(f.ambient_dim() == n, "make_sharpness_family: ambient mismatch");
    require(std::abs(xi.norm() - 1.0) <= kOrthoTol, "make_sharpness_family: xi must be unit");

    if (theorem == SharpnessTheorem::thm3) {
        require(1 <= i && i <= n - 1, "make_sharpness_family: need 1 <= i <= n-1");
        require(f.dim() == i && f.contains(xi), "make_sharpness_family: thm3 needs xi in F, dim(F) = i");
        const Mat fp = frame_without_axis(f, xi);
        require(fp.cols() == i - 1, "make_sharpness_family: F cap xi^perp has wrong dimension");
        const Mat fq = f.orthogonal_complement().basis();
        const double c0 = -epsilon * (n - i + 1.0) / (n + 1.0);
        const double c1 = epsilon * static_cast<double>(i) / (n + 1.0);
        return ProductConeBody(n, i - 1, n - i, (i == 1) ? 0.0 : epsilon, 1.0, c0, c1,
                               xi, fp, fq);
    }

    require(1 <= i && i <= n - 1, "make_sharpness_family: thm1/thm2 need 1 <= i <= n-1");
    require(f.dim() == i, "make_sharpness_family: dim(F) must equal i");
    require(std::abs((f.basis().transpose() * xi).norm()) <= 1e-10,
            "make_sharpness_family: thm1/thm2 need xi orthogonal to F");
    Mat span(n, i + 1);
    span.leftCols(i) = f.basis();
    span.col(i) = xi;
    const Subspace f_xi = Subspace::from_spanning(n, span);
    const Mat fq = (f_xi.dim() < n) ? f_xi.orthogonal_complement().basis() : Mat(n, 0);
    const double c0 = -(n - i) / (n + 1.0);
    const double c1 = (i + 1.0) / (n + 1.0);
    const double r0 = (theorem == SharpnessTheorem::thm1) ? 1.0 : epsilon;
    const double r1 = (theorem == SharpnessTheorem::thm1) ? epsilon : 1.0;
    return ProductConeBody(n, i, n - i - 1, r0, r1, c0, c1, xi, f.basis(), fq);
}

Polytope pc_to_polytope(const ProductConeBody& b) {
    require(b.p() <= 1 && b.q() <= 1, "pc_to_polytope: ball factors must be segments or points");
    std::vector<Vec> pts;
    const Vec base = b.c0() * b.axis();
    const Vec top = b.c1() * b.axis();
    if (b.p() == 1 && b.r0() > 0.0) {
        pts.push_back(base + b.r0() * b.frame_p().col(0));
        pts.push_back(base - b.r0() * b.frame_p().col(0));
    } else {
        pts.push_back(base);
    }
    if (b.q() == 1 && b.r1() > 0.0) {
        pts.push_back(top + b.r1() * b.frame_q().col(0));
        pts.push_back(top - b.r1() * b.frame_q().col(0));
    } else {
        pts.push_back(top);
    }
    return hull(pts);
}

namespace {

// Orthonormal columns (in E-coordinates) spanning E cap span(frame).
Mat intersection_in_e(const Mat& frame, const Subspace& e, int expected_dim) {
    if (frame.cols() == 0 || expected_dim == 0) return Mat(e.dim(), 0);
    const Mat m = e.basis().transpose() * frame;  // k x q
    Eigen::SelfAdjointEigenSolver<Mat> es(m * m.transpose());
    int count = 0;
    for (int j = 0; j < es.eigenvalues().size(); ++j) {
        if (es.eigenvalues()[j] > 1.0 - 1e-8) ++count;
    }
    require(count == expected_dim, "pc_section: subspace does not intersect the frame cleanly");
    // Largest eigenvalues last in Eigen's ascending order.
    return es.eigenvectors().rightCols(count);
}

}  // namespace

PcSection pc_section(const ProductConeBody& b, const Subspace& e) {
    require(e.ambient_dim() == b.ambient_dim(), "pc_section: ambient dimension mismatch");
    const int k = e.dim();
    PcSection out;

    const double axis_in_e = (e.basis().transpose() * b.axis()).norm();
    if (axis_in_e > 1.0 - 1e-10) {
        // Axis inside E: the section is a product cone within E.
        require(b.p() == 0 || e.contains_subspace(Subspace(b.ambient_dim(), b.frame_p())),
                "pc_section: frame_p must lie inside E");
        const int q_new = k - b.p() - 1;
        require(q_new >= 0, "pc_section: E too small for the cone");
        const Vec axis_e = e.coords(b.axis());
        const Mat fp_e = e.basis().transpose() * b.frame_p();
        const Mat fq_e = intersection_in_e(b.frame_q(), e, q_new);
        out.cone = ProductConeBody(k, b.p(), q_new, b.r0(), (q_new == 0) ? 0.0 : b.r1(),
                                   b.c0(), b.c1(), axis_e, fp_e, fq_e);
        return out;
    }

    require(axis_in_e <= 1e-10, "pc_section: axis must lie inside E or be orthogonal to it");
    out.product = pc_translated_section(b, e, Vec::Zero(b.ambient_dim()));
    require(out.product.has_value(), "pc_section: central section is empty");
    return out;
}

std::optional<BallProduct> pc_translated_section(const ProductConeBody& b,
                                                 const Subspace& e, const Vec& x) {
    require(e.ambient_dim() == b.ambient_dim(), "pc_translated_section: ambient mismatch");
    require((e.basis().transpose() * b.axis()).norm() <= 1e-10,
            "pc_translated_section: axis must be orthogonal to E");
    require(b.p() == 0 || e.contains_subspace(Subspace(b.ambient_dim(), b.frame_p())),
            "pc_translated_section: frame_p must lie inside E");
    require((e.basis().transpose() * x).norm() <= 1e-9,
            "pc_translated_section: x must lie in E^perp");

    const double t = b.axis().dot(x);
    if (t < b.c0() || t > b.c1()) return std::nullopt;
    Vec w = x - t * b.axis();
    if (b.q() > 0) {
        const Vec wq = b.frame_q().transpose() * w;
        require((w - b.frame_q() * wq).norm() <= 1e-9,
                "pc_translated_section: x has components outside axis + frame_q");
        const auto [ra, rb] = b.slice_radii(t);
        const double wn = wq.norm();
        if (wn > rb) return std::nullopt;
        return BallProduct{b.p(), e.dim() - b.p(), ra, std::sqrt(rb * rb - wn * wn)};
    }
    require(w.norm() <= 1e-9, "pc_translated_section: x has components outside the axis");
    const auto [ra, rb] = b.slice_radii(t);
    (void)rb;
    return BallProduct{b.p(), e.dim() - b.p(), ra, 0.0};
}

}  // namespace grunbaum
