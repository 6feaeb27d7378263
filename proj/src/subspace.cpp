#include "grunbaum/subspace.hpp"

namespace grunbaum {

bool modified_gram_schmidt(Mat& columns, double tol) {
    const int d = static_cast<int>(columns.cols());
    for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j < d; ++j) {
            for (int k = 0; k < j; ++k) {
                columns.col(j) -= columns.col(k).dot(columns.col(j)) * columns.col(k);
            }
            const double norm = columns.col(j).norm();
            if (norm < tol) return false;
            columns.col(j) /= norm;
        }
    }
    return true;
}

Subspace::Subspace(int ambient_dim, Mat basis_columns)
    : n_(ambient_dim), basis_(std::move(basis_columns)) {
    require(n_ >= 1, "Subspace: ambient dimension must be >= 1");
    require(basis_.rows() == n_, "Subspace: basis rows must match ambient dimension");
    const int d = static_cast<int>(basis_.cols());
    require(d >= 1 && d <= n_, "Subspace: dimension out of range");
    require(gram_defect() <= kOrthoTol, "Subspace: basis not orthonormal");
}

Subspace Subspace::from_spanning(int ambient_dim, const Mat& columns) {
    Mat b = columns;
    require(modified_gram_schmidt(b), "Subspace: spanning set is rank-deficient");
    return Subspace(ambient_dim, std::move(b));
}

Subspace Subspace::full(int n) {
    return Subspace(n, Mat::Identity(n, n));
}

Subspace Subspace::span_of(const Vec& v) {
    const double norm = v.norm();
    require(norm > 1e-12, "span_of: zero vector");
    Mat b(v.size(), 1);
    b.col(0) = v / norm;
    return Subspace(static_cast<int>(v.size()), std::move(b));
}

bool Subspace::contains_subspace(const Subspace& other, double tol) const {
    if (other.ambient_dim() != n_ || other.dim() > dim()) return false;
    for (int j = 0; j < other.dim(); ++j) {
        if (!contains(other.basis_vector(j), tol)) return false;
    }
    return true;
}

Subspace Subspace::orthogonal_complement() const {
    require(dim() < n_, "orthogonal_complement: subspace is the full space");
    // Columns of Q beyond the first d in a full QR span the complement.
    Eigen::HouseholderQR<Mat> qr(basis_);
    Mat q = qr.householderQ();
    Mat comp = q.rightCols(n_ - dim());
    // Householder Q is orthogonal up to sign conventions; re-orthonormalize
    // against the subspace itself to control accumulated error.
    for (int j = 0; j < comp.cols(); ++j) {
        comp.col(j) -= basis_ * (basis_.transpose() * comp.col(j));
    }
    require(modified_gram_schmidt(comp), "orthogonal_complement: degenerate frame");
    return Subspace(n_, std::move(comp));
}

double Subspace::gram_defect() const {
    const Mat g = basis_.transpose() * basis_;
    return (g - Mat::Identity(dim(), dim())).cwiseAbs().maxCoeff();
}

Subspace random_subspace(int n, int d, const Seed& seed) {
    require(n >= 1 && d >= 1, "random_subspace: dimensions must be positive");
    require(d <= n, "random_subspace: d exceeds n");
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Mat g(n, d);
        for (int j = 0; j < d; ++j) g.col(j) = rng.normal_vector(n);
        if (modified_gram_schmidt(g)) return Subspace(n, std::move(g));
    }
    throw Error("random_subspace: degenerate Gaussian frame (repeatedly)");
}

Subspace random_subspace_within(const Subspace& E, int d, const Seed& seed) {
    require(d >= 1 && d <= E.dim(), "random_subspace_within: d exceeds dim(E)");
    const Subspace inner = random_subspace(E.dim(), d, seed);
    Mat b = E.basis() * inner.basis();
    require(modified_gram_schmidt(b), "random_subspace_within: degenerate frame");
    return Subspace(E.ambient_dim(), std::move(b));
}

}  // namespace grunbaum
