#pragma once

#include "grunbaum/common.hpp"
#include "grunbaum/rng.hpp"

namespace grunbaum {

/// Orthonormal frame for a d-dimensional linear subspace of R^n.
/// The basis is stored column-wise (n x d).
class Subspace {
public:
    Subspace(int ambient_dim, Mat basis_columns);

    /// Orthonormalize the given spanning columns (modified Gram-Schmidt
    /// with one re-orthogonalization pass); throws on rank deficiency.
    static Subspace from_spanning(int ambient_dim, const Mat& columns);

    static Subspace full(int n);
    static Subspace span_of(const Vec& v);

    int ambient_dim() const { return n_; }
    int dim() const { return static_cast<int>(basis_.cols()); }
    const Mat& basis() const { return basis_; }
    Vec basis_vector(int j) const { return basis_.col(j); }

    /// Coordinates of x in this frame (orthogonal projection coefficients).
    Vec coords(const Vec& x) const { return basis_.transpose() * x; }
    /// Embed frame coordinates back into R^n.
    Vec embed(const Vec& y) const { return basis_ * y; }
    /// Orthogonal projection of x onto the subspace.
    Vec project_point(const Vec& x) const { return basis_ * (basis_.transpose() * x); }

    bool contains(const Vec& x, double tol = 1e-10) const {
        return (project_point(x) - x).norm() <= tol * std::max(1.0, x.norm());
    }
    bool contains_subspace(const Subspace& other, double tol = 1e-10) const;

    /// Orthonormal frame for the orthogonal complement in R^n.
    Subspace orthogonal_complement() const;

    /// Max deviation of basis^T basis from the identity.
    double gram_defect() const;

private:
    int n_;
    Mat basis_;
};

/// Haar-distributed d-subspace of R^n (orthonormalized Gaussian frame).
Subspace random_subspace(int n, int d, const Seed& seed);

/// Haar-distributed d-subspace of span(E): sampled in E-coordinates and
/// mapped through E's basis.
Subspace random_subspace_within(const Subspace& E, int d, const Seed& seed);

/// Orthonormalize columns in place; returns false if rank-deficient.
bool modified_gram_schmidt(Mat& columns, double tol = 1e-12);

}  // namespace grunbaum
