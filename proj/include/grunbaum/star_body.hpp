#pragma once

#include "grunbaum/constants.hpp"
#include "grunbaum/polytope.hpp"
#include "grunbaum/product_cone.hpp"

#include <cmath>
#include <memory>
#include <optional>

namespace grunbaum {

/// Star-shaped body about the origin, the common interface of the dual
/// volume estimators. Radial functions may vanish on part of the sphere
/// when the origin sits on the boundary.
class StarBody {
public:
    virtual ~StarBody() = default;
    virtual int dim() const = 0;
    virtual double radial(const Vec& u) const = 0;
    virtual bool member(const Vec& x) const = 0;
    virtual std::pair<Vec, Vec> bounding_box() const = 0;
    /// Exact vol_d(F)(body cap F) when the body supports it (polytopes, balls).
    virtual std::optional<double> section_volume(const Subspace& f) const {
        (void)f;
        return std::nullopt;
    }
    /// Underlying polytope, when there is one (used for quadrature knots).
    virtual const Polytope* as_polytope() const { return nullptr; }
};

class PolytopeStar final : public StarBody {
public:
    explicit PolytopeStar(Polytope p) : body_(std::move(p)) {}
    int dim() const override { return body_.ambient_dim(); }
    double radial(const Vec& u) const override { return radial_or_zero(body_, u); }
    bool member(const Vec& x) const override { return body_.contains(x); }
    std::pair<Vec, Vec> bounding_box() const override { return body_.bounding_box(); }
    std::optional<double> section_volume(const Subspace& f) const override {
        const auto s = section(body_, f);
        return s ? volume(*s) : 0.0;
    }
    const Polytope* as_polytope() const override { return &body_; }

private:
    Polytope body_;
};

class ProductConeStar final : public StarBody {
public:
    explicit ProductConeStar(ProductConeBody b) : body_(std::move(b)) {}
    int dim() const override { return body_.ambient_dim(); }
    double radial(const Vec& u) const override { return body_.radial_or_zero(u); }
    bool member(const Vec& x) const override { return body_.member(x); }
    std::pair<Vec, Vec> bounding_box() const override {
        const double r = body_.circumradius();
        const int n = body_.ambient_dim();
        return {Vec::Constant(n, -r), Vec::Constant(n, r)};
    }

private:
    ProductConeBody body_;
};

/// Centered Euclidean ball; the zero-variance fixture of the estimators.
class BallStar final : public StarBody {
public:
    BallStar(int dim, double radius) : dim_(dim), radius_(radius) {
        require(dim >= 1 && radius > 0.0, "BallStar: bad parameters");
    }
    int dim() const override { return dim_; }
    double radial(const Vec&) const override { return radius_; }
    bool member(const Vec& x) const override { return x.norm() <= radius_ + kGeomTol; }
    std::pair<Vec, Vec> bounding_box() const override {
        return {Vec::Constant(dim_, -radius_), Vec::Constant(dim_, radius_)};
    }
    std::optional<double> section_volume(const Subspace& f) const override {
        return ball_volume(f.dim()) * std::pow(radius_, f.dim());
    }

private:
    int dim_;
    double radius_;
};

}  // namespace grunbaum
