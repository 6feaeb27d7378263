#include "grunbaum/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace grunbaum {

namespace {

constexpr double kDedupeTol = 1e-8;
constexpr double kRankTol = 1e-10;

std::vector<Vec> dedupe_points(const std::vector<Vec>& pts, double tol) {
    std::vector<Vec> out;
    for (const Vec& p : pts) {
        bool seen = false;
        for (const Vec& q : out) {
            if ((p - q).lpNorm<Eigen::Infinity>() <= tol) {
                seen = true;
                break;
            }
        }
        if (!seen) out.push_back(p);
    }
    return out;
}

int affine_rank(const std::vector<Vec>& pts, double tol) {
    const int d = static_cast<int>(pts[0].size());
    Mat m(static_cast<int>(pts.size()) - 1, d);
    for (size_t j = 1; j < pts.size(); ++j) m.row(static_cast<int>(j) - 1) = (pts[j] - pts[0]).transpose();
    if (m.rows() == 0) return 0;
    Eigen::JacobiSVD<Mat> svd(m);
    const double scale = std::max(1.0, svd.singularValues()[0]);
    int rank = 0;
    for (int j = 0; j < svd.singularValues().size(); ++j) {
        if (svd.singularValues()[j] > tol * scale) ++rank;
    }
    return rank;
}

// Visit all k-subsets of {0..m-1}.
template <typename F>
void for_each_subset(int m, int k, F&& body) {
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        body(idx);
        int j = k - 1;
        while (j >= 0 && idx[j] == m - k + j) --j;
        if (j < 0) return;
        ++idx[j];
        for (int l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
    }
}

struct VolCent {
    double vol = 0.0;
    Vec cent;
};

VolCent volume_centroid(const Polytope& p);

}  // namespace

bool Polytope::contains(const Vec& x, double tol) const {
    for (const Facet& f : facets_) {
        if (f.normal.dot(x) > f.offset + tol) return false;
    }
    return true;
}

std::pair<Vec, Vec> Polytope::bounding_box() const {
    Vec lo = vertices_[0], hi = vertices_[0];
    for (const Vec& v : vertices_) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
    }
    return {lo, hi};
}

double Polytope::circumradius() const {
    double r = 0.0;
    for (const Vec& v : vertices_) r = std::max(r, v.norm());
    return r;
}

double Polytope::diameter() const {
    double d = 0.0;
    for (size_t a = 0; a < vertices_.size(); ++a) {
        for (size_t b = a + 1; b < vertices_.size(); ++b) {
            d = std::max(d, (vertices_[a] - vertices_[b]).norm());
        }
    }
    return d;
}

Polytope Polytope::translated(const Vec& t) const {
    Polytope out = *this;
    for (Vec& v : out.vertices_) v += t;
    for (Facet& f : out.facets_) f.offset += f.normal.dot(t);
    return out;
}

Polytope Polytope::scaled(double s) const {
    require(s > 0.0, "Polytope::scaled: factor must be positive");
    Polytope out = *this;
    for (Vec& v : out.vertices_) v *= s;
    for (Facet& f : out.facets_) f.offset *= s;
    return out;
}

Polytope Polytope::transformed(const Mat& a, const Vec& t) const {
    std::vector<Vec> pts;
    pts.reserve(vertices_.size());
    for (const Vec& v : vertices_) pts.push_back(a * v + t);
    return hull(pts);
}

Polytope hull(const std::vector<Vec>& points) {
    require(!points.empty(), "hull: no points");
    const int d = static_cast<int>(points[0].size());
    require(d >= 1 && d <= 6, "hull: ambient dimension must be in [1, 6]");
    require(points.size() <= 256, "hull: vertex budget is 256 points");
    std::vector<Vec> pts = dedupe_points(points, kDedupeTol);
    const int m = static_cast<int>(pts.size());
    require(m >= d + 1, "hull: degenerate input (too few distinct points)");
    require(affine_rank(pts, kRankTol) == d, "hull: degenerate input (not full-dimensional)");

    Polytope out;
    out.dim_ = d;

    if (d == 1) {
        double lo = pts[0][0], hi = pts[0][0];
        for (const Vec& p : pts) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        Vec vlo(1), vhi(1), plus(1), minus(1);
        vlo[0] = lo;
        vhi[0] = hi;
        plus[0] = 1.0;
        minus[0] = -1.0;
        out.vertices_ = {vlo, vhi};
        out.facets_ = {{plus, hi}, {minus, -lo}};
        return out;
    }

    // Supporting hyperplane scan over all d-subsets of points.
    std::vector<Facet> facets;
    auto add_facet = [&](const Vec& a, double b) {
        for (const Facet& f : facets) {
            if ((f.normal - a).lpNorm<Eigen::Infinity>() <= 1e-7 &&
                std::abs(f.offset - b) <= 1e-7) {
                return;
            }
        }
        facets.push_back({a, b});
    };
    Mat span(d - 1, d);
    for_each_subset(m, d, [&](const std::vector<int>& idx) {
        for (int j = 1; j < d; ++j) span.row(j - 1) = (pts[idx[j]] - pts[idx[0]]).transpose();
        Eigen::JacobiSVD<Mat> svd(span, Eigen::ComputeFullV);
        const auto& sv = svd.singularValues();
        const double scale = std::max(1.0, sv[0]);
        // The subset must affinely span a hyperplane.
        if (d >= 2 && sv[d - 2] <= kRankTol * scale) return;
        Vec a = svd.matrixV().col(d - 1);
        double b = a.dot(pts[idx[0]]);
        double above = 0.0, below = 0.0;
        for (const Vec& p : pts) {
            const double s = a.dot(p) - b;
            above = std::max(above, s);
            below = std::min(below, s);
        }
        if (above <= kGeomTol) add_facet(a, b);
        if (-below <= kGeomTol) add_facet(-a, -b);
    });
    require(!facets.empty(), "hull: no supporting hyperplanes found");

    // Vertices: points tight at >= d facets whose normals span R^d.
    std::vector<Vec> verts;
    for (const Vec& p : pts) {
        Mat tight(d, static_cast<int>(facets.size()));
        int count = 0;
        for (const Facet& f : facets) {
            if (f.normal.dot(p) >= f.offset - kGeomTol) tight.col(count++) = f.normal;
        }
        if (count < d) continue;
        Eigen::JacobiSVD<Mat> svd(tight.leftCols(count));
        if (svd.singularValues()[d - 1] > kRankTol * std::max(1.0, svd.singularValues()[0])) {
            verts.push_back(p);
        }
    }
    require(static_cast<int>(verts.size()) >= d + 1, "hull: vertex identification failed");
    out.vertices_ = std::move(verts);
    out.facets_ = std::move(facets);
    return out;
}

namespace {

VolCent volume_centroid(const Polytope& p) {
    const int d = p.ambient_dim();
    if (d == 1) {
        double lo = p.vertices()[0][0], hi = lo;
        for (const Vec& v : p.vertices()) {
            lo = std::min(lo, v[0]);
            hi = std::max(hi, v[0]);
        }
        Vec c(1);
        c[0] = 0.5 * (lo + hi);
        return {hi - lo, c};
    }

    Vec apex = Vec::Zero(d);
    for (const Vec& v : p.vertices()) apex += v;
    apex /= static_cast<double>(p.vertices().size());

    double vol = 0.0;
    Vec moment = Vec::Zero(d);
    for (const Facet& f : p.facets()) {
        std::vector<Vec> tight;
        for (const Vec& v : p.vertices()) {
            if (f.normal.dot(v) >= f.offset - kGeomTol) tight.push_back(v);
        }
        if (static_cast<int>(tight.size()) < d) continue;

        // Orthonormal in-plane frame from the tight vertex spread.
        Vec ref = tight[0];
        Mat rows(static_cast<int>(tight.size()) - 1, d);
        for (size_t j = 1; j < tight.size(); ++j) rows.row(static_cast<int>(j) - 1) = (tight[j] - ref).transpose();
        Eigen::JacobiSVD<Mat> svd(rows, Eigen::ComputeFullV);
        Mat frame = svd.matrixV().leftCols(d - 1);

        std::vector<Vec> local;
        local.reserve(tight.size());
        for (const Vec& v : tight) local.push_back(frame.transpose() * (v - ref));
        const VolCent face = volume_centroid(hull(local));

        const double h = f.offset - f.normal.dot(apex);
        const Vec face_centroid = ref + frame * face.cent;
        const double pyramid_vol = h * face.vol / d;
        const Vec pyramid_centroid = apex + (static_cast<double>(d) / (d + 1)) * (face_centroid - apex);
        vol += pyramid_vol;
        moment += pyramid_vol * pyramid_centroid;
    }
    require(vol > 0.0, "volume: non-positive result (degenerate polytope?)");
    return {vol, moment / vol};
}

}  // namespace

double volume(const Polytope& p) { return volume_centroid(p).vol; }

Vec centroid(const Polytope& p) { return volume_centroid(p).cent; }

double surface_area(const Polytope& p) {
    const int d = p.ambient_dim();
    if (d == 1) return 2.0;  // two endpoints, 0-dimensional counting measure
    double total = 0.0;
    for (const Facet& f : p.facets()) {
        std::vector<Vec> tight;
        for (const Vec& v : p.vertices()) {
            if (f.normal.dot(v) >= f.offset - kGeomTol) tight.push_back(v);
        }
        if (static_cast<int>(tight.size()) < d) continue;
        const Vec ref = tight[0];
        Mat rows(static_cast<int>(tight.size()) - 1, d);
        for (size_t j = 1; j < tight.size(); ++j) {
            rows.row(static_cast<int>(j) - 1) = (tight[j] - ref).transpose();
        }
        Eigen::JacobiSVD<Mat> svd(rows, Eigen::ComputeFullV);
        const Mat frame = svd.matrixV().leftCols(d - 1);
        std::vector<Vec> local;
        local.reserve(tight.size());
        for (const Vec& v : tight) local.push_back(frame.transpose() * (v - ref));
        total += volume(hull(local));
    }
    return total;
}

namespace {

// Vertex enumeration of {y : A y <= b} by solving all d-subsets of tight
// constraints; adequate for d <= 4 with <= 64 rows.
std::vector<Vec> enumerate_h_vertices(const Mat& a, const Vec& b) {
    const int m = static_cast<int>(a.rows());
    const int d = static_cast<int>(a.cols());
    std::vector<Vec> verts;
    if (m < d) return verts;
    Mat sub(d, d);
    Vec rhs(d);
    for_each_subset(m, d, [&](const std::vector<int>& idx) {
        for (int j = 0; j < d; ++j) {
            sub.row(j) = a.row(idx[j]);
            rhs[j] = b[idx[j]];
        }
        Eigen::PartialPivLU<Mat> lu(sub);
        // Reject near-singular systems; their vertices are found through
        // better-conditioned subsets of the same tight set.
        if (std::abs(lu.determinant()) < 1e-10) return;
        const Vec y = lu.solve(rhs);
        if (!y.allFinite()) return;
        if (((a * y - b).array() <= kGeomTol).all()) verts.push_back(y);
    });
    return dedupe_points(verts, kDedupeTol);
}

}  // namespace

std::optional<Polytope> section(const Polytope& p, const Subspace& e) {
    require(e.ambient_dim() == p.ambient_dim(), "section: ambient dimension mismatch");
    const int d = e.dim();
    const auto& facets = p.facets();

    std::vector<int> live;
    for (size_t j = 0; j < facets.size(); ++j) {
        const Vec an = e.basis().transpose() * facets[j].normal;
        if (an.norm() > 1e-12) {
            live.push_back(static_cast<int>(j));
        } else if (facets[j].offset < -kGeomTol) {
            return std::nullopt;  // constraint excludes the whole subspace
        }
    }
    Mat a(static_cast<int>(live.size()), d);
    Vec b(static_cast<int>(live.size()));
    for (size_t r = 0; r < live.size(); ++r) {
        const Facet& f = facets[live[r]];
        Vec an = e.basis().transpose() * f.normal;
        const double norm = an.norm();
        a.row(static_cast<int>(r)) = (an / norm).transpose();
        b[static_cast<int>(r)] = f.offset / norm;
    }

    const std::vector<Vec> verts = enumerate_h_vertices(a, b);
    if (static_cast<int>(verts.size()) < d + 1) return std::nullopt;
    try {
        return hull(verts);
    } catch (const Error&) {
        return std::nullopt;  // lower-dimensional section
    }
}

std::optional<Polytope> section_translated(const Polytope& p, const Subspace& e,
                                           const Vec& x) {
    return section(p.translated(-x), e);
}

Polytope project(const Polytope& p, const Subspace& e) {
    require(e.ambient_dim() == p.ambient_dim(), "project: ambient dimension mismatch");
    std::vector<Vec> pts;
    pts.reserve(p.vertices().size());
    for (const Vec& v : p.vertices()) pts.push_back(e.basis().transpose() * v);
    return hull(pts);
}

std::optional<Polytope> halfspace_cut(const Polytope& p, const HalfSpace& h) {
    const Vec xi = (h.side == HalfSpace::Side::plus) ? h.normal : Vec(-h.normal);
    require(std::abs(xi.norm() - 1.0) <= 1e-12, "halfspace_cut: normal must be unit");
    const int d = p.ambient_dim();
    const auto& verts = p.vertices();

    std::vector<double> s(verts.size());
    for (size_t j = 0; j < verts.size(); ++j) s[j] = xi.dot(verts[j]);

    std::vector<Vec> pts;
    for (size_t j = 0; j < verts.size(); ++j) {
        if (s[j] >= -kGeomTol) pts.push_back(verts[j]);
    }
    if (pts.empty()) return std::nullopt;
    if (pts.size() == verts.size()) return p;

    // Edge detection: two vertices sharing >= d-1 tight facets.
    for (size_t ja = 0; ja < verts.size(); ++ja) {
        for (size_t jb = ja + 1; jb < verts.size(); ++jb) {
            if ((s[ja] > kGeomTol) == (s[jb] > kGeomTol)) continue;
            if (s[ja] >= -kGeomTol && s[jb] >= -kGeomTol) continue;
            int shared = 0;
            for (const Facet& f : p.facets()) {
                if (f.normal.dot(verts[ja]) >= f.offset - kGeomTol &&
                    f.normal.dot(verts[jb]) >= f.offset - kGeomTol) {
                    ++shared;
                }
            }
            if (shared < d - 1) continue;
            const double t = s[ja] / (s[ja] - s[jb]);
            pts.push_back(verts[ja] + t * (verts[jb] - verts[ja]));
        }
    }
    try {
        return hull(pts);
    } catch (const Error&) {
        return std::nullopt;  // cut grazes a face
    }
}

double radial(const Polytope& p, const Vec& u) {
    double min_offset = std::numeric_limits<double>::infinity();
    for (const Facet& f : p.facets()) min_offset = std::min(min_offset, f.offset);
    require(min_offset > 1e-12, "radial: origin not interior");
    return radial_or_zero(p, u);
}

double radial_or_zero(const Polytope& p, const Vec& u) {
    double r = std::numeric_limits<double>::infinity();
    for (const Facet& f : p.facets()) {
        const double den = f.normal.dot(u);
        if (den > 1e-14) r = std::min(r, f.offset / den);
    }
    require(std::isfinite(r), "radial: direction escapes to infinity (unbounded?)");
    return std::max(r, 0.0);
}

Polytope random_centered_polytope(int n, int m, const Seed& seed) {
    require(n >= 1 && n <= 6, "random_centered_polytope: n must be in [1, 6]");
    require(m >= n + 2, "random_centered_polytope: need m >= n + 2 points");
    Rng rng(seed);
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<Vec> pts(m);
        for (int j = 0; j < m; ++j) pts[j] = rng.normal_vector(n);
        try {
            const Polytope h = hull(pts);
            return h.translated(-centroid(h));
        } catch (const Error&) {
            continue;
        }
    }
    throw Error("random_centered_polytope: degenerate samples (8 retries)");
}

std::vector<Vec> vertices_ccw(const Polytope& p) {
    require(p.ambient_dim() == 2, "vertices_ccw: 2-D only");
    Vec c = Vec::Zero(2);
    for (const Vec& v : p.vertices()) c += v;
    c /= static_cast<double>(p.vertices().size());
    std::vector<Vec> out = p.vertices();
    std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
        return std::atan2(a[1] - c[1], a[0] - c[0]) < std::atan2(b[1] - c[1], b[0] - c[0]);
    });
    return out;
}

double perimeter(const Polytope& p) {
    const std::vector<Vec> v = vertices_ccw(p);
    double len = 0.0;
    for (size_t j = 0; j < v.size(); ++j) len += (v[(j + 1) % v.size()] - v[j]).norm();
    return len;
}

double distance_to(const Polytope& p, const Vec& x) {
    require(p.ambient_dim() == 2, "distance_to: 2-D only");
    if (p.contains(x)) return 0.0;
    const std::vector<Vec> v = vertices_ccw(p);
    double best = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < v.size(); ++j) {
        const Vec& a = v[j];
        const Vec& b = v[(j + 1) % v.size()];
        const Vec ab = b - a;
        const double t = std::clamp(ab.dot(x - a) / ab.squaredNorm(), 0.0, 1.0);
        best = std::min(best, (x - (a + t * ab)).norm());
    }
    return best;
}

}  // namespace grunbaum
