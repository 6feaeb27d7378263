#include "grunbaum/inequalities.hpp"

#include "grunbaum/constants.hpp"
#include "grunbaum/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace grunbaum {

namespace {

constexpr double kCentroidTol = 1e-8;

Seed substream_for(const CheckConfig& cfg, std::uint64_t label) {
    return substream(cfg.seed, label);
}

double combined_sigma(double ratio, const Estimate& lhs, const Estimate& rhs) {
    if (lhs.value == 0.0 || rhs.value == 0.0) return std::abs(ratio);
    const double rl = lhs.stderr_ / std::abs(lhs.value);
    const double rr = rhs.stderr_ / std::abs(rhs.value);
    return std::abs(ratio) * std::sqrt(rl * rl + rr * rr);
}

InequalityReport assemble_report(std::string theorem, int n, int k, int i,
                                 Estimate lhs, Estimate rhs, double constant,
                                 const CheckConfig& cfg) {
    InequalityReport rep;
    rep.theorem = std::move(theorem);
    rep.n = n;
    rep.k = k;
    rep.i = i;
    rep.lhs = std::move(lhs);
    rep.rhs_raw = std::move(rhs);
    rep.constant = constant;
    require(rep.rhs_raw.value > 0.0, "check: degenerate right-hand side");
    rep.ratio = rep.lhs.value / rep.rhs_raw.value;
    rep.margin = rep.ratio - constant;
    rep.sigma = combined_sigma(rep.ratio, rep.lhs, rep.rhs_raw);
    rep.pass = rep.margin >= -3.0 * rep.sigma - 1e-9;
    rep.seed = cfg.seed;
    return rep;
}

double ball_product_volume(const BallProduct& bp) {
    return ball_volume(bp.p) * std::pow(bp.a, bp.p) * ball_volume(bp.q) *
           std::pow(bp.b, bp.q);
}

// Dual volume (within dim k) of a centered ball product whose first
// factor has dimension exactly i, by quadrature; exact closed form for
// i = k.
double ball_product_dual_volume(const BallProduct& bp, int i, double rel_tol) {
    const int k = bp.dim();
    if (i == k) return ball_product_volume(bp);
    require(bp.p == i,
            "dual functional on ball products requires the first factor to have dimension i");
    if (bp.a <= 0.0 || bp.b <= 0.0) return 0.0;  // lower-dimensional section
    const double scale = (static_cast<double>(i) / k) * sphere_area(i) *
                         sphere_area(k - i) * std::pow(bp.a, i);
    return dual_volume_ball_product(k, i, bp.a, bp.b, rel_tol * scale);
}

// ---------------------------------------------------------------------------
// Section functional evaluation (shared by searches and final estimates)

struct EvalResult {
    double value = 0.0;
    double stderr_ = 0.0;
};

EvalResult eval_polytope_functional(const Polytope& body, const Subspace& e, int i,
                                    SectionFunctional fn, const Vec& x, long samples,
                                    const Seed& seed, double quad_rel_tol) {
    (void)quad_rel_tol;
    const auto sec = section_translated(body, e, x);
    if (!sec) return {0.0, 0.0};
    const int k = e.dim();
    switch (fn) {
        case SectionFunctional::volume_k:
            return {volume(*sec), 0.0};
        case SectionFunctional::intrinsic_i: {
            if (i == k) return {volume(*sec), 0.0};
            // V_{k-1} is half the surface area; exact and far cheaper
            // than the Kubota estimator inside a search loop.
            if (i == k - 1) return {0.5 * surface_area(*sec), 0.0};
            const Estimate est =
                intrinsic_volume(*sec, i, IntrinsicMethod::kubota_mc, samples, seed);
            return {est.value, est.stderr_};
        }
        case SectionFunctional::dual_i: {
            if (i == k) return {volume(*sec), 0.0};
            const PolytopeStar star(*sec);
            if (k <= 2) {
                const Estimate est =
                    dual_volume(star, i, DualMethod::sphere_quadrature, 0, seed);
                return {est.value, 0.0};
            }
            const Estimate est = dual_volume(star, i, DualMethod::sphere_mc, samples, seed);
            return {est.value, est.stderr_};
        }
    }
    throw Error("eval_polytope_functional: unknown functional");
}

EvalResult eval_cone_functional(const ProductConeBody& body, const Subspace& e, int i,
                                SectionFunctional fn, const Vec& x,
                                double quad_rel_tol) {
    const auto bp = pc_translated_section(body, e, x);
    if (!bp) return {0.0, 0.0};
    switch (fn) {
        case SectionFunctional::volume_k:
            return {ball_product_volume(*bp), 0.0};
        case SectionFunctional::intrinsic_i:
            return {ball_product_intrinsic_volume(*bp, i), 0.0};
        case SectionFunctional::dual_i:
            return {ball_product_dual_volume(*bp, i, quad_rel_tol), 0.0};
    }
    throw Error("eval_cone_functional: unknown functional");
}

EvalResult eval_functional(const Body& body, const Subspace& e, int i,
                           SectionFunctional fn, const Vec& x, long samples,
                           const Seed& seed, double quad_rel_tol) {
    if (const Polytope* p = std::get_if<Polytope>(&body)) {
        return eval_polytope_functional(*p, e, i, fn, x, samples, seed, quad_rel_tol);
    }
    return eval_cone_functional(std::get<ProductConeBody>(body), e, i, fn, x,
                                quad_rel_tol);
}

// ---------------------------------------------------------------------------
// Half-space section machinery

// The body of the half-space checks: the section (or projection) of the
// input expressed in E-coordinates, carried either as an exact polytope
// or as a product cone within E.
struct SectionInE {
    std::optional<Polytope> poly;
    std::optional<ProductConeBody> cone;
};

SectionInE section_in_e(const Body& body, const Subspace& e, HalfspaceMode mode) {
    SectionInE out;
    if (const Polytope* p = std::get_if<Polytope>(&body)) {
        if (mode == HalfspaceMode::projection) {
            out.poly = project(*p, e);
        } else {
            auto sec = section(*p, e);
            require(sec.has_value(), "check: empty central section");
            out.poly = std::move(*sec);
        }
        return out;
    }
    // Product cones compatible with E are rotationally symmetric around
    // their axis, so the central section and the projection coincide.
    const auto& pc = std::get<ProductConeBody>(body);
    PcSection sec = pc_section(pc, e);
    if (sec.cone) {
        out.cone = std::move(*sec.cone);
        return out;
    }
    throw Error("check_halfspace: product-cone body must have its axis inside E");
}

double exact_halfspace_volume(const SectionInE& s, const Vec& xi_e, bool plus_side) {
    if (s.poly) {
        const auto cut = halfspace_cut(
            *s.poly, HalfSpace{xi_e, plus_side ? HalfSpace::Side::plus : HalfSpace::Side::minus});
        return cut ? volume(*cut) : 0.0;
    }
    const ProductConeBody& cone = *s.cone;
    const double along = xi_e.dot(cone.axis());
    if (std::abs(std::abs(along) - 1.0) <= 1e-10) {
        const double above = pc_volume_above(cone, 0.0);
        const bool wants_above = (along > 0.0) == plus_side;
        return wants_above ? above : pc_volume(cone) - above;
    }
    require(cone.p() <= 1 && cone.q() <= 1,
            "check_halfspace: off-axis cuts of product cones need segment factors");
    const auto cut = halfspace_cut(
        pc_to_polytope(cone),
        HalfSpace{xi_e, plus_side ? HalfSpace::Side::plus : HalfSpace::Side::minus});
    return cut ? volume(*cut) : 0.0;
}

double exact_full_volume(const SectionInE& s) {
    return s.poly ? volume(*s.poly) : pc_volume(*s.cone);
}

std::unique_ptr<StarBody> star_of(const SectionInE& s) {
    if (s.poly) return std::make_unique<PolytopeStar>(*s.poly);
    const ProductConeBody& cone = *s.cone;
    if (cone.p() <= 1 && cone.q() <= 1) {
        return std::make_unique<PolytopeStar>(pc_to_polytope(cone));
    }
    return std::make_unique<ProductConeStar>(cone);
}

DualMethod pick_dual_method(const CheckConfig& cfg, int k) {
    if (cfg.dual_method) return *cfg.dual_method;
    return (k <= 2) ? DualMethod::sphere_quadrature : DualMethod::sphere_mc;
}

}  // namespace

// ---------------------------------------------------------------------------

int body_ambient_dim(const Body& body) {
    if (const Polytope* p = std::get_if<Polytope>(&body)) return p->ambient_dim();
    return std::get<ProductConeBody>(body).ambient_dim();
}

double body_centroid_deviation(const Body& body) {
    if (const Polytope* p = std::get_if<Polytope>(&body)) return centroid(*p).norm();
    // Transverse coordinates vanish by rotational symmetry.
    return std::abs(pc_centroid(std::get<ProductConeBody>(body)));
}

double body_diameter(const Body& body) {
    if (const Polytope* p = std::get_if<Polytope>(&body)) return p->diameter();
    return 2.0 * std::get<ProductConeBody>(body).circumradius();
}

const char* to_string(Measure m) {
    switch (m) {
        case Measure::volume: return "volume";
        case Measure::intrinsic: return "intrinsic";
        case Measure::dual: return "dual";
    }
    return "unknown";
}

const char* to_string(HalfspaceMode m) {
    return m == HalfspaceMode::section ? "section" : "projection";
}

const char* to_string(SweepTheorem t) {
    switch (t) {
        case SweepTheorem::thm1: return "thm1";
        case SweepTheorem::thm2: return "thm2";
        case SweepTheorem::thm3_section: return "thm3_section";
        case SweepTheorem::thm3_projection: return "thm3_projection";
    }
    return "unknown";
}

MaxSearchResult max_section_functional(const Body& body, const Subspace& e, int i,
                                       SectionFunctional functional,
                                       SearchDomain domain, const CheckConfig& cfg) {
    const int n = body_ambient_dim(body);
    const int k = e.dim();
    require(e.ambient_dim() == n, "max_section_functional: ambient mismatch");
    require(1 <= i && i <= k, "max_section_functional: need 1 <= i <= k");

    const Seed score_seed = substream_for(cfg, 101);
    const Seed final_seed = substream_for(cfg, 102);
    const double diam = body_diameter(body);

    // Translating within E never changes the functional of the section,
    // so the E-perp slice of the domain carries all the variation.
    const bool search_perp =
        (domain == SearchDomain::orth_complement) ||
        std::holds_alternative<ProductConeBody>(body);

    auto finalize = [&](const Vec& x, SearchTrace trace) {
        const EvalResult fin =
            eval_functional(body, e, i, functional, x, cfg.samples, final_seed,
                            cfg.quad_rel_tol);
        Estimate est{fin.value, fin.stderr_, fin.stderr_ > 0.0 ? cfg.samples : 0,
                     "section_functional", final_seed};
        return MaxSearchResult{x, est, std::move(trace)};
    };

    if (k == n && domain == SearchDomain::orth_complement) {
        // E is the whole space; the functional is translation invariant.
        return finalize(Vec::Zero(n), SearchTrace{});
    }

    Vec lo, hi;
    std::function<Vec(const Vec&)> to_ambient;
    std::function<bool(const Vec&)> feasible = [](const Vec&) { return true; };

    if (search_perp) {
        const Subspace perp = e.orthogonal_complement();
        const int d = perp.dim();
        lo = Vec::Constant(d, std::numeric_limits<double>::infinity());
        hi = -lo;
        if (const Polytope* p = std::get_if<Polytope>(&body)) {
            for (const Vec& v : p->vertices()) {
                const Vec y = perp.coords(v);
                lo = lo.cwiseMin(y);
                hi = hi.cwiseMax(y);
            }
        } else {
            const double r = std::get<ProductConeBody>(body).circumradius();
            lo = Vec::Constant(d, -r);
            hi = Vec::Constant(d, r);
        }
        to_ambient = [perp](const Vec& y) { return perp.embed(y); };
        if (domain == SearchDomain::whole_body) {
            // Dual functionals need x inside the body itself.
            if (const Polytope* p = std::get_if<Polytope>(&body)) {
                to_ambient = [perp](const Vec& y) { return perp.embed(y); };
                feasible = [p, perp](const Vec& y) { return p->contains(perp.embed(y)); };
            } else {
                const ProductConeBody* pc = &std::get<ProductConeBody>(body);
                feasible = [pc, perp](const Vec& y) { return pc->member(perp.embed(y)); };
            }
        }
    } else {
        const Polytope& p = std::get<Polytope>(body);
        std::tie(lo, hi) = p.bounding_box();
        to_ambient = [](const Vec& y) { return y; };
        feasible = [&p](const Vec& y) { return p.contains(y); };
    }

    PatternSearchOptions opts;
    opts.starts = cfg.starts;
    opts.shrink = cfg.shrink;
    opts.step_tol = cfg.step_tol_rel * diam;
    const auto objective = [&](const Vec& y) {
        return eval_functional(body, e, i, functional, to_ambient(y),
                               cfg.search_samples, score_seed, cfg.quad_rel_tol)
            .value;
    };
    PatternSearchResult res = pattern_search_max(objective, lo, hi, feasible, opts);
    return finalize(to_ambient(res.x), std::move(res.trace));
}

InequalityReport check_centroid_section(const Body& body, const Subspace& e, int i,
                                        Measure measure, const CheckConfig& cfg) {
    const int n = body_ambient_dim(body);
    const int k = e.dim();
    require(body_centroid_deviation(body) <= kCentroidTol,
            "check_centroid_section: body centroid is displaced from the origin");
    require(1 <= i && i <= k, "check_centroid_section: need 1 <= i <= k");
    if (measure == Measure::volume) {
        require(i == k, "check_centroid_section: volume measure forces i = k");
    }

    const SectionFunctional fn = (measure == Measure::volume)
                                     ? SectionFunctional::volume_k
                                     : (measure == Measure::intrinsic)
                                           ? SectionFunctional::intrinsic_i
                                           : SectionFunctional::dual_i;
    const SearchDomain domain = (measure == Measure::dual)
                                    ? SearchDomain::whole_body
                                    : SearchDomain::orth_complement;

    const Seed lhs_seed = substream_for(cfg, 1);
    const EvalResult at_origin = eval_functional(body, e, i, fn, Vec::Zero(n),
                                                 cfg.samples, lhs_seed, cfg.quad_rel_tol);
    require(at_origin.value > 0.0, "check_centroid_section: empty central section");
    Estimate lhs{at_origin.value, at_origin.stderr_,
                 at_origin.stderr_ > 0.0 ? cfg.samples : 0, "section_functional",
                 lhs_seed};

    MaxSearchResult rhs = max_section_functional(body, e, i, fn, domain, cfg);

    const SharpConstantKind kind =
        (measure == Measure::volume)
            ? SharpConstantKind::centroid_section_volume
            : (measure == Measure::intrinsic)
                  ? SharpConstantKind::centroid_section_intrinsic
                  : SharpConstantKind::centroid_section_dual;
    const double constant = sharp_constant(kind, n, measure == Measure::volume ? k : i);

    InequalityReport rep = assemble_report(
        std::string("centroid_section_") + to_string(measure), n, k, i, std::move(lhs),
        std::move(rhs.value), constant, cfg);
    rep.trace = std::move(rhs.trace);
    return rep;
}

InequalityReport check_halfspace(const Body& body, const Subspace& e, int i,
                                 HalfspaceMode mode, Measure measure, const Vec& xi,
                                 const CheckConfig& cfg) {
    const int n = body_ambient_dim(body);
    const int k = e.dim();
    require(measure != Measure::intrinsic,
            "check_halfspace: measures are volume or dual");
    require(body_centroid_deviation(body) <= kCentroidTol,
            "check_halfspace: body centroid is displaced from the origin");
    require(1 <= i && i <= k, "check_halfspace: need 1 <= i <= k");
    if (measure == Measure::volume) {
        require(i == k, "check_halfspace: volume measure forces i = k");
    }
    require(e.contains(xi), "check_halfspace: xi must lie in E");
    Vec xi_e = e.coords(xi);
    xi_e /= xi_e.norm();

    const SectionInE s = section_in_e(body, e, mode);

    Estimate lhs, rhs;
    if (measure == Measure::volume) {
        lhs = {exact_halfspace_volume(s, xi_e, true), 0.0, 0, "exact_volume",
               std::nullopt};
        rhs = {exact_full_volume(s), 0.0, 0, "exact_volume", std::nullopt};
    } else {
        const auto star = star_of(s);
        const DualMethod method = pick_dual_method(cfg, k);
        const Seed seed = substream_for(cfg, 11);
        lhs = dual_volume_halfspace(*star, i, xi_e, method, cfg.samples, seed);
        rhs = dual_volume(*star, i, method, cfg.samples, seed);
    }

    const SharpConstantKind kind = (measure == Measure::volume)
                                       ? SharpConstantKind::halfspace_volume
                                       : SharpConstantKind::halfspace_dual;
    std::string label;
    if (measure == Measure::volume) {
        label = (k == n) ? "gruenbaum_classic"
                         : (mode == HalfspaceMode::section ? "gruenbaum_sections"
                                                           : "gruenbaum_projections");
    } else {
        label = (mode == HalfspaceMode::section) ? "halfspace_dual_sections"
                                                 : "halfspace_dual_projections";
    }
    return assemble_report(std::move(label), n, k, i, std::move(lhs), std::move(rhs),
                           sharp_constant(kind, n, i), cfg);
}

InequalityReport check_prop(const Body& body, const Subspace& e, const Subspace& f,
                            const Vec& xi, PropVariant which, const CheckConfig& cfg) {
    const int n = body_ambient_dim(body);
    const int k = e.dim();
    const int i = f.dim();
    require(body_centroid_deviation(body) <= kCentroidTol,
            "check_prop: body centroid is displaced from the origin");
    require(e.contains_subspace(f), "check_prop: F must lie inside E");
    require(f.contains(xi), "check_prop: xi must lie in F");

    Estimate lhs, rhs;
    if (const Polytope* p = std::get_if<Polytope>(&body)) {
        // F expressed in E-coordinates.
        const Subspace f_in_e(k, e.basis().transpose() * f.basis());
        Vec xi_f = f_in_e.basis().transpose() * e.coords(xi);
        xi_f /= xi_f.norm();
        std::optional<Polytope> t_body;
        if (which == PropVariant::section_then_project) {
            const auto sec = section(*p, e);
            require(sec.has_value(), "check_prop: empty central section");
            t_body = project(*sec, f_in_e);
        } else {
            const Polytope proj = project(*p, e);
            auto sec = section(proj, f_in_e);
            require(sec.has_value(), "check_prop: empty central section of the projection");
            t_body = std::move(*sec);
        }
        const auto cut = halfspace_cut(*t_body, HalfSpace{xi_f, HalfSpace::Side::plus});
        lhs = {cut ? volume(*cut) : 0.0, 0.0, 0, "exact_volume", std::nullopt};
        rhs = {volume(*t_body), 0.0, 0, "exact_volume", std::nullopt};
    } else {
        // Closed-form path: for compatible product cones both pipelines
        // collapse to the i-dimensional cone K cap F.
        const auto& pc = std::get<ProductConeBody>(body);
        PcSection sec = pc_section(pc, f);
        require(sec.cone.has_value(), "check_prop: F must contain the cone axis");
        const ProductConeBody& cone = *sec.cone;
        require(cone.q() == 0, "check_prop: F must equal span(frame_p, axis)");
        const double along = xi.dot(pc.axis());
        require(std::abs(std::abs(along) - 1.0) <= 1e-10,
                "check_prop: xi must be the cone axis (up to sign)");
        const double above = pc_volume_above(cone, 0.0);
        const double total = pc_volume(cone);
        lhs = {along > 0.0 ? above : total - above, 0.0, 0, "closed_form", std::nullopt};
        rhs = {total, 0.0, 0, "closed_form", std::nullopt};
    }

    const char* label = (which == PropVariant::section_then_project)
                            ? "prop_section_then_project"
                            : "prop_project_then_section";
    return assemble_report(label, n, k, i, std::move(lhs), std::move(rhs),
                           sharp_constant(SharpConstantKind::halfspace_volume, n, i),
                           cfg);
}

double ratio_form(const InequalityReport& report) {
    require(report.rhs_raw.value > report.lhs.value,
            "ratio_form: everything lies on the xi+ side");
    return report.lhs.value / (report.rhs_raw.value - report.lhs.value);
}

WorstDirectionResult worst_direction(const Body& body, const Subspace& e, int i,
                                     HalfspaceMode mode, Measure measure,
                                     const CheckConfig& cfg) {
    const int k = e.dim();
    const SectionInE s = section_in_e(body, e, mode);

    const Seed scan_seed = substream_for(cfg, 21);
    const int count = (k >= 4) ? 2048 : cfg.direction_grid;

    // Scanning score: exact for volume, reduced-sample CRN for dual.
    double rhs_scan = 0.0;
    std::unique_ptr<StarBody> star;
    if (measure == Measure::volume) {
        rhs_scan = exact_full_volume(s);
    } else {
        star = star_of(s);
        rhs_scan = dual_volume(*star, i, pick_dual_method(cfg, k), cfg.search_samples,
                               scan_seed)
                       .value;
    }
    const auto score = [&](const Vec& xi_e) {
        if (measure == Measure::volume) {
            return exact_halfspace_volume(s, xi_e, true) / rhs_scan;
        }
        return dual_volume_halfspace(*star, i, xi_e, pick_dual_method(cfg, k),
                                     cfg.search_samples, scan_seed)
                   .value /
               rhs_scan;
    };

    Vec best;
    double best_score = std::numeric_limits<double>::infinity();
    for (const Vec& u : direction_grid(k, count, scan_seed)) {
        const double v = score(u);
        if (v < best_score) {
            best_score = v;
            best = u;
        }
    }
    if (k >= 2) best = refine_direction_min(score, best, 0.1, 1e-5, cfg.shrink);

    const Vec xi_global = e.embed(best);
    InequalityReport rep = check_halfspace(body, e, i, mode, measure, xi_global, cfg);
    return {xi_global, std::move(rep)};
}

namespace {

// Largest V_i of the axial slices of a sharpness body; by monotonicity
// of intrinsic volumes the off-axis translations only shrink the second
// ball factor, so the maximum sits on the axis.
double max_intrinsic_over_axis(const ProductConeBody& body, const Subspace& e, int i) {
    const auto value = [&](double t) {
        const auto bp = pc_translated_section(body, e, t * body.axis());
        return bp ? ball_product_intrinsic_volume(*bp, i) : 0.0;
    };
    const int grid = 4097;
    double best_t = body.c0(), best = -1.0;
    for (int j = 0; j < grid; ++j) {
        const double t = body.c0() + (body.c1() - body.c0()) * j / (grid - 1.0);
        const double v = value(t);
        if (v > best) {
            best = v;
            best_t = t;
        }
    }
    // Golden-section polish around the grid maximum.
    const double h = (body.c1() - body.c0()) / (grid - 1.0);
    double lo = std::max(body.c0(), best_t - h), hi = std::min(body.c1(), best_t + h);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = value(x1), f2 = value(x2);
    for (int iter = 0; iter < 80; ++iter) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = value(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = value(x1);
        }
    }
    return std::max(best, std::max(f1, f2));
}

}  // namespace

std::vector<SweepRow> sharpness_sweep(SweepTheorem theorem, int n, int k, int i,
                                      const std::vector<double>& epsilons,
                                      std::optional<double> t,
                                      const CheckConfig& cfg) {
    require(!epsilons.empty(), "sharpness_sweep: empty epsilon list");
    for (size_t j = 0; j < epsilons.size(); ++j) {
        require(epsilons[j] > 0.0, "sharpness_sweep: epsilons must be positive");
        if (j > 0) {
            require(epsilons[j] < epsilons[j - 1],
                    "sharpness_sweep: epsilons must be strictly decreasing");
        }
    }
    require(1 <= i && i <= k && k < n, "sharpness_sweep: need 1 <= i <= k < n");

    std::vector<SweepRow> rows;
    rows.reserve(epsilons.size());

    if (theorem == SweepTheorem::thm1 || theorem == SweepTheorem::thm2) {
        // Fixed frames: F = span(e_1..e_i) inside E = span(e_1..e_k),
        // axis e_n orthogonal to E.
        Mat fb = Mat::Identity(n, n).leftCols(i);
        const Subspace f(n, fb);
        Vec xi = Vec::Zero(n);
        xi[n - 1] = 1.0;
        Mat eb = Mat::Identity(n, n).leftCols(k);
        const Subspace e(n, eb);

        const double a0 = (i + 1.0) / (n + 1.0);
        const double b0 = (n - static_cast<double>(i)) / (n + 1.0);

        if (theorem == SweepTheorem::thm1) {
            require(!t.has_value(), "sharpness_sweep: thm1 takes no t");
            const double expected =
                sharp_constant(SharpConstantKind::centroid_section_intrinsic, n, i);
            for (const double eps : epsilons) {
                const ProductConeBody body =
                    make_sharpness_family(SharpnessTheorem::thm1, n, i, eps, f, xi);
                const auto bp0 = pc_translated_section(body, e, Vec::Zero(n));
                require(bp0.has_value(), "sharpness_sweep: empty central section");
                const double num = ball_product_intrinsic_volume(*bp0, i);
                const double den = max_intrinsic_over_axis(body, e, i);
                SweepRow row;
                row.epsilon = eps;
                row.ratio = num / den;
                row.expected_limit = expected;
                row.error = std::abs(row.ratio - expected);
                rows.push_back(row);
            }
            return rows;
        }

        // thm2: dual-volume ratio of the sections at 0 and at t xi.
        require(t.has_value(), "sharpness_sweep: thm2 needs t");
        require(*t > -b0 && *t < a0, "sharpness_sweep: t outside (-(n-i)/(n+1), (i+1)/(n+1))");
        const double a = a0 - *t;
        const double b = b0 + *t;
        const double expected = std::pow(a0 / a, i);
        for (const double eps : epsilons) {
            SweepRow row;
            row.epsilon = eps;
            row.t = *t;
            if (i == k) {
                // Both sections are balls scaled by eps; volumes cancel to the
                // limit value exactly.
                row.ratio = std::pow(a0 / a, i);
            } else {
                const double front = (static_cast<double>(i) / k) * sphere_area(i) *
                                     sphere_area(k - i);
                const double tol_num = cfg.quad_rel_tol * front * std::pow(eps * a0, i);
                const double tol_den = cfg.quad_rel_tol * front * std::pow(eps * a, i);
                const double num = dual_volume_ball_product(k, i, eps * a0, b0, tol_num);
                const double den = dual_volume_ball_product(k, i, eps * a, b, tol_den);
                row.ratio = num / den;
            }
            row.expected_limit = expected;
            row.error = std::abs(row.ratio - expected);
            rows.push_back(row);
        }
        return rows;
    }

    // thm3: hemisphere dual-volume ratio of the cone family, with
    // xi = e_1 inside F = span(e_1..e_i) inside E = span(e_1..e_k).
    Mat fb = Mat::Identity(n, n).leftCols(i);
    const Subspace f(n, fb);
    Vec xi = Vec::Zero(n);
    xi[0] = 1.0;
    Mat eb = Mat::Identity(n, n).leftCols(k);
    const Subspace e(n, eb);
    const double expected = sharp_constant(SharpConstantKind::halfspace_dual, n, i);

    for (size_t j = 0; j < epsilons.size(); ++j) {
        const double eps = epsilons[j];
        const ProductConeBody body =
            make_sharpness_family(SharpnessTheorem::thm3, n, i, eps, f, xi);
        const PcSection sec = pc_section(body, e);
        require(sec.cone.has_value(), "sharpness_sweep: expected a cone section");
        const ProductConeBody& cone = *sec.cone;
        std::unique_ptr<StarBody> star;
        if (cone.p() <= 1 && cone.q() <= 1) {
            star = std::make_unique<PolytopeStar>(pc_to_polytope(cone));
        } else {
            star = std::make_unique<ProductConeStar>(cone);
        }
        Vec xi_e = e.coords(xi);
        const DualMethod method = pick_dual_method(cfg, k);
        const Seed seed = substream_for(cfg, 31 + static_cast<std::uint64_t>(j));
        const Estimate lhs =
            dual_volume_halfspace(*star, i, xi_e, method, cfg.samples, seed);
        const Estimate rhs = dual_volume(*star, i, method, cfg.samples, seed);
        SweepRow row;
        row.epsilon = eps;
        row.ratio = lhs.value / rhs.value;
        row.expected_limit = expected;
        row.error = std::abs(row.ratio - expected);
        row.stderr_ = combined_sigma(row.ratio, lhs, rhs);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace grunbaum
