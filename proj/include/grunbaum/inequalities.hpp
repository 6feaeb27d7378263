#pragma once

#include "grunbaum/polytope.hpp"
#include "grunbaum/product_cone.hpp"
#include "grunbaum/report.hpp"

#include <variant>
#include <vector>

namespace grunbaum {

/// Generic convex body accepted by the checkers: an exact polytope or a
/// closed-form product-cone body.
using Body = std::variant<Polytope, ProductConeBody>;

int body_ambient_dim(const Body& body);
double body_centroid_deviation(const Body& body);
double body_diameter(const Body& body);

enum class SectionFunctional { volume_k, intrinsic_i, dual_i };
enum class SearchDomain { orth_complement, whole_body };
enum class HalfspaceMode { section, projection };
enum class Measure { volume, intrinsic, dual };
enum class PropVariant { section_then_project, project_then_section };
enum class SweepTheorem { thm1, thm2, thm3_section, thm3_projection };

const char* to_string(Measure m);
const char* to_string(HalfspaceMode m);
const char* to_string(SweepTheorem t);

struct CheckConfig {
    Seed seed;
    long samples = 20000;        // final estimates
    long search_samples = 256;   // common-random-number scoring during searches
    int starts = 16;
    double shrink = 0.5;
    double step_tol_rel = 1e-5;  // of the body diameter
    double quad_rel_tol = 1e-6;  // relative tolerance of quadrature paths
    std::optional<DualMethod> dual_method;  // forces the dual estimator
    int direction_grid = 512;    // worst_direction scan (2048 when k = 4)
};

struct MaxSearchResult {
    Vec x;
    Estimate value;
    SearchTrace trace;
};

/// Largest section functional over translations: x ranges over K|E^perp
/// for volume/intrinsic (translation invariance within E) or over K for
/// dual volumes. Empty sections score zero.
MaxSearchResult max_section_functional(const Body& body, const Subspace& e, int i,
                                       SectionFunctional functional,
                                       SearchDomain domain, const CheckConfig& cfg);

/// Centroid-section inequalities: measure of K cap E against the sharp
/// constant times the translated maximum. measure = volume forces i = k.
InequalityReport check_centroid_section(const Body& body, const Subspace& e, int i,
                                        Measure measure, const CheckConfig& cfg);

/// Half-space inequalities on sections/projections: measure of
/// (K cap E or K|E) restricted to xi+ against (i/(n+1))^i times the
/// unrestricted measure.
InequalityReport check_halfspace(const Body& body, const Subspace& e, int i,
                                 HalfspaceMode mode, Measure measure, const Vec& xi,
                                 const CheckConfig& cfg);

/// Mixed section/projection inequalities through an intermediate
/// subspace F inside E (exact polytope pipeline; closed-form cone path
/// for product-cone bodies whose F = span(frame_p, axis)).
InequalityReport check_prop(const Body& body, const Subspace& e, const Subspace& f,
                            const Vec& xi, PropVariant which, const CheckConfig& cfg);

/// The equivalent xi+/xi- form: lhs / (rhs_raw - lhs).
double ratio_form(const InequalityReport& report);

/// Minimizes the half-space ratio over directions xi in E (coarse grid
/// plus pattern-search refinement); returns the minimizing report.
struct WorstDirectionResult {
    Vec xi;
    InequalityReport report;
};
WorstDirectionResult worst_direction(const Body& body, const Subspace& e, int i,
                                     HalfspaceMode mode, Measure measure,
                                     const CheckConfig& cfg);

/// Sharpness sweeps over the K_epsilon families; epsilons must be
/// strictly decreasing. thm2 requires -(n-i)/(n+1) < t < (i+1)/(n+1).
std::vector<SweepRow> sharpness_sweep(SweepTheorem theorem, int n, int k, int i,
                                      const std::vector<double>& epsilons,
                                      std::optional<double> t,
                                      const CheckConfig& cfg);

}  // namespace grunbaum
