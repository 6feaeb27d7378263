#include "grunbaum/constants.hpp"
#include "grunbaum/experiment.hpp"
#include "grunbaum/inequalities.hpp"
#include "grunbaum/measures.hpp"
#include "grunbaum/profile.hpp"
#include "grunbaum/quadrature.hpp"
#include "grunbaum/version.hpp"

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

namespace py = pybind11;
using namespace grunbaum;

namespace {

Body body_from_object(const py::object& obj) {
    if (py::isinstance<Polytope>(obj)) return obj.cast<Polytope>();
    if (py::isinstance<ProductConeBody>(obj)) return obj.cast<ProductConeBody>();
    throw py::type_error("expected a Polytope or ProductConeBody");
}

std::unique_ptr<StarBody> star_from_object(const py::object& obj) {
    if (py::isinstance<Polytope>(obj)) {
        return std::make_unique<PolytopeStar>(obj.cast<Polytope>());
    }
    if (py::isinstance<ProductConeBody>(obj)) {
        return std::make_unique<ProductConeStar>(obj.cast<ProductConeBody>());
    }
    throw py::type_error("expected a Polytope or ProductConeBody");
}

DualMethod dual_method_from_name(const std::string& name) {
    if (name == "sphere_mc") return DualMethod::sphere_mc;
    if (name == "sphere_quadrature") return DualMethod::sphere_quadrature;
    if (name == "kubota_mc") return DualMethod::kubota_mc;
    if (name == "solid_mc") return DualMethod::solid_mc;
    throw py::value_error("unknown dual method: " + name);
}

Measure measure_from_name_py(const std::string& name) {
    if (name == "volume") return Measure::volume;
    if (name == "intrinsic") return Measure::intrinsic;
    if (name == "dual") return Measure::dual;
    throw py::value_error("unknown measure: " + name);
}

py::dict report_to_dict(const InequalityReport& r) {
    py::module_ json_mod = py::module_::import("json");
    return json_mod.attr("loads")(to_json(r).dump()).cast<py::dict>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact and Monte-Carlo checks of centroid-section and half-space "
              "inequalities for convex bodies";
    m.attr("__version__") = kToolVersion;

    py::register_exception<Error>(m, "GrunbaumError");

    py::class_<Seed>(m, "Seed")
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("value"),
             py::arg("stream") = 0)
        .def_readwrite("value", &Seed::value)
        .def_readwrite("stream", &Seed::stream);

    py::class_<Subspace>(m, "Subspace")
        .def(py::init<int, Mat>(), py::arg("ambient_dim"), py::arg("basis_columns"))
        .def_static("from_spanning", &Subspace::from_spanning)
        .def_static("full", &Subspace::full)
        .def_property_readonly("ambient_dim", &Subspace::ambient_dim)
        .def_property_readonly("dim", &Subspace::dim)
        .def_property_readonly("basis", &Subspace::basis)
        .def("orthogonal_complement", &Subspace::orthogonal_complement);

    m.def("random_subspace", &random_subspace, py::arg("n"), py::arg("d"), py::arg("seed"));
    m.def("random_subspace_within", &random_subspace_within, py::arg("e"), py::arg("d"),
          py::arg("seed"));

    m.def("ball_volume", &ball_volume, py::arg("d"));
    m.def("sphere_area", &sphere_area, py::arg("d"));
    m.def(
        "sharp_constant",
        [](const std::string& kind, long n, long i) {
            if (kind == "centroid_section_volume")
                return sharp_constant(SharpConstantKind::centroid_section_volume, n, i);
            if (kind == "centroid_section_intrinsic")
                return sharp_constant(SharpConstantKind::centroid_section_intrinsic, n, i);
            if (kind == "centroid_section_dual")
                return sharp_constant(SharpConstantKind::centroid_section_dual, n, i);
            if (kind == "halfspace_dual")
                return sharp_constant(SharpConstantKind::halfspace_dual, n, i);
            if (kind == "halfspace_volume")
                return sharp_constant(SharpConstantKind::halfspace_volume, n, i);
            if (kind == "halfspace_ratio")
                return sharp_constant(SharpConstantKind::halfspace_ratio, n, i);
            throw py::value_error("unknown sharp constant kind: " + kind);
        },
        py::arg("kind"), py::arg("n"), py::arg("i"));
    m.def("beta_moment", &beta_moment, py::arg("n"), py::arg("i"));
    m.def(
        "integrate",
        [](const std::function<double(double)>& f, double a, double b, double tol) {
            QuadratureOptions opts;
            opts.abs_tol = tol;
            return integrate(f, a, b, opts);
        },
        py::arg("f"), py::arg("a"), py::arg("b"), py::arg("tol") = 1e-10);

    py::class_<Polytope>(m, "Polytope")
        .def_property_readonly("ambient_dim", &Polytope::ambient_dim)
        .def_property_readonly("vertices", &Polytope::vertices)
        .def("contains", &Polytope::contains, py::arg("x"), py::arg("tol") = kGeomTol)
        .def("translated", &Polytope::translated)
        .def("scaled", &Polytope::scaled);

    m.def("hull", &hull, py::arg("points"));
    m.def("volume", &volume, py::arg("p"));
    m.def("centroid", &centroid, py::arg("p"));
    m.def(
        "section",
        [](const Polytope& p, const Subspace& e) -> py::object {
            const auto s = section(p, e);
            return s ? py::cast(*s) : py::none();
        },
        py::arg("p"), py::arg("e"));
    m.def(
        "section_translated",
        [](const Polytope& p, const Subspace& e, const Vec& x) -> py::object {
            const auto s = section_translated(p, e, x);
            return s ? py::cast(*s) : py::none();
        },
        py::arg("p"), py::arg("e"), py::arg("x"));
    m.def("project", &project, py::arg("p"), py::arg("e"));
    m.def(
        "halfspace_cut",
        [](const Polytope& p, const Vec& xi, bool plus) -> py::object {
            const auto s = halfspace_cut(
                p, HalfSpace{xi, plus ? HalfSpace::Side::plus : HalfSpace::Side::minus});
            return s ? py::cast(*s) : py::none();
        },
        py::arg("p"), py::arg("xi"), py::arg("plus") = true);
    m.def("radial", [](const Polytope& p, const Vec& u) { return radial(p, u); },
          py::arg("p"), py::arg("u"));
    m.def("random_centered_polytope", &random_centered_polytope, py::arg("n"),
          py::arg("m"), py::arg("seed"));

    py::class_<ProductConeBody>(m, "ProductConeBody")
        .def(py::init<int, int, int, double, double, double, double, Vec, Mat, Mat>(),
             py::arg("n"), py::arg("p"), py::arg("q"), py::arg("r0"), py::arg("r1"),
             py::arg("c0"), py::arg("c1"), py::arg("axis"), py::arg("frame_p"),
             py::arg("frame_q"))
        .def_property_readonly("ambient_dim", &ProductConeBody::ambient_dim)
        .def_property_readonly("p", &ProductConeBody::p)
        .def_property_readonly("q", &ProductConeBody::q)
        .def_property_readonly("r0", &ProductConeBody::r0)
        .def_property_readonly("r1", &ProductConeBody::r1)
        .def_property_readonly("c0", &ProductConeBody::c0)
        .def_property_readonly("c1", &ProductConeBody::c1)
        .def_property_readonly("axis", &ProductConeBody::axis)
        .def("slice_radii", &ProductConeBody::slice_radii, py::arg("t"))
        .def("member", &ProductConeBody::member, py::arg("x"), py::arg("tol") = kGeomTol)
        .def("radial", &ProductConeBody::radial, py::arg("u"));

    m.def("pc_volume", &pc_volume);
    m.def("pc_centroid", &pc_centroid);
    m.def("make_equality_body", &make_equality_body, py::arg("n"), py::arg("i"),
          py::arg("a"), py::arg("r0"), py::arg("r1"), py::arg("f"), py::arg("xi"));
    m.def(
        "make_sharpness_family",
        [](const std::string& theorem, int n, int i, double epsilon, const Subspace& f,
           const Vec& xi) {
            SharpnessTheorem t;
            if (theorem == "thm1") {
                t = SharpnessTheorem::thm1;
            } else if (theorem == "thm2") {
                t = SharpnessTheorem::thm2;
            } else if (theorem == "thm3") {
                t = SharpnessTheorem::thm3;
            } else {
                throw py::value_error("theorem must be thm1, thm2 or thm3");
            }
            return make_sharpness_family(t, n, i, epsilon, f, xi);
        },
        py::arg("theorem"), py::arg("n"), py::arg("i"), py::arg("epsilon"), py::arg("f"),
        py::arg("xi"));
    m.def("dual_volume_ball_product", &dual_volume_ball_product, py::arg("k"),
          py::arg("i"), py::arg("a"), py::arg("b"), py::arg("tol") = 1e-9);

    py::class_<Estimate>(m, "Estimate")
        .def_readonly("value", &Estimate::value)
        .def_readonly("stderr", &Estimate::stderr_)
        .def_readonly("samples", &Estimate::samples)
        .def_readonly("method", &Estimate::method);

    m.def(
        "intrinsic_volume",
        [](const Polytope& body, int i, const std::string& method, long samples,
           const Seed& seed) {
            const IntrinsicMethod m2 = (method == "exact_2d") ? IntrinsicMethod::exact_2d
                                                              : IntrinsicMethod::kubota_mc;
            return intrinsic_volume(body, i, m2, samples, seed);
        },
        py::arg("body"), py::arg("i"), py::arg("method") = "kubota_mc",
        py::arg("samples") = 10000, py::arg("seed") = Seed{1, 0});
    m.def(
        "dual_volume",
        [](const py::object& body, int i, const std::string& method, long samples,
           const Seed& seed) {
            return dual_volume(*star_from_object(body), i, dual_method_from_name(method),
                               samples, seed);
        },
        py::arg("body"), py::arg("i"), py::arg("method") = "sphere_mc",
        py::arg("samples") = 10000, py::arg("seed") = Seed{1, 0});
    m.def(
        "dual_volume_halfspace",
        [](const py::object& body, int i, const Vec& xi, const std::string& method,
           long samples, const Seed& seed) {
            return dual_volume_halfspace(*star_from_object(body), i, xi,
                                         dual_method_from_name(method), samples, seed);
        },
        py::arg("body"), py::arg("i"), py::arg("xi"), py::arg("method") = "sphere_mc",
        py::arg("samples") = 10000, py::arg("seed") = Seed{1, 0});

    py::class_<CheckConfig>(m, "CheckConfig")
        .def(py::init<>())
        .def_readwrite("seed", &CheckConfig::seed)
        .def_readwrite("samples", &CheckConfig::samples)
        .def_readwrite("search_samples", &CheckConfig::search_samples)
        .def_readwrite("starts", &CheckConfig::starts)
        .def_readwrite("step_tol_rel", &CheckConfig::step_tol_rel);

    m.def(
        "check_centroid_section",
        [](const py::object& body, const Subspace& e, int i, const std::string& measure,
           const CheckConfig& cfg) {
            return report_to_dict(check_centroid_section(body_from_object(body), e, i,
                                                         measure_from_name_py(measure), cfg));
        },
        py::arg("body"), py::arg("e"), py::arg("i"), py::arg("measure"),
        py::arg("cfg") = CheckConfig{});
    m.def(
        "check_halfspace",
        [](const py::object& body, const Subspace& e, int i, const std::string& mode,
           const std::string& measure, const Vec& xi, const CheckConfig& cfg) {
            return report_to_dict(check_halfspace(
                body_from_object(body), e, i,
                mode == "projection" ? HalfspaceMode::projection : HalfspaceMode::section,
                measure_from_name_py(measure), xi, cfg));
        },
        py::arg("body"), py::arg("e"), py::arg("i"), py::arg("mode"), py::arg("measure"),
        py::arg("xi"), py::arg("cfg") = CheckConfig{});
    m.def(
        "check_prop",
        [](const py::object& body, const Subspace& e, const Subspace& f, const Vec& xi,
           const std::string& which, const CheckConfig& cfg) {
            return report_to_dict(check_prop(
                body_from_object(body), e, f, xi,
                which == "project_then_section" ? PropVariant::project_then_section
                                                : PropVariant::section_then_project,
                cfg));
        },
        py::arg("body"), py::arg("e"), py::arg("f"), py::arg("xi"),
        py::arg("which") = "section_then_project", py::arg("cfg") = CheckConfig{});
    m.def(
        "worst_direction",
        [](const py::object& body, const Subspace& e, int i, const std::string& mode,
           const std::string& measure, const CheckConfig& cfg) {
            auto res = worst_direction(
                body_from_object(body), e, i,
                mode == "projection" ? HalfspaceMode::projection : HalfspaceMode::section,
                measure_from_name_py(measure), cfg);
            return py::make_tuple(res.xi, report_to_dict(res.report));
        },
        py::arg("body"), py::arg("e"), py::arg("i"), py::arg("mode"), py::arg("measure"),
        py::arg("cfg") = CheckConfig{});
    m.def(
        "sharpness_sweep",
        [](const std::string& theorem, int n, int k, int i,
           const std::vector<double>& epsilons, const py::object& t,
           const CheckConfig& cfg) {
            SweepTheorem th;
            if (theorem == "thm1") {
                th = SweepTheorem::thm1;
            } else if (theorem == "thm2") {
                th = SweepTheorem::thm2;
            } else if (theorem == "thm3_section") {
                th = SweepTheorem::thm3_section;
            } else if (theorem == "thm3_projection") {
                th = SweepTheorem::thm3_projection;
            } else {
                throw py::value_error("unknown sweep theorem: " + theorem);
            }
            std::optional<double> tt;
            if (!t.is_none()) tt = t.cast<double>();
            py::list rows;
            for (const SweepRow& r : sharpness_sweep(th, n, k, i, epsilons, tt, cfg)) {
                py::dict d;
                d["epsilon"] = r.epsilon;
                d["t"] = r.t ? py::cast(*r.t) : py::none();
                d["ratio"] = r.ratio;
                d["expected_limit"] = r.expected_limit;
                d["abs_error"] = r.error;
                d["stderr"] = r.stderr_;
                rows.append(d);
            }
            return rows;
        },
        py::arg("theorem"), py::arg("n"), py::arg("k"), py::arg("i"), py::arg("epsilons"),
        py::arg("t") = py::none(), py::arg("cfg") = CheckConfig{});

    m.def(
        "run_config",
        [](const std::string& config_json) {
            const ExperimentConfig cfg =
                parse_config(nlohmann::json::parse(config_json));
            const RunResult res = run_experiment(cfg);
            return py::make_tuple(res.exit_code, res.report_text);
        },
        py::arg("config_json"),
        "Run an experiment from a JSON config string; returns (exit_code, report).");
}
