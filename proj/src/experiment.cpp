#include "grunbaum/experiment.hpp"

#include "grunbaum/version.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

namespace grunbaum {

using nlohmann::json;

namespace {

const std::set<std::string> kKnownKeys = {
    "command", "body_file", "generator", "gen_n", "gen_m", "n", "k", "i",
    "check", "measure", "mode", "which", "theorem", "quantity", "method",
    "subspace_e", "subspace_f", "xi", "epsilons", "t", "count", "checks",
    "measures", "xi_count", "seed", "samples", "search_samples", "out",
    "format", "quiet"};

template <typename T>
T get_as(const json& j, const std::string& key) {
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("config: field '" + key + "' has the wrong type");
    }
}

[[noreturn]] void missing(const std::string& key) {
    throw ConfigError("config: missing required field '" + key + "'");
}

}  // namespace

ExperimentConfig parse_config(const json& j) {
    if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");
    for (const auto& item : j.items()) {
        if (!kKnownKeys.count(item.key())) {
            throw ConfigError("config: unknown field '" + item.key() + "'");
        }
    }

    ExperimentConfig cfg;
    if (!j.contains("command")) missing("command");
    cfg.command = get_as<std::string>(j, "command");
    static const std::set<std::string> commands = {"estimate", "check", "sweep", "suite"};
    if (!commands.count(cfg.command)) {
        throw ConfigError("config: field 'command' must be estimate, check, sweep or suite");
    }

    if (j.contains("body_file")) cfg.body_file = get_as<std::string>(j, "body_file");
    if (j.contains("generator")) {
        cfg.generator = get_as<std::string>(j, "generator");
        if (*cfg.generator != "random_centered_polytope") {
            throw ConfigError("config: unknown generator in field 'generator'");
        }
    }
    if (j.contains("gen_n")) cfg.gen_n = get_as<int>(j, "gen_n");
    if (j.contains("gen_m")) cfg.gen_m = get_as<int>(j, "gen_m");
    if (j.contains("n")) cfg.n = get_as<int>(j, "n");
    if (j.contains("k")) cfg.k = get_as<int>(j, "k");
    if (j.contains("i")) cfg.i = get_as<int>(j, "i");
    if (j.contains("check")) cfg.check = get_as<std::string>(j, "check");
    if (j.contains("measure")) cfg.measure = get_as<std::string>(j, "measure");
    if (j.contains("mode")) cfg.mode = get_as<std::string>(j, "mode");
    if (j.contains("which")) cfg.which = get_as<std::string>(j, "which");
    if (j.contains("theorem")) cfg.theorem = get_as<std::string>(j, "theorem");
    if (j.contains("quantity")) cfg.quantity = get_as<std::string>(j, "quantity");
    if (j.contains("method")) cfg.method = get_as<std::string>(j, "method");
    if (j.contains("subspace_e")) cfg.subspace_e = j.at("subspace_e");
    if (j.contains("subspace_f")) cfg.subspace_f = j.at("subspace_f");
    if (j.contains("xi")) cfg.xi = j.at("xi");
    if (j.contains("epsilons")) cfg.epsilons = get_as<std::vector<double>>(j, "epsilons");
    if (j.contains("t")) cfg.t = get_as<double>(j, "t");
    if (j.contains("count")) cfg.count = get_as<int>(j, "count");
    if (j.contains("checks")) cfg.checks = get_as<std::vector<std::string>>(j, "checks");
    if (j.contains("measures")) cfg.measures = get_as<std::vector<std::string>>(j, "measures");
    if (j.contains("xi_count")) cfg.xi_count = get_as<int>(j, "xi_count");
    if (j.contains("seed")) cfg.seed = get_as<std::uint64_t>(j, "seed");
    if (j.contains("samples")) cfg.samples = get_as<long>(j, "samples");
    if (j.contains("search_samples")) cfg.search_samples = get_as<long>(j, "search_samples");
    if (j.contains("out")) cfg.out = get_as<std::string>(j, "out");
    if (j.contains("format")) cfg.format = get_as<std::string>(j, "format");
    if (j.contains("quiet")) cfg.quiet = get_as<bool>(j, "quiet");
    if (cfg.format != "json" && cfg.format != "csv") {
        throw ConfigError("config: field 'format' must be json or csv");
    }
    return cfg;
}

namespace {

Vec vec_from_json(const json& j, const std::string& key) {
    if (!j.is_array() || j.empty()) {
        throw ConfigError("config: field '" + key + "' must be a nonempty array");
    }
    Vec v(j.size());
    for (size_t idx = 0; idx < j.size(); ++idx) {
        if (!j[idx].is_number()) {
            throw ConfigError("config: field '" + key + "' must contain numbers");
        }
        v[static_cast<int>(idx)] = j[idx].get<double>();
    }
    return v;
}

Body load_body_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: field 'body_file' names an unreadable file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config: body_file is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_object() || !j.contains("type")) {
        throw ConfigError("config: body_file must hold an object with a 'type' field");
    }
    const std::string type = j.at("type").get<std::string>();
    try {
        if (type == "polytope") {
            const int n = j.at("ambient_dim").get<int>();
            std::vector<Vec> pts;
            for (const auto& row : j.at("vertices")) {
                Vec v = vec_from_json(row, "vertices");
                if (v.size() != n) {
                    throw ConfigError("config: body_file vertex row has wrong dimension");
                }
                pts.push_back(std::move(v));
            }
            return hull(pts);
        }
        if (type == "product_cone") {
            const int n = j.at("n").get<int>();
            const int p = j.at("p").get<int>();
            const int q = j.at("q").get<int>();
            Mat fp(n, p), fq(n, q);
            const auto fill = [&](Mat& m, const char* key) {
                const auto& rows = j.at(key);
                if (static_cast<int>(rows.size()) != m.cols()) {
                    throw ConfigError(std::string("config: body_file field '") + key +
                                      "' has the wrong number of rows");
                }
                for (int c = 0; c < m.cols(); ++c) {
                    const Vec v = vec_from_json(rows[c], key);
                    if (v.size() != n) {
                        throw ConfigError(std::string("config: body_file field '") + key +
                                          "' row has wrong dimension");
                    }
                    m.col(c) = v;
                }
            };
            fill(fp, "frame_p");
            fill(fq, "frame_q");
            return ProductConeBody(n, p, q, j.at("r0").get<double>(),
                                   j.at("r1").get<double>(), j.at("c0").get<double>(),
                                   j.at("c1").get<double>(),
                                   vec_from_json(j.at("axis"), "axis"), fp, fq);
        }
    } catch (const json::exception& e) {
        throw ConfigError("config: body_file is malformed: " + std::string(e.what()));
    } catch (const Error& e) {
        throw ConfigError("config: body_file body is invalid: " + std::string(e.what()));
    }
    throw ConfigError("config: body_file field 'type' must be polytope or product_cone");
}

struct Prepared {
    Body body;
    int n;
};

Prepared prepare_body(const ExperimentConfig& cfg, const Seed& seed) {
    if (cfg.body_file && cfg.generator) {
        throw ConfigError("config: give either 'body_file' or 'generator', not both");
    }
    if (cfg.body_file) {
        Body b = load_body_file(*cfg.body_file);
        const int n = body_ambient_dim(b);
        return {std::move(b), n};
    }
    if (cfg.generator) {
        if (cfg.gen_n < 1) throw ConfigError("config: field 'gen_n' must be >= 1");
        const int m = cfg.gen_m > 0 ? cfg.gen_m : cfg.gen_n + 4;
        try {
            Body b = random_centered_polytope(cfg.gen_n, m, seed);
            return {std::move(b), cfg.gen_n};
        } catch (const Error& e) {
            throw ConfigError(std::string("config: generator failed: ") + e.what());
        }
    }
    throw ConfigError("config: missing body source ('body_file' or 'generator')");
}

Subspace subspace_from_config(const json& spec, const std::string& key, int n, int k,
                              const Seed& seed) {
    if (spec.is_null()) missing(key);
    if (spec.is_string()) {
        if (spec.get<std::string>() != "random") {
            throw ConfigError("config: field '" + key + "' must be basis rows or \"random\"");
        }
        return random_subspace(n, k, seed);
    }
    if (!spec.is_array() || spec.empty()) {
        throw ConfigError("config: field '" + key + "' must be basis rows or \"random\"");
    }
    Mat cols(n, spec.size());
    for (size_t r = 0; r < spec.size(); ++r) {
        const Vec v = vec_from_json(spec[r], key);
        if (v.size() != n) {
            throw ConfigError("config: field '" + key + "' row dimension mismatch");
        }
        cols.col(static_cast<int>(r)) = v;
    }
    if (static_cast<int>(spec.size()) != k) {
        throw ConfigError("config: field '" + key + "' must have k rows");
    }
    try {
        return Subspace::from_spanning(n, cols);
    } catch (const Error& e) {
        throw ConfigError("config: field '" + key + "' is rank-deficient");
    }
}

Vec xi_from_config(const json& spec, int n, const Subspace& e, const Seed& seed) {
    if (spec.is_null()) missing("xi");
    if (spec.is_string()) {
        if (spec.get<std::string>() != "random") {
            throw ConfigError("config: field 'xi' must be a vector or \"random\"");
        }
        Rng rng(seed);
        return e.embed(rng.unit_vector(e.dim()));
    }
    Vec v = vec_from_json(spec, "xi");
    if (v.size() != n) throw ConfigError("config: field 'xi' dimension mismatch");
    const double norm = v.norm();
    if (norm < 1e-12) throw ConfigError("config: field 'xi' must be nonzero");
    return v / norm;
}

Measure measure_from_name(const std::string& name) {
    if (name == "volume") return Measure::volume;
    if (name == "intrinsic") return Measure::intrinsic;
    if (name == "dual") return Measure::dual;
    throw ConfigError("config: field 'measure' must be volume, intrinsic or dual");
}

HalfspaceMode mode_from_name(const std::string& name) {
    if (name == "section") return HalfspaceMode::section;
    if (name == "projection") return HalfspaceMode::projection;
    throw ConfigError("config: field 'mode' must be section or projection");
}

CheckConfig make_check_config(const ExperimentConfig& cfg, const Seed& seed) {
    CheckConfig out;
    out.seed = seed;
    out.samples = cfg.samples;
    out.search_samples = cfg.search_samples;
    return out;
}

Seed require_seed(const ExperimentConfig& cfg) {
    if (!cfg.seed) missing("seed");
    return Seed{*cfg.seed, 0};
}

// ---- command: estimate ----------------------------------------------------

RunResult run_estimate(const ExperimentConfig& cfg) {
    const Seed master = cfg.seed ? Seed{*cfg.seed, 0} : Seed{0, 0};
    const Prepared prep = prepare_body(cfg, substream(master, 900));
    if (!cfg.quantity) missing("quantity");
    std::vector<Estimate> ests;

    const std::string& q = *cfg.quantity;
    if (q == "volume") {
        if (const Polytope* p = std::get_if<Polytope>(&prep.body)) {
            ests.push_back({volume(*p), 0.0, 0, "exact_volume", std::nullopt});
        } else {
            ests.push_back({pc_volume(std::get<ProductConeBody>(prep.body)), 0.0, 0,
                            "closed_form", std::nullopt});
        }
    } else if (q == "centroid") {
        // Reported componentwise as separate estimates.
        Vec c;
        if (const Polytope* p = std::get_if<Polytope>(&prep.body)) {
            c = centroid(*p);
        } else {
            const auto& pc = std::get<ProductConeBody>(prep.body);
            c = pc_centroid(pc) * pc.axis();
        }
        for (int d = 0; d < c.size(); ++d) {
            ests.push_back({c[d], 0.0, 0, "exact_centroid", std::nullopt});
        }
    } else if (q == "intrinsic" || q == "dual") {
        if (!cfg.i) missing("i");
        if (!cfg.method) missing("method");
        const bool stochastic = *cfg.method != "exact_2d" && *cfg.method != "sphere_quadrature";
        const Seed seed = stochastic ? require_seed(cfg) : master;
        if (q == "intrinsic") {
            const Polytope* p = std::get_if<Polytope>(&prep.body);
            if (!p) throw ConfigError("config: intrinsic estimates need a polytope body");
            IntrinsicMethod m;
            if (*cfg.method == "kubota_mc") {
                m = IntrinsicMethod::kubota_mc;
            } else if (*cfg.method == "exact_2d") {
                m = IntrinsicMethod::exact_2d;
            } else {
                throw ConfigError("config: field 'method' must be kubota_mc or exact_2d");
            }
            ests.push_back(intrinsic_volume(*p, *cfg.i, m, cfg.samples, seed));
        } else {
            DualMethod m;
            if (*cfg.method == "sphere_mc") {
                m = DualMethod::sphere_mc;
            } else if (*cfg.method == "sphere_quadrature") {
                m = DualMethod::sphere_quadrature;
            } else if (*cfg.method == "kubota_mc") {
                m = DualMethod::kubota_mc;
            } else if (*cfg.method == "solid_mc") {
                m = DualMethod::solid_mc;
            } else {
                throw ConfigError(
                    "config: field 'method' must be sphere_mc, sphere_quadrature, "
                    "kubota_mc or solid_mc");
            }
            std::unique_ptr<StarBody> star;
            if (const Polytope* p = std::get_if<Polytope>(&prep.body)) {
                star = std::make_unique<PolytopeStar>(*p);
            } else {
                star = std::make_unique<ProductConeStar>(std::get<ProductConeBody>(prep.body));
            }
            try {
                ests.push_back(dual_volume(*star, *cfg.i, m, cfg.samples, seed));
            } catch (const Error& e) {
                throw ConfigError(std::string("config: ") + e.what());
            }
        }
    } else {
        throw ConfigError("config: field 'quantity' must be volume, centroid, intrinsic or dual");
    }

    RunResult res;
    res.exit_code = 0;
    res.report_text = render_estimates_json(master.value, ests);
    std::ostringstream line;
    line << "estimate " << q << ": " << ests.front().value;
    res.summary_line = line.str();
    return res;
}

// ---- command: check -------------------------------------------------------

RunResult run_check(const ExperimentConfig& cfg) {
    if (!cfg.check) missing("check");
    const Seed master = cfg.seed ? Seed{*cfg.seed, 0} : Seed{0, 0};
    const Prepared prep = prepare_body(cfg, substream(master, 900));
    const int n = prep.n;
    const CheckConfig check_cfg = make_check_config(cfg, master);

    std::vector<InequalityReport> reports;
    try {
        if (*cfg.check == "classic") {
            const Subspace e = Subspace::full(n);
            const Vec xi = xi_from_config(cfg.xi, n, e, substream(master, 901));
            reports.push_back(check_halfspace(prep.body, e, n, HalfspaceMode::section,
                                              Measure::volume, xi, check_cfg));
        } else if (*cfg.check == "centroid_section") {
            if (!cfg.k) missing("k");
            if (!cfg.measure) missing("measure");
            const Subspace e =
                subspace_from_config(cfg.subspace_e, "subspace_e", n, *cfg.k,
                                     substream(master, 902));
            const Measure m = measure_from_name(*cfg.measure);
            const int i = cfg.i ? *cfg.i : *cfg.k;
            reports.push_back(check_centroid_section(prep.body, e, i, m, check_cfg));
        } else if (*cfg.check == "halfspace" || *cfg.check == "worst_direction") {
            if (!cfg.k) missing("k");
            if (!cfg.measure) missing("measure");
            const Subspace e =
                subspace_from_config(cfg.subspace_e, "subspace_e", n, *cfg.k,
                                     substream(master, 902));
            const Measure m = measure_from_name(*cfg.measure);
            const HalfspaceMode mode =
                cfg.mode ? mode_from_name(*cfg.mode) : HalfspaceMode::section;
            const int i = cfg.i ? *cfg.i : *cfg.k;
            if (*cfg.check == "halfspace") {
                const Vec xi = xi_from_config(cfg.xi, n, e, substream(master, 901));
                reports.push_back(check_halfspace(prep.body, e, i, mode, m, xi, check_cfg));
            } else {
                reports.push_back(
                    worst_direction(prep.body, e, i, mode, m, check_cfg).report);
            }
        } else if (*cfg.check == "prop") {
            if (!cfg.k) missing("k");
            if (!cfg.i) missing("i");
            const Subspace e =
                subspace_from_config(cfg.subspace_e, "subspace_e", n, *cfg.k,
                                     substream(master, 902));
            const Seed f_seed = substream(master, 903);
            Subspace f = cfg.subspace_f.is_null()
                             ? random_subspace_within(e, *cfg.i, f_seed)
                             : subspace_from_config(cfg.subspace_f, "subspace_f", n,
                                                    *cfg.i, f_seed);
            const Vec xi = xi_from_config(cfg.xi, n, f, substream(master, 901));
            const PropVariant which =
                (!cfg.which || *cfg.which == "section_then_project")
                    ? PropVariant::section_then_project
                    : PropVariant::project_then_section;
            if (cfg.which && *cfg.which != "section_then_project" &&
                *cfg.which != "project_then_section") {
                throw ConfigError(
                    "config: field 'which' must be section_then_project or "
                    "project_then_section");
            }
            reports.push_back(check_prop(prep.body, e, f, xi, which, check_cfg));
        } else {
            throw ConfigError(
                "config: field 'check' must be classic, centroid_section, halfspace, "
                "worst_direction or prop");
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError(std::string("config: check failed: ") + e.what());
    }

    RunResult res;
    const bool all_pass =
        std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
    res.exit_code = all_pass ? 0 : 1;
    res.report_text = render_reports_json(master.value, reports, std::nullopt);
    std::ostringstream line;
    line << reports.front().theorem << ": ratio " << reports.front().ratio
         << (all_pass ? " [pass]" : " [FAIL]");
    res.summary_line = line.str();
    return res;
}

// ---- command: sweep -------------------------------------------------------

RunResult run_sweep(const ExperimentConfig& cfg) {
    if (!cfg.theorem) missing("theorem");
    if (!cfg.n) missing("n");
    if (!cfg.k) missing("k");
    if (!cfg.i) missing("i");
    if (cfg.epsilons.empty()) missing("epsilons");
    SweepTheorem theorem;
    if (*cfg.theorem == "thm1") {
        theorem = SweepTheorem::thm1;
    } else if (*cfg.theorem == "thm2") {
        theorem = SweepTheorem::thm2;
    } else if (*cfg.theorem == "thm3_section") {
        theorem = SweepTheorem::thm3_section;
    } else if (*cfg.theorem == "thm3_projection") {
        theorem = SweepTheorem::thm3_projection;
    } else {
        throw ConfigError(
            "config: field 'theorem' must be thm1, thm2, thm3_section or thm3_projection");
    }
    if (*cfg.i > *cfg.k) throw ConfigError("config: field 'i' must satisfy i <= k");
    if (*cfg.k >= *cfg.n) throw ConfigError("config: field 'k' must satisfy k < n");

    const Seed master = cfg.seed ? Seed{*cfg.seed, 0} : Seed{0, 0};
    const CheckConfig check_cfg = make_check_config(cfg, master);
    std::vector<SweepRow> rows;
    try {
        rows = sharpness_sweep(theorem, *cfg.n, *cfg.k, *cfg.i, cfg.epsilons, cfg.t,
                               check_cfg);
    } catch (const Error& e) {
        throw ConfigError(std::string("config: sweep failed: ") + e.what());
    }

    RunResult res;
    res.exit_code = 0;
    res.report_text = (cfg.format == "csv") ? render_sweep_csv(rows)
                                            : render_sweep_json(master.value, rows);
    std::ostringstream line;
    line << "sweep " << *cfg.theorem << ": final |ratio - limit| = " << rows.back().error;
    res.summary_line = line.str();
    return res;
}

// ---- command: suite -------------------------------------------------------

RunResult run_suite(const ExperimentConfig& cfg) {
    if (!cfg.generator) missing("generator");
    if (!cfg.n) missing("n");
    if (!cfg.k) missing("k");
    if (!cfg.i) missing("i");
    const Seed master{require_seed(cfg).value, 0};
    if (*cfg.k > *cfg.n || *cfg.i > *cfg.k) {
        throw ConfigError("config: need i <= k <= n");
    }
    const std::vector<std::string> checks =
        cfg.checks.empty() ? std::vector<std::string>{"centroid_section"} : cfg.checks;
    const std::vector<std::string> measures =
        cfg.measures.empty() ? std::vector<std::string>{"volume"} : cfg.measures;

    std::vector<InequalityReport> reports;
    SuiteSummary summary;
    for (int b = 0; b < cfg.count; ++b) {
        const Seed body_seed = substream(master, 1000 + static_cast<std::uint64_t>(b));
        const int m = cfg.gen_m > 0 ? cfg.gen_m : *cfg.n + 4;
        const Polytope poly = random_centered_polytope(*cfg.n, m, body_seed);
        const Body body = poly;
        const Subspace e = (*cfg.k == *cfg.n)
                               ? Subspace::full(*cfg.n)
                               : random_subspace(*cfg.n, *cfg.k, substream(body_seed, 2));
        CheckConfig check_cfg = make_check_config(cfg, substream(body_seed, 3));

        for (const std::string& name : checks) {
            if (name == "centroid_section") {
                for (const std::string& mname : measures) {
                    const Measure m2 = measure_from_name(mname);
                    const int i_eff = (m2 == Measure::volume) ? *cfg.k : *cfg.i;
                    reports.push_back(
                        check_centroid_section(body, e, i_eff, m2, check_cfg));
                }
            } else if (name == "halfspace") {
                Rng xi_rng(substream(body_seed, 4));
                for (int d = 0; d < cfg.xi_count; ++d) {
                    const Vec xi = e.embed(xi_rng.unit_vector(*cfg.k));
                    for (const std::string& mname : measures) {
                        const Measure m2 = measure_from_name(mname);
                        if (m2 == Measure::intrinsic) continue;  // not defined here
                        const int i_eff = (m2 == Measure::volume) ? *cfg.k : *cfg.i;
                        reports.push_back(check_halfspace(body, e, i_eff,
                                                          HalfspaceMode::section, m2, xi,
                                                          check_cfg));
                    }
                }
            } else if (name == "prop") {
                const Subspace f = random_subspace_within(e, *cfg.i, substream(body_seed, 5));
                Rng xi_rng(substream(body_seed, 6));
                const Vec xi = f.embed(xi_rng.unit_vector(*cfg.i));
                reports.push_back(check_prop(body, e, f, xi,
                                             PropVariant::section_then_project, check_cfg));
                reports.push_back(check_prop(body, e, f, xi,
                                             PropVariant::project_then_section, check_cfg));
            } else {
                throw ConfigError(
                    "config: field 'checks' entries must be centroid_section, halfspace "
                    "or prop");
            }
        }
    }

    for (const auto& r : reports) {
        ++summary.total;
        if (r.pass) ++summary.passed;
        summary.worst_margin = std::min(summary.worst_margin, r.margin);
    }

    RunResult res;
    res.exit_code = (summary.passed == summary.total) ? 0 : 1;
    res.report_text = render_reports_json(master.value, reports, summary);
    std::ostringstream line;
    line << "suite: " << summary.passed << "/" << summary.total
         << " pass, worst margin " << summary.worst_margin;
    res.summary_line = line.str();
    return res;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg) {
    if (cfg.command == "estimate") return run_estimate(cfg);
    if (cfg.command == "check") return run_check(cfg);
    if (cfg.command == "sweep") return run_sweep(cfg);
    if (cfg.command == "suite") return run_suite(cfg);
    throw ConfigError("config: unknown command");
}

}  // namespace grunbaum
