#include "grunbaum/report_io.hpp"

#include "grunbaum/version.hpp"

#include <cstdio>

namespace grunbaum {

using nlohmann::json;

json to_json(const Estimate& e) {
    json j;
    j["value"] = e.value;
    j["stderr"] = e.stderr_;
    j["samples"] = e.samples;
    j["method"] = e.method;
    if (e.seed) {
        j["seed"] = json{{"value", e.seed->value}, {"stream", e.seed->stream}};
    }
    return j;
}

json to_json(const SearchTrace& t) {
    json j;
    j["evals"] = t.evals;
    j["starts"] = t.starts;
    j["final_step"] = t.final_step;
    j["argbest"] = t.argbest;
    return j;
}

json to_json(const InequalityReport& r) {
    json j;
    j["theorem"] = r.theorem;
    j["n"] = r.n;
    j["k"] = r.k;
    j["i"] = r.i;
    j["lhs"] = to_json(r.lhs);
    j["rhs_raw"] = to_json(r.rhs_raw);
    j["constant"] = r.constant;
    j["ratio"] = r.ratio;
    j["margin"] = r.margin;
    j["sigma"] = r.sigma;
    j["pass"] = r.pass;
    j["seed"] = r.seed.value;
    j["generator"] = r.generator;
    if (r.trace) j["trace"] = to_json(*r.trace);
    return j;
}

json to_json(const SweepRow& r) {
    json j;
    j["epsilon"] = r.epsilon;
    if (r.t) {
        j["t"] = *r.t;
    } else {
        j["t"] = nullptr;
    }
    j["ratio"] = r.ratio;
    j["expected_limit"] = r.expected_limit;
    j["abs_error"] = r.error;
    j["stderr"] = r.stderr_;
    return j;
}

std::string render_reports_json(std::uint64_t seed,
                                const std::vector<InequalityReport>& reports,
                                const std::optional<SuiteSummary>& summary) {
    json j;
    j["tool_version"] = kToolVersion;
    j["seed"] = seed;
    j["reports"] = json::array();
    for (const auto& r : reports) j["reports"].push_back(to_json(r));
    if (summary) {
        j["summary"] = json{{"total", summary->total},
                            {"passed", summary->passed},
                            {"worst_margin", summary->worst_margin}};
    }
    return j.dump(2) + "\n";
}

std::string render_sweep_json(std::uint64_t seed, const std::vector<SweepRow>& rows) {
    json j;
    j["tool_version"] = kToolVersion;
    j["seed"] = seed;
    j["sweep"] = json::array();
    for (const auto& r : rows) j["sweep"].push_back(to_json(r));
    return j.dump(2) + "\n";
}

namespace {
std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}
}  // namespace

std::string render_sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "epsilon,t,ratio,expected_limit,abs_error,stderr\n";
    for (const auto& r : rows) {
        out += fmt_double(r.epsilon);
        out += ',';
        if (r.t) out += fmt_double(*r.t);
        out += ',';
        out += fmt_double(r.ratio);
        out += ',';
        out += fmt_double(r.expected_limit);
        out += ',';
        out += fmt_double(r.error);
        out += ',';
        out += fmt_double(r.stderr_);
        out += '\n';
    }
    return out;
}

std::string render_estimates_json(std::uint64_t seed,
                                  const std::vector<Estimate>& estimates) {
    json j;
    j["tool_version"] = kToolVersion;
    j["seed"] = seed;
    j["estimates"] = json::array();
    for (const auto& e : estimates) j["estimates"].push_back(to_json(e));
    return j.dump(2) + "\n";
}

}  // namespace grunbaum
