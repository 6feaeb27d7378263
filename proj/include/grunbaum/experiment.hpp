#pragma once

#include "grunbaum/inequalities.hpp"
#include "grunbaum/report_io.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace grunbaum {

/// Configuration problems exit with status 2 and a message naming the
/// offending field.
struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Flat-JSON experiment description; unknown keys are errors.
struct ExperimentConfig {
    std::string command;  // estimate | check | sweep | suite

    // Body source.
    std::optional<std::string> body_file;
    std::optional<std::string> generator;  // "random_centered_polytope"
    int gen_n = 0;
    int gen_m = 0;

    // Dimensions and selectors.
    std::optional<int> n, k, i;
    std::optional<std::string> check;    // centroid_section | halfspace | prop |
                                         // worst_direction | classic
    std::optional<std::string> measure;  // volume | intrinsic | dual
    std::optional<std::string> mode;     // section | projection
    std::optional<std::string> which;    // section_then_project | project_then_section
    std::optional<std::string> theorem;  // thm1 | thm2 | thm3_section | thm3_projection
    std::optional<std::string> quantity;  // estimate: volume | centroid | intrinsic | dual
    std::optional<std::string> method;    // estimator selector

    // Subspaces and directions: explicit rows, or "random".
    nlohmann::json subspace_e;  // array of rows | "random" | null
    nlohmann::json subspace_f;
    nlohmann::json xi;

    // Sweep parameters.
    std::vector<double> epsilons;
    std::optional<double> t;

    // Suite parameters.
    int count = 50;
    std::vector<std::string> checks;
    std::vector<std::string> measures;
    int xi_count = 8;

    // Budgets and output.
    std::optional<std::uint64_t> seed;
    long samples = 20000;
    long search_samples = 256;
    std::optional<std::string> out;
    std::string format = "json";
    bool quiet = false;
};

ExperimentConfig parse_config(const nlohmann::json& j);

struct RunResult {
    int exit_code = 0;
    std::string report_text;
    std::string summary_line;  // one-line human outcome (suppressed by --quiet)
};

/// Executes the configured experiment and renders the report. Exit code
/// 0 = all checks pass, 1 = at least one inequality check failed,
/// 2 is reserved for configuration/input errors (thrown as ConfigError).
RunResult run_experiment(const ExperimentConfig& cfg);

}  // namespace grunbaum
