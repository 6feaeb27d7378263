#include "grunbaum/experiment.hpp"
#include "grunbaum/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Numerical checker for centroid-section and half-space inequalities "
                 "of convex bodies"};
    app.set_version_flag("--version", grunbaum::kToolVersion);

    std::string config_path;
    app.add_option("--config", config_path, "experiment config (flat JSON object)")
        ->required();
    std::uint64_t seed_override = 0;
    const auto* seed_opt =
        app.add_option("--seed", seed_override, "override the config seed");
    std::string out_path;
    const auto* out_opt = app.add_option("--out", out_path, "report output path");
    std::string format;
    const auto* format_opt =
        app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));
    long samples_override = 0;
    const auto* samples_opt =
        app.add_option("--samples", samples_override, "global sample budget override");
    bool quiet = false;
    app.add_flag("--quiet", quiet, "suppress the one-line summary");

    CLI11_PARSE(app, argc, argv);

    try {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "error: cannot read config file: " << config_path << "\n";
            return 2;
        }
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            std::cerr << "error: config is not valid JSON: " << e.what() << "\n";
            return 2;
        }

        grunbaum::ExperimentConfig cfg = grunbaum::parse_config(j);
        if (seed_opt->count() > 0) cfg.seed = seed_override;
        if (out_opt->count() > 0) cfg.out = out_path;
        if (format_opt->count() > 0) cfg.format = format;
        if (samples_opt->count() > 0) cfg.samples = samples_override;
        if (quiet) cfg.quiet = true;

        const grunbaum::RunResult result = grunbaum::run_experiment(cfg);

        if (cfg.out) {
            std::ofstream out(*cfg.out, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write report to " << *cfg.out << "\n";
                return 2;
            }
            out << result.report_text;
        } else {
            std::cout << result.report_text;
        }
        if (!cfg.quiet && !result.summary_line.empty()) {
            std::cerr << result.summary_line << "\n";
        }
        return result.exit_code;
    } catch (const grunbaum::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
