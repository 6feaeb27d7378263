#pragma once

#include "grunbaum/report.hpp"

#include <json.hpp>

#include <optional>
#include <vector>

namespace grunbaum {

nlohmann::json to_json(const Estimate& e);
nlohmann::json to_json(const SearchTrace& t);
nlohmann::json to_json(const InequalityReport& r);
nlohmann::json to_json(const SweepRow& r);

struct SuiteSummary {
    long total = 0;
    long passed = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
};

std::string render_reports_json(std::uint64_t seed,
                                const std::vector<InequalityReport>& reports,
                                const std::optional<SuiteSummary>& summary);
std::string render_sweep_json(std::uint64_t seed, const std::vector<SweepRow>& rows);
std::string render_sweep_csv(const std::vector<SweepRow>& rows);
std::string render_estimates_json(std::uint64_t seed,
                                  const std::vector<Estimate>& estimates);

}  // namespace grunbaum
