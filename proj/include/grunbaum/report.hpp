#pragma once

#include "grunbaum/measures.hpp"
#include "grunbaum/search.hpp"

#include <optional>
#include <string>

namespace grunbaum {

/// One checked inequality instance. `ratio` is lhs / rhs_raw, `margin`
/// is ratio - constant, and `sigma` the combined standard error of the
/// ratio. Pass criterion: margin >= -3 sigma - 1e-9.
struct InequalityReport {
    std::string theorem;
    int n = 0;
    int k = 0;
    int i = 0;
    Estimate lhs;
    Estimate rhs_raw;
    double constant = 0.0;
    double ratio = 0.0;
    double margin = 0.0;
    double sigma = 0.0;
    bool pass = false;
    Seed seed;
    std::string generator = Seed::kGeneratorName;
    std::optional<SearchTrace> trace;
};

/// One row of a sharpness sweep.
struct SweepRow {
    double epsilon = 0.0;
    std::optional<double> t;
    double ratio = 0.0;
    double expected_limit = 0.0;
    double error = 0.0;
    double stderr_ = 0.0;
};

}  // namespace grunbaum
