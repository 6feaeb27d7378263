#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace grunbaum {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Single geometric tolerance for tightness/feasibility predicates.
// Inputs are assumed pre-scaled to circumradius <= 10.
inline constexpr double kGeomTol = 1e-9;

// Orthonormality tolerance for subspace frames.
inline constexpr double kOrthoTol = 1e-10;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw Error(msg);
}

}  // namespace grunbaum
