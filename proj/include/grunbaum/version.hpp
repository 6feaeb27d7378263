#pragma once

namespace grunbaum {
inline constexpr const char* kToolVersion = "0.1.0";
}
