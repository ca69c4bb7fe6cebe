#pragma once

namespace catlattice {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace catlattice
