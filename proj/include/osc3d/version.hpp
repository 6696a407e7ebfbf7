#pragma once

namespace osc3d {

inline constexpr const char* kVersion = "0.3.1";

}  // namespace osc3d
