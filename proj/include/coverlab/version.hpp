#pragma once

namespace coverlab {

inline constexpr const char* kVersion = "coverlab-v0.1.0";

} // namespace coverlab
