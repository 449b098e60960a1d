#pragma once

namespace ybx {

inline constexpr const char* kToolName = "ybx";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace ybx
