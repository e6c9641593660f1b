#pragma once

namespace tripod {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kVersionTag = "tripod-eit 0.1.0";

}  // namespace tripod
