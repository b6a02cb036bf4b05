#pragma once

namespace fbmclt {

inline constexpr const char* kToolName = "fbmclt";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace fbmclt
