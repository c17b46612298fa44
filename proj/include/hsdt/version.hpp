#pragma once

#include <string_view>

namespace hsdt {

inline constexpr std::string_view kToolName = "hsdt";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace hsdt
