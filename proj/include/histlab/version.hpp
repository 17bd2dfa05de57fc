#pragma once

#include <string_view>

namespace histlab {

inline constexpr std::string_view kToolName = "histlab";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace histlab
