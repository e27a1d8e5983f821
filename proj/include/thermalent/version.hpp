#pragma once

namespace thermalent {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace thermalent
