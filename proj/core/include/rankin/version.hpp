#pragma once

namespace rankin {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rankin
