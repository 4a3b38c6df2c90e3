#pragma once

namespace kgsaf {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace kgsaf
