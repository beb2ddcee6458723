#pragma once

namespace gapspec {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace gapspec
