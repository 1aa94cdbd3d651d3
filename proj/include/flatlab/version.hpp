#pragma once

namespace flatlab {

inline constexpr const char* kVersion = "0.1.0";

} // namespace flatlab
