#pragma once

namespace jsrlab {

inline constexpr const char* library_version = "0.1.0";

} // namespace jsrlab
