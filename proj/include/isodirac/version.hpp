#pragma once

namespace isodirac {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace isodirac
