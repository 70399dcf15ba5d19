#pragma once

namespace mwe {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mwe
