#pragma once

namespace touchard {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace touchard
