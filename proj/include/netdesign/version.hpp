#pragma once

namespace netdesign {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kPrngId = "mt19937_64";

}  // namespace netdesign
