#pragma once

namespace zigzag {

inline constexpr const char* kVersion = "0.1.0";

} // namespace zigzag
