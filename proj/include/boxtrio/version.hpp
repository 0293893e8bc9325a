#pragma once

namespace boxtrio {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace boxtrio
