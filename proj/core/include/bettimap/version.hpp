#pragma once

namespace bettimap {

inline constexpr const char* kVersion = "0.3.0";

}  // namespace bettimap
