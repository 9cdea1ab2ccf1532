#pragma once

namespace netcolor {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace netcolor
