#pragma once

namespace symfund {

inline constexpr const char* version = "0.1.0";

}  // namespace symfund
