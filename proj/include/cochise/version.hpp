#pragma once

namespace cochise {

inline constexpr const char* kHarnessVersion = "0.1.0";

}  // namespace cochise
