#pragma once

namespace dwsvm {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dwsvm
