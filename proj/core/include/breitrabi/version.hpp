#pragma once

namespace breitrabi {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace breitrabi
