#pragma once

namespace physent {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace physent
