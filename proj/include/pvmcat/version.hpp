#pragma once

namespace pvmcat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pvmcat
