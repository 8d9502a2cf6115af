#pragma once

namespace orbicurve {

inline constexpr const char* version = "0.1.0";
inline constexpr int json_schema_version = 1;

} // namespace orbicurve
