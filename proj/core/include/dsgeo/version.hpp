#pragma once

namespace dsgeo {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dsgeo
