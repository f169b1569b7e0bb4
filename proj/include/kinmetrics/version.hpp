#pragma once

namespace kinmetrics {
inline constexpr const char* kVersion = "0.1.0";
}
