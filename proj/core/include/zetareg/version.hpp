#pragma once

namespace zetareg {
inline constexpr const char* version = "0.1.0";
}
