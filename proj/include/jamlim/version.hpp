#pragma once

namespace jamlim {
inline constexpr const char* kVersion = "0.1.0";
}
