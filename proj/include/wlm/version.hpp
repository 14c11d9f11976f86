#pragma once

namespace wlm {

inline constexpr const char* version_string = "0.1.0";

}
