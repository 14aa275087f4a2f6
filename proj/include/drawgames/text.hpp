#pragma once

#include <cstdio>
#include <string>

namespace drawgames {

/// %.17g: enough digits that parse(print(x)) == x for doubles, so text
/// round-trips are byte-stable.
inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline std::string fmt_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace drawgames
