#pragma once

#include <cmath>
#include <cstdio>
#include <string>

namespace kgrip {

// Fixed shortest-ish formatting so identical runs produce identical bytes.
inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

// Half-up decimal rounding, the display convention used for eta tables.
inline double round_half_up(double x, int decimals) {
    double scale = std::pow(10.0, decimals);
    return std::floor(x * scale + 0.5) / scale;
}

} // namespace kgrip
