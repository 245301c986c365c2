#pragma once

#include <algorithm>
#include <cmath>

namespace superlum {

// Absolute tolerance near zero, relative tolerance elsewhere.
inline constexpr double kAbsTol = 1e-12;
inline constexpr double kRelTol = 1e-10;

inline bool near(double a, double b, double rel = kRelTol, double abs = kAbsTol) {
    const double diff = std::abs(a - b);
    return diff <= abs || diff <= rel * std::max(std::abs(a), std::abs(b));
}

inline double relative_deviation(double a, double b, double floor = 0.0) {
    const double scale = std::max({std::abs(a), std::abs(b), floor});
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace superlum
