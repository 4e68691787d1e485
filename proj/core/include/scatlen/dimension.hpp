#pragma once

#include <numbers>
#include <stdexcept>
#include <string>

namespace scatlen {

/// Spatial dimension of the relative-motion problem.
enum class Dimension : int { one = 1, two = 2, three = 3 };

inline constexpr double kEulerGamma = std::numbers::egamma;
inline constexpr double kSqrtPi = 1.7724538509055160273;

inline int to_int(Dimension d) { return static_cast<int>(d); }

inline Dimension dimension_from_int(int n) {
  switch (n) {
    case 1: return Dimension::one;
    case 2: return Dimension::two;
    case 3: return Dimension::three;
    default:
      throw std::invalid_argument("dimension must be 1, 2 or 3, got " + std::to_string(n));
  }
}

}  // namespace scatlen
