#pragma once

#include <numbers>

namespace casimir {

/// CODATA values. Fixed; not configurable.
struct PhysicalConstants {
  static constexpr double hbar = 1.054571817e-34;  // J s
  static constexpr double c = 299792458.0;         // m / s
};

inline constexpr double kPi = std::numbers::pi;

}  // namespace casimir
