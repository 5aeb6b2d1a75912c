#pragma once

#include "casimir/materials.hpp"

// Per-mode quantities on the imaginary frequency axis. All real arithmetic.
//
// p >= 1 parametrises the in-plane wave vector through p^2 = 1 - alpha^2 / eps3x.
// s_i = sqrt(M_i - 1 + p^2) and P = sqrt((M3 - 1 + p^2) / M3).

namespace casimir::kernels {

struct ModePoint {
  double p;   // dimensionless, >= 1
  double xi;  // rad/s, >= 0
  double a;   // m, > 0
};

struct KernelParams {
  double s1;
  double s2;
  double P;
};

/// TE ("perpendicular") and TM ("parallel") single-interface factors.
struct PolarizedReflection {
  double te1;
  double te2;
  double tm1;
  double tm2;

  double te_product() const { return te1 * te2; }
  double tm_product() const { return tm1 * tm2; }
};

/// Throws std::domain_error for p < 1 or nonpositive ratios.
KernelParams kernel_params(const RatioSet& r, double p);

/// Differences s_i - p and s_i - M_i P are formed from s^2 differences so that
/// the O(p^-2) TE factors keep full relative precision at large p.
PolarizedReflection reflection_pair(const RatioSet& r, double p);

/// 1 - rTE1 rTE2 exp(-2 p a xi sqrt(eps3x) / c)
double g1(const ModePoint& mode, const RatioSet& r);
/// 1 - rTM1 rTM2 exp(-2 P a xi sqrt(eps3x) / c)
double g2(const ModePoint& mode, const RatioSet& r);

}  // namespace casimir::kernels
