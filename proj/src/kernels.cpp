#include "casimir/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"

namespace casimir::kernels {

namespace {

void check(const RatioSet& r, double p) {
  if (!(p >= 1.0)) throw std::domain_error("mode parameter p must be >= 1");
  if (!(r.m1 > 0.0 && r.m2 > 0.0 && r.m3 > 0.0 && r.eps3x > 0.0))
    throw std::domain_error("permittivity ratios must be positive");
}

void check(const ModePoint& m) {
  if (!(m.xi >= 0.0)) throw std::domain_error("imaginary frequency xi must be >= 0");
  if (!(m.a > 0.0)) throw std::domain_error("separation a must be > 0");
}

double polarization_p(double m3, double p) {
  // M3 == 1 must give P == p exactly.
  if (m3 == 1.0) return p;
  return std::sqrt((m3 - 1.0 + p * p) / m3);
}

// (s - p) / (s + p) with s^2 - p^2 = m - 1.
double te_factor(double m, double s, double p) { return (m - 1.0) / ((s + p) * (s + p)); }

// (s - m P) / (s + m P) with s^2 - m^2 P^2 = (m - 1) - m^2 (M3 - 1) / M3 + p^2 (1 - m^2 / M3).
double tm_factor(double m, double s, double P, double m3, double p) {
  const double diff = (m - 1.0) - m * m * (m3 - 1.0) / m3 + p * p * (1.0 - m * m / m3);
  const double sum = s + m * P;
  return diff / (sum * sum);
}

}  // namespace

KernelParams kernel_params(const RatioSet& r, double p) {
  check(r, p);
  return {std::sqrt(r.m1 - 1.0 + p * p), std::sqrt(r.m2 - 1.0 + p * p), polarization_p(r.m3, p)};
}

PolarizedReflection reflection_pair(const RatioSet& r, double p) {
  const auto k = kernel_params(r, p);
  return {te_factor(r.m1, k.s1, p), te_factor(r.m2, k.s2, p), tm_factor(r.m1, k.s1, k.P, r.m3, p),
          tm_factor(r.m2, k.s2, k.P, r.m3, p)};
}

double g1(const ModePoint& mode, const RatioSet& r) {
  check(mode);
  const auto refl = reflection_pair(r, mode.p);
  const double decay = 2.0 * mode.p * mode.a * mode.xi * std::sqrt(r.eps3x) / PhysicalConstants::c;
  return 1.0 - refl.te_product() * std::exp(-decay);
}

double g2(const ModePoint& mode, const RatioSet& r) {
  check(mode);
  const auto refl = reflection_pair(r, mode.p);
  const double P = polarization_p(r.m3, mode.p);
  const double decay = 2.0 * P * mode.a * mode.xi * std::sqrt(r.eps3x) / PhysicalConstants::c;
  return 1.0 - refl.tm_product() * std::exp(-decay);
}

}  // namespace casimir::kernels
