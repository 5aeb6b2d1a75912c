#include "casimir/retarded_limit.hpp"

#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/kernels.hpp"
#include "casimir/polylog.hpp"

namespace casimir::retarded {

namespace {

using quadrature::IntegralResult;
using quadrature::QuadratureSpec;

RatioSet static_ratios(double m1, double m2, double m3) {
  if (!(m1 > 0.0 && m2 > 0.0 && m3 > 0.0)) throw std::domain_error("ratios M1, M2, M3 must be positive");
  return {m1, m2, m3, 1.0};
}

struct ModeTerms {
  double te;      // rTE1 rTE2
  double tm;      // rTM1 rTM2
  double weight;  // (p/P)^3
};

ModeTerms terms_at(const RatioSet& r, double u) {
  const double p = 1.0 / u;
  const auto refl = kernels::reflection_pair(r, p);
  const double ratio = p / kernels::kernel_params(r, p).P;
  return {refl.te_product(), refl.tm_product(), ratio * ratio * ratio};
}

}  // namespace

IntegralResult psi1_integral(double m1, double m2, const QuadratureSpec& spec) {
  // M3 does not enter the TE factors.
  const RatioSet r = static_ratios(m1, m2, 1.0);
  return quadrature::integrate_unit([&](double u) { return kernels::reflection_pair(r, 1.0 / u).te_product(); },
                                    spec);
}

IntegralResult psi2_integral(double m1, double m2, double m3, const QuadratureSpec& spec) {
  const RatioSet r = static_ratios(m1, m2, m3);
  return quadrature::integrate_unit(
      [&](double u) {
        const auto t = terms_at(r, u);
        return t.weight * t.tm;
      },
      spec);
}

double psi1(double m1, double m2, const QuadratureSpec& spec) { return psi1_integral(m1, m2, spec).value; }

double psi2(double m1, double m2, double m3, const QuadratureSpec& spec) {
  return psi2_integral(m1, m2, m3, spec).value;
}

PsiBreakdown psi(double m1, double m2, double m3, const QuadratureSpec& spec) {
  const RatioSet r = static_ratios(m1, m2, m3);
  const auto total = quadrature::integrate_unit(
      [&](double u) {
        const auto t = terms_at(r, u);
        return t.te + t.weight * t.tm;
      },
      spec);
  const auto part1 = psi1_integral(m1, m2, spec);
  const auto part2 = psi2_integral(m1, m2, m3, spec);
  return {total.value, part1.value, part2.value,
          total.error_estimate + part1.error_estimate + part2.error_estimate,
          total.converged && part1.converged && part2.converged};
}

PsiBreakdown psi_exact_series(double m1, double m2, double m3, const QuadratureSpec& spec) {
  const RatioSet r = static_ratios(m1, m2, m3);
  const auto part1 = quadrature::integrate_unit(
      [&](double u) { return polylog(4, kernels::reflection_pair(r, 1.0 / u).te_product()); }, spec);
  const auto part2 = quadrature::integrate_unit(
      [&](double u) {
        const auto t = terms_at(r, u);
        return t.weight * polylog(4, t.tm);
      },
      spec);
  return {part1.value + part2.value, part1.value, part2.value, part1.error_estimate + part2.error_estimate,
          part1.converged && part2.converged};
}

double series_remainder_bound(double m1, double m2, double m3, const QuadratureSpec& spec) {
  const RatioSet r = static_ratios(m1, m2, m3);
  auto tail = [](double x) {
    const double ax = std::abs(x);
    return ax * ax / (16.0 * (1.0 - ax));
  };
  const auto bound = quadrature::integrate_unit(
      [&](double u) {
        const auto t = terms_at(r, u);
        return tail(t.te) + t.weight * tail(t.tm);
      },
      spec);
  const auto exact = psi_exact_series(m1, m2, m3, spec);
  const auto approx = psi(m1, m2, m3, spec);
  return bound.value + bound.error_estimate + exact.error_estimate + approx.error_estimate;
}

double retarded_prefactor(double eps3x, double a) {
  const double a2 = a * a;
  return 3.0 * PhysicalConstants::hbar * PhysicalConstants::c / (16.0 * kPi * kPi * a2 * a2 * std::sqrt(eps3x));
}

lifshitz::ForceResult force_retarded(const MaterialSystem& system, double a, const QuadratureSpec& spec) {
  require_valid(system);
  if (!system.all_constant()) throw std::invalid_argument("retarded limit requires static permittivities");
  if (!(a > 0.0)) throw std::domain_error("separation a must be > 0");
  const RatioSet r = ratios(system, 0.0);
  const auto b = psi(r.m1, r.m2, r.m3, spec);
  const double scale = retarded_prefactor(r.eps3x, a);
  return {scale * b.psi, scale * b.error_estimate, a, b.converged};
}

double bose_integral(double m, int n, BoseMode mode) {
  if (n < 1 || n > 6) throw std::domain_error("bose_integral: n must be in 1..6");
  double factorial = 1.0;
  for (int k = 2; k <= n; ++k) factorial *= k;
  if (mode == BoseMode::Approx) {
    if (!(m > 0.0)) throw std::domain_error("bose_integral: m must be > 0");
    return factorial / m;
  }
  if (!(m >= 1.0)) throw std::domain_error("bose_integral: exact mode requires m >= 1");
  return factorial * polylog(n + 1, 1.0 / m);
}

}  // namespace casimir::retarded
