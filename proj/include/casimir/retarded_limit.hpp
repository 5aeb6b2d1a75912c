#pragma once

#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"
#include "casimir/quadrature.hpp"

// Large-separation (static permittivity) limit of the force:
//
//   F ~ 3 hbar c / (16 pi^2 a^4 sqrt(eps3x)) * Psi(M1, M2, M3),   Psi = Psi1 + Psi2,
//
// with Psi1 the TE part (independent of M3) and Psi2 the TM part. Positive Psi
// means attraction. The integrals run over u = 1/p in (0, 1), where
//   Psi1 = Int rTE1 rTE2 du,   Psi2 = Int (p/P)^3 rTM1 rTM2 du.

namespace casimir::retarded {

struct PsiBreakdown {
  double psi = 0.0;
  double psi1 = 0.0;
  double psi2 = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

quadrature::IntegralResult psi1_integral(double m1, double m2, const quadrature::QuadratureSpec& spec = {});
quadrature::IntegralResult psi2_integral(double m1, double m2, double m3,
                                         const quadrature::QuadratureSpec& spec = {});

double psi1(double m1, double m2, const quadrature::QuadratureSpec& spec = {});
double psi2(double m1, double m2, double m3, const quadrature::QuadratureSpec& spec = {});

/// psi from the single combined integrand; psi1/psi2 from their own integrals.
/// error_estimate covers all three, so |psi - psi1 - psi2| <= error_estimate.
PsiBreakdown psi(double m1, double m2, double m3, const quadrature::QuadratureSpec& spec = {});

/// Exact retarded limit for constant permittivities: the frequency integral
/// is done in closed form, replacing each reflection product r by
/// Li_4(r) = sum_k r^k / k^4 before the p-integration. Not an approximation;
/// used to check both psi and the full force.
PsiBreakdown psi_exact_series(double m1, double m2, double m3, const quadrature::QuadratureSpec& spec = {});

/// Upper bound on |psi_exact_series - psi| from |Li_4(r) - r| <= r^2 / (16 (1 - |r|)),
/// integrated pointwise in p (plus both quadrature error estimates).
double series_remainder_bound(double m1, double m2, double m3, const quadrature::QuadratureSpec& spec = {});

/// 3 hbar c / (16 pi^2 a^4 sqrt(eps3x)): force per unit Psi.
double retarded_prefactor(double eps3x, double a);

/// Requires all-constant permittivities; throws std::invalid_argument otherwise.
lifshitz::ForceResult force_retarded(const MaterialSystem& system, double a,
                                     const quadrature::QuadratureSpec& spec = {});

enum class BoseMode { Approx, Exact };

/// Approx: n!/m. Exact: int_0^inf x^n / (m e^x - 1) dx = n! sum_k m^{-k} k^{-(n+1)}.
/// n in 1..6; exact mode needs m >= 1, approx mode m > 0.
double bose_integral(double m, int n, BoseMode mode);

}  // namespace casimir::retarded
