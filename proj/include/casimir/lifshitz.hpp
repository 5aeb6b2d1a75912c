#pragma once

#include "casimir/materials.hpp"
#include "casimir/parallel.hpp"
#include "casimir/quadrature.hpp"

// Zero-temperature Casimir energy and force per unit area between two
// isotropic half-spaces separated by a uniaxial layer of thickness a.
//
// Sign convention: F = +dE/da, and F > 0 means ATTRACTION, F < 0 repulsion.
// This is opposite to the mechanics convention F = -dE/da. An energy that
// rises towards zero with a gives F > 0.
//
// Dispersive permittivity models are evaluated at every imaginary-frequency
// node, including the eps3x^{3/2} prefactor and the exponent. With constant
// models the results reduce to the static-permittivity formulas exactly.

namespace casimir::lifshitz {

struct EnergyResult {
  double value = 0.0;           // J / m^2
  double error_estimate = 0.0;  // J / m^2
  double separation = 0.0;      // m
  bool converged = true;
};

struct ForceResult {
  double value = 0.0;           // N / m^2, positive = attractive
  double error_estimate = 0.0;  // N / m^2
  double separation = 0.0;      // m
  bool converged = true;
};

EnergyResult casimir_energy(const MaterialSystem& system, double a, const quadrature::QuadratureSpec& spec = {},
                            Execution exec = Execution::Parallel);

ForceResult casimir_force(const MaterialSystem& system, double a, const quadrature::QuadratureSpec& spec = {},
                          Execution exec = Execution::Parallel);

/// Lifshitz's isotropic-gap force, coded from its own closed form and sharing
/// no kernel code with casimir_force. Used to cross-check the M3 = 1 case.
ForceResult casimir_force_isotropic(const PermittivityModel& eps1, const PermittivityModel& eps2,
                                    const PermittivityModel& eps3, double a,
                                    const quadrature::QuadratureSpec& spec = {},
                                    Execution exec = Execution::Parallel);

/// [E(a + h) - E(a - h)] / (2 h). Requires 0 < h < a / 10.
double force_from_energy_fd(const MaterialSystem& system, double a, double h,
                            const quadrature::QuadratureSpec& spec = {}, Execution exec = Execution::Parallel);

/// hbar c / (32 pi^2 a^4 sqrt(eps3x(0))): force per unit of the dimensionless bracket.
double force_scale(double eps3x_static, double a);

}  // namespace casimir::lifshitz
