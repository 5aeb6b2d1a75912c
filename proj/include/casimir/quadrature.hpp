#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>

#include "casimir/parallel.hpp"

namespace casimir::quadrature {

struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_subdivisions = 60;

  /// Throws std::invalid_argument unless 0 < abs_tol, 0 < rel_tol < 1, max_subdivisions >= 10.
  void validate() const;

  /// Tolerances divided by `factor`; used for inner integrals of nested quadrature.
  QuadratureSpec tightened(double factor) const;
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
};

/// Thrown when the integrand returns NaN or infinity.
class NonFiniteIntegrand : public std::runtime_error {
 public:
  NonFiniteIntegrand(double abscissa, double value);
  double abscissa() const { return abscissa_; }

 private:
  double abscissa_;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (10/21) integration over [lo, hi]. The
/// rule never samples the endpoints, so integrable endpoint singularities are
/// allowed. Non-convergence is reported through `converged`, never thrown.
IntegralResult integrate_interval(const Integrand& f, double lo, double hi, const QuadratureSpec& spec,
                                  Execution exec = Execution::Serial);

/// Integral over (0, 1).
IntegralResult integrate_unit(const Integrand& f, const QuadratureSpec& spec,
                              Execution exec = Execution::Serial);

/// Integral of f(p) over [1, inf) via u = 1/p: integrate_unit of f(1/u) / u^2.
IntegralResult integrate_p(const Integrand& f, const QuadratureSpec& spec, Execution exec = Execution::Serial);

/// Integral of f(xi) over [0, inf) via t = xi / (xi + xi_scale). `xi_scale`
/// should sit near the knee of the integrand's exponential decay.
IntegralResult integrate_xi(const Integrand& f, double xi_scale, const QuadratureSpec& spec,
                            Execution exec = Execution::Serial);

}  // namespace casimir::quadrature
