#include "casimir/lifshitz.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/kernels.hpp"

namespace casimir::lifshitz {

namespace {

using quadrature::IntegralResult;
using quadrature::QuadratureSpec;

// Largest inner-integral error seen across outer nodes. Integrating an error
// bounded by this value over u in (0, 1) contributes at most the value itself.
class InnerErrorTracker {
 public:
  void record(const IntegralResult& r) {
    double seen = max_error_.load();
    while (r.error_estimate > seen && !max_error_.compare_exchange_weak(seen, r.error_estimate)) {
    }
    if (!r.converged) converged_.store(false);
  }
  double max_error() const { return max_error_.load(); }
  bool converged() const { return converged_.load(); }

 private:
  std::atomic<double> max_error_{0.0};
  std::atomic<bool> converged_{true};
};

void check_separation(double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw std::domain_error("separation a must be > 0");
}

// Scaled imaginary frequency x = 2 a sqrt(eps3x(0)) xi / c.
struct ScaledAxis {
  double kappa;  // s; xi = x / kappa
  double eps0;

  ScaledAxis(const PermittivityModel& eps3x, double a)
      : kappa(2.0 * a * std::sqrt(eps3x.static_value()) / PhysicalConstants::c), eps0(eps3x.static_value()) {}

  double xi(double x) const { return x / kappa; }
};

// Dimensionless bracket of the force (kind == Force) or energy integral.
enum class Kind { Force, Energy };

IntegralResult anisotropic_bracket(const MaterialSystem& system, double a, const QuadratureSpec& spec,
                                   Execution exec, Kind kind) {
  spec.validate();
  require_valid(system);
  check_separation(a);

  const ScaledAxis axis(system.eps3x, a);
  const bool dispersive = !system.all_constant();
  const RatioSet static_ratios = ratios(system, 0.0);
  const QuadratureSpec inner = spec.tightened(10.0);
  InnerErrorTracker tracker;

  auto outer = [&](double u) {
    const double p = 1.0 / u;
    const kernels::PolarizedReflection static_refl = kernels::reflection_pair(static_ratios, p);
    const double static_P = kernels::kernel_params(static_ratios, p).P;

    // Per-node mode data: eta = eps3x(xi)/eps3x(0), reflection products, P(xi).
    struct Local {
      double eta;
      double te;
      double tm;
      double P;
    };
    auto local = [&](double x) -> Local {
      if (!dispersive) return {1.0, static_refl.te_product(), static_refl.tm_product(), static_P};
      const RatioSet r = ratios(system, axis.xi(x));
      const auto refl = kernels::reflection_pair(r, p);
      return {r.eps3x / axis.eps0, refl.te_product(), refl.tm_product(), kernels::kernel_params(r, p).P};
    };

    if (kind == Kind::Force) {
      // TE: (1/u^2) p * p * I_TE = p^4 I_TE.
      const double p4 = (p * p) * (p * p);
      auto te = [&](double x) {
        const Local l = local(x);
        const double q = l.te * std::exp(-p * x * std::sqrt(l.eta));
        return p4 * l.eta * std::sqrt(l.eta) * x * x * x * (q / (1.0 - q));
      };
      // TM: (1/u^2) p * I_TM with P inside the integrand = p^3 I_TM.
      const double p3 = p * p * p;
      auto tm = [&](double x) {
        const Local l = local(x);
        const double q = l.tm * std::exp(-l.P * x * std::sqrt(l.eta));
        return p3 * l.eta * std::sqrt(l.eta) * x * x * x * l.P * (q / (1.0 - q));
      };
      const auto rte = quadrature::integrate_xi(te, 1.0 / p, inner);
      const auto rtm = quadrature::integrate_xi(tm, 1.0 / static_P, inner);
      tracker.record(rte);
      tracker.record(rtm);
      return rte.value + rtm.value;
    }

    const double p3 = p * p * p;
    auto te = [&](double x) {
      const Local l = local(x);
      const double q = l.te * std::exp(-p * x * std::sqrt(l.eta));
      return p3 * l.eta * x * x * std::log1p(-q);
    };
    auto tm = [&](double x) {
      const Local l = local(x);
      const double q = l.tm * std::exp(-l.P * x * std::sqrt(l.eta));
      return p3 * l.eta * x * x * std::log1p(-q);
    };
    const auto rte = quadrature::integrate_xi(te, 1.0 / p, inner);
    const auto rtm = quadrature::integrate_xi(tm, 1.0 / static_P, inner);
    tracker.record(rte);
    tracker.record(rtm);
    return rte.value + rtm.value;
  };

  IntegralResult result = quadrature::integrate_unit(outer, spec, exec);
  result.error_estimate += 2.0 * tracker.max_error();
  result.converged = result.converged && tracker.converged();
  return result;
}

}  // namespace

double force_scale(double eps3x_static, double a) {
  const double a2 = a * a;
  return PhysicalConstants::hbar * PhysicalConstants::c / (32.0 * kPi * kPi * a2 * a2 * std::sqrt(eps3x_static));
}

EnergyResult casimir_energy(const MaterialSystem& system, double a, const QuadratureSpec& spec, Execution exec) {
  const auto bracket = anisotropic_bracket(system, a, spec, exec, Kind::Energy);
  // hbar c / (32 pi^2 a^3 sqrt(eps0)) = force_scale * a
  const double scale = force_scale(system.eps3x.static_value(), a) * a;
  return {scale * bracket.value, scale * bracket.error_estimate, a, bracket.converged};
}

ForceResult casimir_force(const MaterialSystem& system, double a, const QuadratureSpec& spec, Execution exec) {
  const auto bracket = anisotropic_bracket(system, a, spec, exec, Kind::Force);
  const double scale = force_scale(system.eps3x.static_value(), a);
  return {scale * bracket.value, scale * bracket.error_estimate, a, bracket.converged};
}

ForceResult casimir_force_isotropic(const PermittivityModel& eps1, const PermittivityModel& eps2,
                                    const PermittivityModel& eps3, double a, const QuadratureSpec& spec,
                                    Execution exec) {
  spec.validate();
  check_separation(a);
  for (const auto* m : {&eps1, &eps2, &eps3}) {
    if (auto problems = m->problems(); !problems.empty())
      throw std::invalid_argument("invalid permittivity model: " + problems.front());
  }

  const double eps30 = eps3.static_value();
  const double kappa = 2.0 * a * std::sqrt(eps30) / PhysicalConstants::c;
  const QuadratureSpec inner = spec.tightened(10.0);
  InnerErrorTracker tracker;

  // F = hbar/(2 pi^2 c^3) Int p^2 dp Int eps3^{3/2} xi^3 { [D_perp e^X - 1]^-1 + [D_par e^X - 1]^-1 } dxi,
  // D_perp = (s1+p)(s2+p) / ((s1-p)(s2-p)), D_par = (s1+M1 p)(s2+M2 p) / ((s1-M1 p)(s2-M2 p)), X = 2 p a xi sqrt(eps3)/c.
  auto outer = [&](double u) {
    const double p = 1.0 / u;
    const double pp = p * p;
    auto inner_integrand = [&](double x) {
      const double xi = x / kappa;
      const double e1 = permittivity_at(eps1, xi);
      const double e2 = permittivity_at(eps2, xi);
      const double e3 = permittivity_at(eps3, xi);
      const double n1 = e1 / e3;
      const double n2 = e2 / e3;
      const double s1 = std::sqrt(n1 - 1.0 + pp);
      const double s2 = std::sqrt(n2 - 1.0 + pp);
      // s - p and s - n p from their squared differences.
      const double s1_minus = (n1 - 1.0) / (s1 + p);
      const double s2_minus = (n2 - 1.0) / (s2 + p);
      const double s1m_minus = (n1 - 1.0 + pp * (1.0 - n1 * n1)) / (s1 + n1 * p);
      const double s2m_minus = (n2 - 1.0 + pp * (1.0 - n2 * n2)) / (s2 + n2 * p);
      const double d_perp = (s1 + p) * (s2 + p) / (s1_minus * s2_minus);
      const double d_par = (s1 + n1 * p) * (s2 + n2 * p) / (s1m_minus * s2m_minus);
      const double eta = e3 / eps30;
      const double growth = std::exp(p * x * std::sqrt(eta));
      const double bracket = 1.0 / (d_perp * growth - 1.0) + 1.0 / (d_par * growth - 1.0);
      // (1/u^4) * x^3 * eta^{3/2}
      return (pp * pp) * eta * std::sqrt(eta) * x * x * x * bracket;
    };
    const auto r = quadrature::integrate_xi(inner_integrand, 1.0 / p, inner);
    tracker.record(r);
    return r.value;
  };

  IntegralResult bracket = quadrature::integrate_unit(outer, spec, exec);
  const double scale = force_scale(eps30, a);
  return {scale * bracket.value, scale * (bracket.error_estimate + 2.0 * tracker.max_error()), a,
          bracket.converged && tracker.converged()};
}

double force_from_energy_fd(const MaterialSystem& system, double a, double h, const QuadratureSpec& spec,
                            Execution exec) {
  check_separation(a);
  if (!(h > 0.0 && h < a / 10.0)) throw std::domain_error("finite-difference step must satisfy 0 < h < a/10");
  const auto plus = casimir_energy(system, a + h, spec, exec);
  const auto minus = casimir_energy(system, a - h, spec, exec);
  return (plus.value - minus.value) / (2.0 * h);
}

}  // namespace casimir::lifshitz
