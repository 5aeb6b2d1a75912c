#include "casimir/verification.hpp"

#include <algorithm>
#include <limits>
#include <cmath>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/mode_oracle.hpp"
#include "casimir/retarded_limit.hpp"

namespace casimir::verification {

using quadrature::QuadratureSpec;

double relative_difference(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

namespace {

SuiteResult finish(SuiteResult r, bool below) {
  r.passed = below ? r.worst <= r.threshold : r.worst > r.threshold;
  std::ostringstream os;
  os.precision(3);
  os << r.cases << " cases, worst " << std::scientific << r.worst << (below ? " <= " : " > ") << r.threshold;
  r.detail = os.str();
  return r;
}

}  // namespace

SuiteResult isotropic_reduction(const QuadratureSpec& spec) {
  SuiteResult r;
  r.name = "isotropic-reduction";
  r.threshold = 1e-10;
  const double eps[] = {1.2, 3.0, 5.0};
  for (double e1 : eps)
    for (double e2 : eps)
      for (double a : {1e-7, 1e-6}) {
        const double e3 = 2.0;
        const auto full = lifshitz::casimir_force(MaterialSystem::constant(e1, e2, e3, e3), a, spec);
        const auto iso = lifshitz::casimir_force_isotropic(PermittivityModel::constant(e1), PermittivityModel::constant(e2),
                                                           PermittivityModel::constant(e3), a, spec);
        r.worst = std::max(r.worst, relative_difference(full.value, iso.value));
        ++r.cases;
      }
  return finish(r, true);
}

SuiteResult separation_scaling(const QuadratureSpec& spec) {
  SuiteResult r;
  r.name = "separation-scaling";
  r.threshold = 1e-8;
  for (const auto& sys : {MaterialSystem::constant(3.0, 1.6, 2.0, 2.0), MaterialSystem::constant(3.0, 2.2, 2.0, 4.0)}) {
    std::vector<double> scaled;
    for (double a : {0.5e-6, 1e-6, 2e-6, 4e-6}) {
      const double f = lifshitz::casimir_force(sys, a, spec).value;
      scaled.push_back(f * std::pow(a, 4));
    }
    const auto [lo, hi] = std::minmax_element(scaled.begin(), scaled.end());
    r.worst = std::max(r.worst, relative_difference(*lo, *hi));
    ++r.cases;
  }
  return finish(r, true);
}

SuiteResult finite_difference(const QuadratureSpec& spec) {
  SuiteResult r;
  r.name = "finite-difference";
  r.threshold = 1e-4;
  std::vector<MaterialSystem> systems = {MaterialSystem::constant(3.0, 1.6, 2.0, 2.0),
                                         MaterialSystem::constant(2.0, 2.0, 1.5, 3.0)};
  MaterialSystem dispersive;
  dispersive.eps1 = PermittivityModel::oscillator({{2.0, 1e16}});
  dispersive.eps2 = PermittivityModel::oscillator({{1.0, 2e16}});
  dispersive.eps3x = PermittivityModel::oscillator({{0.5, 5e15}});
  dispersive.eps3z = PermittivityModel::oscillator({{1.5, 5e15}});
  systems.push_back(dispersive);
  for (const auto& sys : systems) {
    const double a = 1e-7;
    const double fd = lifshitz::force_from_energy_fd(sys, a, a / 1000.0, spec);
    const double f = lifshitz::casimir_force(sys, a, spec).value;
    r.worst = std::max(r.worst, relative_difference(fd, f));
    ++r.cases;
  }
  return finish(r, true);
}

namespace {

struct FactorizationCase {
  MaterialSystem system;
  double p;
};

std::vector<FactorizationCase> factorization_cases() {
  return {{MaterialSystem::constant(3.0, 3.0, 2.0, 2.0), 1.3},
          {MaterialSystem::constant(3.0, 1.6, 2.0, 5.0), 1.1},
          {MaterialSystem::constant(1.2, 4.0, 2.0, 0.5), 2.0},
          {MaterialSystem::constant(6.0, 1.5, 2.5, 1.0), 1.6}};
}

double residual_for(const FactorizationCase& fc, modes::RateChoice rates) {
  const double eps3x = fc.system.eps3x.static_value();
  const double alpha_sq = modes::alpha_sq_from_p(fc.p, eps3x);
  // Place the middle separation at 2 p a xi sqrt(eps3x) / c = 1.
  const double a_mid = 1e-6;
  const double xi = PhysicalConstants::c / (2.0 * fc.p * a_mid * std::sqrt(eps3x));
  const double seps[] = {0.5 * a_mid, a_mid, 2.0 * a_mid};
  return modes::factorization_residual(fc.system, alpha_sq, xi, seps, rates);
}

}  // namespace

SuiteResult factorization() {
  SuiteResult r;
  r.name = "mode-factorization";
  r.threshold = 1e-8;
  for (const auto& fc : factorization_cases()) {
    r.worst = std::max(r.worst, residual_for(fc, modes::RateChoice::Physical));
    ++r.cases;
  }
  return finish(r, true);
}

SuiteResult factorization_negative_control() {
  SuiteResult r;
  r.name = "mode-factorization-negative-control";
  r.threshold = 1e-3;
  r.worst = std::numeric_limits<double>::infinity();
  for (const auto& fc : factorization_cases()) {
    if (fc.system.eps3x == fc.system.eps3z) continue;  // rates coincide when isotropic
    r.worst = std::min(r.worst, residual_for(fc, modes::RateChoice::TmForBoth));
    ++r.cases;
  }
  return finish(r, false);
}

SuiteResult correctness_triangle(const QuadratureSpec& spec) {
  SuiteResult r;
  r.name = "correctness-triangle";
  r.threshold = 1e-6;
  const double tuples[][3] = {{1.5, 0.8, 1.0}, {1.5, 1.1, 2.0}, {0.7, 2.0, 0.4}};
  bool within_bound = true;
  for (const auto& t : tuples) {
    const double eps3x = 2.0;
    const auto sys = MaterialSystem::constant(t[0] * eps3x, t[1] * eps3x, eps3x, t[2] * eps3x);
    const double a = 1e-6;
    const double f = lifshitz::casimir_force(sys, a, spec).value;
    const double reduced = f / retarded::retarded_prefactor(eps3x, a);
    const auto exact = retarded::psi_exact_series(t[0], t[1], t[2], spec);
    const auto approx = retarded::psi(t[0], t[1], t[2], spec);
    r.worst = std::max(r.worst, relative_difference(reduced, exact.psi));
    within_bound = within_bound &&
                   std::abs(exact.psi - approx.psi) <= retarded::series_remainder_bound(t[0], t[1], t[2], spec);
    ++r.cases;
  }
  r = finish(r, true);
  if (!within_bound) {
    r.passed = false;
    r.detail += "; series remainder bound violated";
  }
  return r;
}

std::vector<SuiteResult> run_all(const QuadratureSpec& spec) {
  return {isotropic_reduction(spec), separation_scaling(spec),         finite_difference(spec),
          factorization(),           factorization_negative_control(), correctness_triangle(spec)};
}

}  // namespace casimir::verification
