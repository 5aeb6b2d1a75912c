#include <cmath>
#include <random>
#include <stdexcept>

#include "casimir/lifshitz.hpp"
#include "doctest.h"
#include "oracle/frozen_values.hpp"

using namespace casimir;
using namespace casimir::lifshitz;

TEST_CASE("equal permittivities give zero energy and force") {
  const auto s = MaterialSystem::constant(2.5, 2.5, 2.5, 2.5);
  CHECK(casimir_energy(s, 1e-6).value == 0.0);
  CHECK(casimir_force(s, 1e-6).value == 0.0);
  CHECK(casimir_force_isotropic(PermittivityModel::constant(2.5), PermittivityModel::constant(2.5),
                                PermittivityModel::constant(2.5), 1e-6)
            .value == 0.0);
  CHECK(std::abs(force_from_energy_fd(s, 1e-6, 1e-9)) == 0.0);
}

TEST_CASE("reference system matches the grid oracle") {
  const auto s = MaterialSystem::constant(3.0, 1.6, 2.0, 2.0);
  const auto e = casimir_energy(s, 1e-6);
  const auto f = casimir_force(s, 1e-6);
  CHECK(e.converged);
  CHECK(f.converged);
  CHECK(e.value == doctest::Approx(frozen::kEnergy_3_16_2_2_1um).epsilon(1e-6));
  CHECK(f.value == doctest::Approx(frozen::kForce_3_16_2_2_1um).epsilon(1e-6));
  CHECK(f.value < 0.0);
  CHECK(f.separation == 1e-6);
  CHECK(f.error_estimate >= 0.0);

  const auto iso = casimir_force_isotropic(PermittivityModel::constant(3.0), PermittivityModel::constant(1.6),
                                           PermittivityModel::constant(2.0), 1e-6);
  CHECK(iso.value == doctest::Approx(f.value).epsilon(1e-10));
}

TEST_CASE("energy decays with separation") {
  const auto s = MaterialSystem::constant(4.0, 4.0, 2.0, 3.0);
  const double ref = casimir_energy(s, 1e-7).value;
  double prev = std::abs(ref);
  for (double a = 2e-7; a <= 1e-4; a *= 3.0) {
    const double now = std::abs(casimir_energy(s, a).value);
    CHECK(now < prev);
    prev = now;
  }
  CHECK(std::abs(casimir_energy(s, 1e-4).value) < 1e-9 * std::abs(ref));
}

TEST_CASE("isotropic closed form: identical plates attract, chained permittivities repel") {
  const auto c = [](double v) { return PermittivityModel::constant(v); };
  CHECK(casimir_force_isotropic(c(2.0), c(2.0), c(1.0), 1e-6).value > 0.0);
  CHECK(casimir_force_isotropic(c(3.0), c(1.6), c(2.0), 1e-6).value < 0.0);
}

TEST_CASE("identical plates attract for random interlayers") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> eps(1.05, 6.0);
  for (int i = 0; i < 100; ++i) {
    const double e1 = eps(rng), ex = eps(rng), ez = eps(rng);
    CHECK(casimir_force(MaterialSystem::constant(e1, e1, ex, ez), 1e-6).value > 0.0);
  }
}

TEST_CASE("plate exchange symmetry") {
  const double a = 3e-7;
  const auto s = MaterialSystem::constant(4.5, 1.3, 2.2, 3.1);
  const auto t = MaterialSystem::constant(1.3, 4.5, 2.2, 3.1);
  CHECK(casimir_force(s, a).value == doctest::Approx(casimir_force(t, a).value).epsilon(1e-12));
  CHECK(casimir_energy(s, a).value == doctest::Approx(casimir_energy(t, a).value).epsilon(1e-12));
}

TEST_CASE("a^4 F is separation independent for constant permittivities") {
  const auto s = MaterialSystem::constant(5.0, 1.2, 2.0, 3.0);
  const double ref = casimir_force(s, 1e-6).value * 1e-24;
  for (double a : {0.5e-6, 2e-6, 4e-6}) {
    CHECK(casimir_force(s, a).value * std::pow(a, 4) == doctest::Approx(ref).epsilon(1e-8));
  }
  CHECK(casimir_force(s, 1e-6).value == doctest::Approx(force_scale(2.0, 1e-6) *
                                                        (casimir_force(s, 1e-6).value / force_scale(2.0, 1e-6))));
}

TEST_CASE("finite-difference derivative of the energy reproduces the force") {
  const auto check = [](const MaterialSystem& s, double a) {
    const auto f = casimir_force(s, a);
    const double fd = force_from_energy_fd(s, a, a / 1000.0);
    CHECK(std::abs(fd - f.value) <= std::max(1e-4 * std::abs(f.value), 10.0 * f.error_estimate));
  };
  check(MaterialSystem::constant(3.0, 1.6, 2.0, 2.0), 1e-6);
  check(MaterialSystem::constant(2.0, 2.0, 1.0, 1.0), 1e-6);
  MaterialSystem disp{PermittivityModel::oscillator({{2.0, 8e15}}), PermittivityModel::oscillator({{1.2, 1.5e16}}),
                      PermittivityModel::oscillator({{0.8, 2e16}}), PermittivityModel::oscillator({{1.5, 1e16}})};
  check(disp, 1e-7);
  CHECK(force_from_energy_fd(MaterialSystem::constant(2.0, 2.0, 1.0, 1.0), 1e-6, 1e-9) > 0.0);
  CHECK_THROWS_AS(force_from_energy_fd(MaterialSystem::constant(2, 2, 1, 1), 1e-6, 2e-7), std::domain_error);
}

TEST_CASE("dispersive permittivity breaks exact a^-4 scaling") {
  const auto plate = PermittivityModel::oscillator({{3.0, 5e15}});
  MaterialSystem disp{plate, plate, PermittivityModel::constant(1.0), PermittivityModel::constant(1.0)};
  const double f1 = casimir_force(disp, 1e-8).value * 1e-32;
  const double f2 = casimir_force(disp, 1e-6).value * 1e-24;
  CHECK(f1 > 0.0);
  CHECK(f1 < 0.9 * f2);
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(casimir_force(MaterialSystem::constant(2, 2, 1, 1), 0.0), std::domain_error);
  CHECK_THROWS_AS(casimir_energy(MaterialSystem::constant(-2, 2, 1, 1), 1e-6), std::invalid_argument);
}

TEST_CASE("serial and parallel execution agree bitwise") {
  const auto s = MaterialSystem::constant(3.0, 1.6, 2.0, 2.7);
  const auto a = casimir_force(s, 1e-6, {}, Execution::Serial);
  const auto b = casimir_force(s, 1e-6, {}, Execution::Parallel);
  CHECK(a.value == b.value);
  CHECK(a.error_estimate == b.error_estimate);
  CHECK(casimir_energy(s, 1e-6, {}, Execution::Serial).value == casimir_energy(s, 1e-6, {}, Execution::Parallel).value);
}
