#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/mode_oracle.hpp"
#include "doctest.h"

using namespace casimir;
using namespace casimir::modes;

namespace {

std::array<double, 4> sorted_magnitudes(const RegionEigensystem& es) {
  std::array<double, 4> m{};
  for (int i = 0; i < 4; ++i) m[i] = std::abs(es.gammas(i));
  return m;
}

}  // namespace

TEST_CASE("region eigenvalues match the closed forms") {
  // Above the light line of the region, gamma = +/- i t.
  const auto one = region_eigensystem(Region::I, 3.0, MaterialSystem::constant(2, 1, 1, 1), 0.0);
  for (double g : sorted_magnitudes(one)) CHECK(g == doctest::Approx(1.0).epsilon(1e-12));

  const auto three = region_eigensystem(Region::III, 6.0, MaterialSystem::constant(1, 1, 2, 4), 0.0);
  CHECK(std::abs(three.gammas(0)) == doctest::Approx(2.0).epsilon(1e-12));  // TE: t3x
  CHECK(std::abs(three.gammas(2)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(three.gammas(1)) == doctest::Approx(1.0).epsilon(1e-12));  // TM: t3z
  CHECK(std::abs(three.gammas(3)) == doctest::Approx(1.0).epsilon(1e-12));
  const auto ms = make_mode_system(MaterialSystem::constant(1, 1, 2, 4), 6.0, 0.0, 1e-6);
  CHECK(ms.t3x_sq == doctest::Approx(4.0));
  CHECK(ms.t3z_sq == doctest::Approx(1.0));
}

TEST_CASE("imaginary-axis eigenvalues are real +/- pairs") {
  const auto system = MaterialSystem::constant(3.0, 1.6, 2.0, 5.0);
  for (double p : {1.0, 1.3, 4.0}) {
    const double a2 = alpha_sq_from_p(p, 2.0);
    const auto es = region_eigensystem(Region::III, a2, system, 1e14);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(es.gammas(i).imag()) < 1e-14);
    CHECK(es.gammas(0).real() == doctest::Approx(-es.gammas(2).real()).epsilon(1e-14));
    CHECK(es.gammas(1).real() == doctest::Approx(-es.gammas(3).real()).epsilon(1e-14));
    CHECK(es.gammas(0).real() < 0.0);
    CHECK(es.gammas(2).real() == doctest::Approx(p * std::sqrt(2.0)).epsilon(1e-12));
    const double P = std::sqrt((2.5 - 1.0 + p * p) / 2.5);
    CHECK(es.gammas(3).real() == doctest::Approx(P * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::abs(es.W.determinant()) > 1e-12);
  }
}

TEST_CASE("isotropic interlayer reproduces the plate eigensystem") {
  const auto system = MaterialSystem::constant(2.0, 1.5, 2.0, 2.0);
  const double a2 = alpha_sq_from_p(1.7, 2.0);
  const auto gap = region_eigensystem(Region::III, a2, system, 1e14);
  const auto plate = region_eigensystem(Region::I, a2, system, 1e14);
  CHECK((gap.W - plate.W).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((gap.gammas - plate.gammas).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("defective operator is rejected") {
  CHECK_THROWS_AS(region_eigensystem(Region::I, 2.0, MaterialSystem::constant(2, 1, 1, 1), 0.0), std::domain_error);
}

TEST_CASE("boundary determinant") {
  const auto system = MaterialSystem::constant(3.0, 1.6, 2.0, 5.0);
  const double a2 = alpha_sq_from_p(1.4, 2.0);
  CHECK(boundary_determinant(system, a2, 2e14, 1e-6) != 0.0);
  CHECK_THROWS_AS(boundary_determinant(system, 0.5, 2e14, 1e-6), std::domain_error);
  CHECK_THROWS_AS(boundary_determinant(system, a2, 0.0, 1e-6), std::domain_error);
  CHECK_THROWS_AS(boundary_determinant(system, a2, 2e14, -1.0), std::domain_error);

  // No reflection: the whole a-dependence is the bare exponential.
  const auto uniform = MaterialSystem::constant(2.0, 2.0, 2.0, 2.0);
  const double xi = 2e14;
  const double q = 1.4 * std::sqrt(2.0) * xi / PhysicalConstants::c;
  const double d1 = boundary_determinant(uniform, a2, xi, 1e-6);
  const double d2 = boundary_determinant(uniform, a2, xi, 2e-6);
  CHECK(d2 / d1 == doctest::Approx(std::exp(2.0 * q * 1e-6)).epsilon(1e-10));
}

TEST_CASE("log-slope of D at large separation is q_perp + q_par") {
  const auto system = MaterialSystem::constant(3.0, 1.6, 2.0, 5.0);
  const double p = 1.4, xi = 1e14;
  const double a2 = alpha_sq_from_p(p, 2.0);
  const double root = std::sqrt(2.0) * xi / PhysicalConstants::c;
  const double P = std::sqrt((2.5 - 1.0 + p * p) / 2.5);
  const double a1 = 2e-5, a2sep = 3e-5;
  const double slope = (std::log(std::abs(boundary_determinant(system, a2, xi, a2sep))) -
                        std::log(std::abs(boundary_determinant(system, a2, xi, a1)))) /
                       (a2sep - a1);
  CHECK(slope == doctest::Approx((p + P) * root).epsilon(1e-6));
}

TEST_CASE("factorization residual") {
  const std::array seps{0.5e-6, 1e-6, 2e-6};
  const auto iso = MaterialSystem::constant(2.5, 2.5, 1.5, 1.5);
  CHECK(factorization_residual(iso, alpha_sq_from_p(1.2, 1.5), 2e14, seps) <= 1e-8);
  const auto aniso = MaterialSystem::constant(3.0, 1.6, 2.0, 5.0);
  const double a2 = alpha_sq_from_p(1.2, 2.0);
  CHECK(factorization_residual(aniso, a2, 2e14, seps) <= 1e-8);
  CHECK(factorization_residual(aniso, a2, 2e14, seps, RateChoice::TmForBoth) > 1e-3);
  // With an isotropic interlayer the two rates coincide, so the control cannot fail.
  CHECK(factorization_residual(iso, alpha_sq_from_p(1.2, 1.5), 2e14, seps, RateChoice::TmForBoth) <= 1e-8);

  const std::array two{1e-6, 2e-6};
  CHECK_THROWS_AS(factorization_residual(aniso, a2, 2e14, two), std::invalid_argument);
  const std::array dup{1e-6, 1e-6, 2e-6};
  CHECK_THROWS_AS(factorization_residual(aniso, a2, 2e14, dup), std::invalid_argument);
}

TEST_CASE("factorization on random configurations") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> eps(1.05, 6.0), pd(1.0, 3.0), kd(0.05, 1.5);
  for (int i = 0; i < 50; ++i) {
    const double ex = eps(rng);
    const auto system = MaterialSystem::constant(eps(rng), eps(rng), ex, i % 2 ? ex : eps(rng));
    const double p = pd(rng);
    // xi chosen so that the middle separation sees exp(-2 p a xi sqrt(eps) / c) ~ kd.
    const double xi = kd(rng) * PhysicalConstants::c / (2.0 * p * 1e-6 * std::sqrt(ex));
    const std::array seps{0.5e-6, 1e-6, 1.7e-6};
    CHECK(factorization_residual(system, alpha_sq_from_p(p, ex), xi, seps) <= 1e-8);
  }
}
