#include <cmath>

#include "doctest.h"
#include "oracle/frozen_values.hpp"
#include "oracle/reference_oracles.hpp"

// The frozen constants were produced by separate arbitrary-precision and grid
// computations; the C++ grid oracle must reproduce them before any library
// code is compared against either.

TEST_CASE("grid psi oracle reproduces frozen values") {
  CHECK(oracle::psi1(1.5, 0.8) == doctest::Approx(frozen::kPsi1_15_08).epsilon(1e-10));
  CHECK(oracle::psi1(1.5, 1.5) == doctest::Approx(frozen::kPsi1_15_15).epsilon(1e-10));
  CHECK(oracle::psi2(1.5, 0.8, 1.0) == doctest::Approx(frozen::kPsi2_15_08_10).epsilon(1e-10));
  CHECK(oracle::psi2(1.5, 0.8, 2.0) == doctest::Approx(frozen::kPsi2_15_08_20).epsilon(1e-10));
}

TEST_CASE("grid 2d oracle reproduces frozen energy and force") {
  const double e = oracle::energy(3.0, 1.6, 2.0, 2.0, 1e-6, 1000);
  const double f = oracle::force(3.0, 1.6, 2.0, 2.0, 1e-6, 1000);
  CHECK(e == doctest::Approx(frozen::kEnergy_3_16_2_2_1um).epsilon(1e-6));
  CHECK(f == doctest::Approx(frozen::kForce_3_16_2_2_1um).epsilon(1e-6));
}

TEST_CASE("trivial oracle anchors") {
  CHECK(oracle::simpson([](double u) { return 3.0 * u * u; }, 0.0, 1.0, 10) == doctest::Approx(1.0));
  CHECK(oracle::psi1(1.0, 1.0, 100) == 0.0);
  CHECK(oracle::psi2(1.0, 1.0, 1.0, 100) == 0.0);
}
