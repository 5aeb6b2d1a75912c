#include <cmath>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/polylog.hpp"
#include "doctest.h"
#include "oracle/frozen_values.hpp"

using casimir::kPi;
using casimir::polylog;

namespace {

double direct(int s, double z) {
  double sum = 0.0, zk = 1.0;
  for (int k = 1; k < 4000; ++k) {
    zk *= z;
    sum += zk / std::pow(k, s);
  }
  return sum;
}

}  // namespace

TEST_CASE("closed forms") {
  const double z4 = std::pow(kPi, 4) / 90.0;
  CHECK(polylog(4, 1.0) == doctest::Approx(z4).epsilon(1e-15));
  CHECK(polylog(4, -1.0) == doctest::Approx(-7.0 / 8.0 * z4).epsilon(1e-15));
  CHECK(polylog(2, 1.0) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-15));
  CHECK(polylog(2, 0.5) == doctest::Approx(kPi * kPi / 12.0 - std::log(2.0) * std::log(2.0) / 2.0).epsilon(1e-15));
  CHECK(polylog(4, 0.5) == doctest::Approx(frozen::kLi4Half).epsilon(1e-15));
  CHECK(polylog(4, 0.0) == 0.0);
}

TEST_CASE("agrees with the defining series inside the disc") {
  for (int s : {2, 3, 4, 5, 7}) {
    for (double z = -0.95; z <= 0.951; z += 0.05) {
      CHECK(polylog(s, z) == doctest::Approx(direct(s, z)).epsilon(1e-13));
    }
  }
}

TEST_CASE("small arguments keep relative precision") {
  CHECK(polylog(4, 1e-12) == doctest::Approx(1e-12).epsilon(1e-15));
  CHECK(polylog(4, -3e-9) == doctest::Approx(-3e-9).epsilon(1e-15));
}

TEST_CASE("domain") {
  CHECK_THROWS_AS(polylog(1, 0.5), std::domain_error);
  CHECK_THROWS_AS(polylog(4, 1.01), std::domain_error);
  CHECK_THROWS_AS(polylog(4, -1.5), std::domain_error);
}
