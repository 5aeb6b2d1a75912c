#include <cmath>
#include <limits>
#include <stdexcept>

#include "casimir/constants.hpp"
#include "casimir/quadrature.hpp"
#include "doctest.h"
#include "oracle/frozen_values.hpp"

using namespace casimir;
using namespace casimir::quadrature;

namespace {

double te_product(double u) {
  auto r = [u](double m) {
    const double s = std::sqrt((m - 1.0) * u * u + 1.0);
    return (s - 1.0) / (s + 1.0);
  };
  return r(1.5) * r(0.8);
}

const double kPi4Over15 = std::pow(kPi, 4) / 15.0;

}  // namespace

TEST_CASE("spec validation") {
  QuadratureSpec s;
  CHECK_NOTHROW(s.validate());
  s.rel_tol = 1.0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = {};
  s.abs_tol = 0.0;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  s = {};
  s.max_subdivisions = 9;
  CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  const auto t = QuadratureSpec{}.tightened(10.0);
  CHECK(t.rel_tol == doctest::Approx(1e-9));
  CHECK(t.abs_tol == doctest::Approx(1e-13));
}

TEST_CASE("integrate_unit examples") {
  const QuadratureSpec spec;
  auto r = integrate_unit([](double) { return 1.0; }, spec);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.converged);
  r = integrate_unit([](double u) { return 3.0 * u * u; }, spec);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
  r = integrate_unit([](double u) { return -std::log(u); }, spec);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(r.converged);
  CHECK(r.error_estimate >= 0.0);
  CHECK(r.error_estimate <= std::max(spec.abs_tol, spec.rel_tol * std::abs(r.value)));
}

TEST_CASE("integrate_p examples") {
  const QuadratureSpec spec;
  CHECK(integrate_p([](double p) { return 1.0 / (p * p); }, spec).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(integrate_p([](double p) { return std::pow(p, -4); }, spec).value ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  const auto r = integrate_p([](double p) { return te_product(1.0 / p) / (p * p); }, spec);
  CHECK(r.value == doctest::Approx(frozen::kPsi1_15_08).epsilon(1e-8));
}

TEST_CASE("integrate_p is integrate_unit of the transformed integrand") {
  const QuadratureSpec spec;
  auto f = [](double p) { return std::exp(-p) * p; };
  const auto via_p = integrate_p(f, spec);
  const auto via_u = integrate_unit([&](double u) { return f(1.0 / u) / (u * u); }, spec);
  CHECK(via_p.value == doctest::Approx(via_u.value).epsilon(1e-15));
  CHECK(via_p.error_estimate == doctest::Approx(via_u.error_estimate).epsilon(1e-12));
  CHECK(via_p.evaluations == via_u.evaluations);
}

TEST_CASE("integrate_xi examples") {
  const QuadratureSpec spec;
  const double scale = 3.7e14;
  CHECK(integrate_xi([&](double x) { return std::exp(-x / scale); }, scale, spec).value ==
        doctest::Approx(scale).epsilon(1e-10));
  CHECK(integrate_xi([](double x) { return x * x * x * std::exp(-x); }, 1.0, spec).value ==
        doctest::Approx(6.0).epsilon(1e-10));
  CHECK(integrate_xi([](double x) { return x * x * x / std::expm1(x); }, 1.0, spec).value ==
        doctest::Approx(kPi4Over15).epsilon(1e-10));
}

TEST_CASE("halving rel_tol never increases the error on the reference integrals") {
  auto err_log = [](const QuadratureSpec& s) {
    return std::abs(integrate_unit([](double u) { return -std::log(u); }, s).value - 1.0);
  };
  auto err_psi1 = [](const QuadratureSpec& s) {
    return std::abs(integrate_p([](double p) { return te_product(1.0 / p) / (p * p); }, s).value -
                    frozen::kPsi1_15_08);
  };
  auto err_bose = [](const QuadratureSpec& s) {
    return std::abs(integrate_xi([](double x) { return x * x * x / std::expm1(x); }, 1.0, s).value - kPi4Over15);
  };
  for (auto err : {+err_log, +err_psi1, +err_bose}) {
    QuadratureSpec s;
    s.rel_tol = 1e-3;
    s.abs_tol = 1e-300;
    double prev = err(s);
    for (int i = 0; i < 12; ++i) {
      s.rel_tol /= 2.0;
      const double now = err(s);
      CHECK(now <= prev + 4.0 * std::numeric_limits<double>::epsilon());
      prev = now;
    }
  }
}

TEST_CASE("non-finite integrand is a hard error naming the abscissa") {
  const QuadratureSpec spec;
  bool thrown = false;
  try {
    integrate_unit([](double u) { return u > 0.5 ? std::numeric_limits<double>::quiet_NaN() : 1.0; }, spec);
  } catch (const NonFiniteIntegrand& e) {
    thrown = true;
    CHECK(e.abscissa() > 0.5);
    CHECK(e.abscissa() < 1.0);
  }
  CHECK(thrown);
  CHECK_THROWS_AS(integrate_unit([](double) { return std::numeric_limits<double>::infinity(); }, spec,
                                 Execution::Parallel),
                  NonFiniteIntegrand);
}

TEST_CASE("non-convergence is reported, not thrown") {
  QuadratureSpec spec;
  spec.max_subdivisions = 10;
  spec.rel_tol = 1e-14;
  spec.abs_tol = 1e-300;
  const auto r = integrate_unit([](double u) { return std::sin(1.0 / u) / u; }, spec);
  CHECK_FALSE(r.converged);
  CHECK(std::isfinite(r.value));
}

TEST_CASE("serial and parallel node evaluation agree bitwise") {
  const QuadratureSpec spec;
  auto f = [](double u) { return std::exp(-u) * std::cos(20.0 * u) - std::log(u); };
  const auto s = integrate_unit(f, spec, Execution::Serial);
  const auto p = integrate_unit(f, spec, Execution::Parallel);
  CHECK(s.value == p.value);
  CHECK(s.error_estimate == p.error_estimate);
  CHECK(s.evaluations == p.evaluations);
}
