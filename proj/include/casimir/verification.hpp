#pragma once

#include <string>
#include <vector>

#include "casimir/quadrature.hpp"

// Self-consistency suites run by `casimir-aniso verify`. Each compares two
// independent routes to the same quantity on a small fixed set of systems.

namespace casimir::verification {

struct SuiteResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;      // worst observed discrepancy
  double threshold = 0.0;  // pass iff worst <= threshold (or > for negative controls)
  int cases = 0;
  std::string detail;
};

SuiteResult isotropic_reduction(const quadrature::QuadratureSpec& spec);
SuiteResult separation_scaling(const quadrature::QuadratureSpec& spec);
SuiteResult finite_difference(const quadrature::QuadratureSpec& spec);
SuiteResult factorization();
SuiteResult factorization_negative_control();
SuiteResult correctness_triangle(const quadrature::QuadratureSpec& spec);

std::vector<SuiteResult> run_all(const quadrature::QuadratureSpec& spec);

/// |x - y| / max(|x|, |y|); zero when both are zero.
double relative_difference(double x, double y);

}  // namespace casimir::verification
