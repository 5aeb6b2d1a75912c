#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "casimir/parallel.hpp"
#include "casimir/quadrature.hpp"
#include "casimir/retarded_limit.hpp"

namespace casimir::atlas {

enum class ForceLabel { Attractive, Repulsive, Indeterminate };

std::string to_string(ForceLabel label);

struct Classification {
  ForceLabel label;
  double psi_value;
  double margin;  // |psi| / error_estimate
};

/// A sign is only trusted when |psi| exceeds this many error estimates.
inline constexpr double kMarginThreshold = 3.0;

Classification classify(const retarded::PsiBreakdown& b);
Classification classify(double m1, double m2, double m3, const quadrature::QuadratureSpec& spec = {});

/// True iff eps3x and eps3z both lie strictly between eps1 and eps2 (either orientation).
bool guaranteed_repulsive(double eps1, double eps2, double eps3x, double eps3z);

struct BorderPoint {
  double m2;
  double m3_star;
  double bracket_width;  // half-width: psi changes sign between m3_star -/+ bracket_width
};

struct BisectionOptions {
  double width_tol = 1e-9;
  int max_iterations = 200;
};

/// Bisection on M3 -> psi(M1, M2, M3) inside [lo, hi]. Both ends must carry
/// definite, opposite labels; otherwise throws std::domain_error("no sign change in bracket").
BorderPoint border_m3(double m1, double m2, double lo, double hi, const quadrature::QuadratureSpec& spec = {},
                      const BisectionOptions& options = {});

struct BorderSearch {
  double lo = 0.05;
  double hi = 10.0;
  int samples = 80;         // log-spaced pre-scan points
  int widen_steps = 2;      // extra passes if no sign change is found
  double widen_factor = 10.0;
};

/// Every Psi = 0 crossing in M3 for fixed (M1, M2), in ascending M3.
std::vector<BorderPoint> find_borders(double m1, double m2, const BorderSearch& search = {},
                                      const quadrature::QuadratureSpec& spec = {},
                                      const BisectionOptions& options = {});

struct SweepRow {
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double psi = 0.0;
  double psi1 = 0.0;
  double psi2 = 0.0;
  ForceLabel label = ForceLabel::Indeterminate;
  double error_estimate = 0.0;
  std::string error;  // non-empty when the row failed

  bool ok() const { return error.empty(); }
};

struct SweepResult {
  std::vector<SweepRow> rows;  // row-major: M2 outer, M3 inner
};

/// OpenMP over rows; per-row failures are recorded in the row.
SweepResult sweep(double m1, std::span<const double> m2_grid, std::span<const double> m3_grid,
                  const quadrature::QuadratureSpec& spec = {}, Execution exec = Execution::Parallel);

/// Reference single-threaded sweep; identical output to sweep().
SweepResult sweep_serial(double m1, std::span<const double> m2_grid, std::span<const double> m3_grid,
                         const quadrature::QuadratureSpec& spec = {});

std::vector<double> log_grid(double lo, double hi, int count);
std::vector<double> linear_grid(double lo, double hi, int count);

/// Columns exactly: m1,m2,m3,psi,psi1,psi2,label,error_estimate
void write_csv(const SweepResult& result, std::ostream& out);
void write_json(const SweepResult& result, std::ostream& out);

}  // namespace casimir::atlas
