#include "casimir/sign_atlas.hpp"

#include <omp.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "casimir/format.hpp"

namespace casimir::atlas {

std::string to_string(ForceLabel label) {
  switch (label) {
    case ForceLabel::Attractive:
      return "attractive";
    case ForceLabel::Repulsive:
      return "repulsive";
    case ForceLabel::Indeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

Classification classify(const retarded::PsiBreakdown& b) {
  double margin = 0.0;
  if (b.psi != 0.0) {
    margin = b.error_estimate > 0.0 ? std::abs(b.psi) / b.error_estimate : std::numeric_limits<double>::infinity();
  }
  ForceLabel label = ForceLabel::Indeterminate;
  if (margin >= kMarginThreshold) label = b.psi > 0.0 ? ForceLabel::Attractive : ForceLabel::Repulsive;
  return {label, b.psi, margin};
}

Classification classify(double m1, double m2, double m3, const quadrature::QuadratureSpec& spec) {
  return classify(retarded::psi(m1, m2, m3, spec));
}

bool guaranteed_repulsive(double eps1, double eps2, double eps3x, double eps3z) {
  auto between = [](double lo, double v, double hi) { return lo < v && v < hi; };
  return (between(eps1, eps3x, eps2) && between(eps1, eps3z, eps2)) ||
         (between(eps2, eps3x, eps1) && between(eps2, eps3z, eps1));
}

BorderPoint border_m3(double m1, double m2, double lo, double hi, const quadrature::QuadratureSpec& spec,
                      const BisectionOptions& options) {
  if (!(lo > 0.0 && lo < hi)) throw std::invalid_argument("border_m3: bracket must satisfy 0 < lo < hi");
  const auto at_lo = classify(m1, m2, lo, spec);
  const auto at_hi = classify(m1, m2, hi, spec);
  if (at_lo.label == ForceLabel::Indeterminate || at_hi.label == ForceLabel::Indeterminate ||
      at_lo.label == at_hi.label)
    throw std::domain_error("no sign change in bracket");

  const ForceLabel lo_label = at_lo.label;
  for (int it = 0; it < options.max_iterations && 0.5 * (hi - lo) > options.width_tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const auto c = classify(m1, m2, mid, spec);
    // Sign no longer resolvable above quadrature noise: the root is at mid.
    if (c.label == ForceLabel::Indeterminate) break;
    (c.label == lo_label ? lo : hi) = mid;
  }
  return {m2, 0.5 * (lo + hi), 0.5 * (hi - lo)};
}

std::vector<BorderPoint> find_borders(double m1, double m2, const BorderSearch& search,
                                      const quadrature::QuadratureSpec& spec, const BisectionOptions& options) {
  if (search.samples < 2) throw std::invalid_argument("find_borders: need at least two samples");
  double lo = search.lo;
  double hi = search.hi;
  for (int pass = 0; pass <= search.widen_steps; ++pass) {
    const auto grid = log_grid(lo, hi, search.samples);
    std::vector<BorderPoint> found;
    double last_m3 = 0.0;
    ForceLabel last = ForceLabel::Indeterminate;
    for (double m3 : grid) {
      const auto c = classify(m1, m2, m3, spec);
      if (c.label == ForceLabel::Indeterminate) continue;
      if (last != ForceLabel::Indeterminate && c.label != last)
        found.push_back(border_m3(m1, m2, last_m3, m3, spec, options));
      last = c.label;
      last_m3 = m3;
    }
    if (!found.empty()) return found;
    lo /= search.widen_factor;
    hi *= search.widen_factor;
  }
  return {};
}

namespace {

SweepRow evaluate_row(double m1, double m2, double m3, const quadrature::QuadratureSpec& spec) {
  SweepRow row;
  row.m1 = m1;
  row.m2 = m2;
  row.m3 = m3;
  try {
    const auto b = retarded::psi(m1, m2, m3, spec);
    row.psi = b.psi;
    row.psi1 = b.psi1;
    row.psi2 = b.psi2;
    row.error_estimate = b.error_estimate;
    row.label = classify(b).label;
    if (!b.converged) row.error = "quadrature did not converge";
  } catch (const std::exception& e) {
    row.psi = row.psi1 = row.psi2 = row.error_estimate = std::numeric_limits<double>::quiet_NaN();
    row.error = e.what();
  }
  return row;
}

}  // namespace

SweepResult sweep_serial(double m1, std::span<const double> m2_grid, std::span<const double> m3_grid,
                         const quadrature::QuadratureSpec& spec) {
  SweepResult result;
  result.rows.reserve(m2_grid.size() * m3_grid.size());
  for (double m2 : m2_grid)
    for (double m3 : m3_grid) result.rows.push_back(evaluate_row(m1, m2, m3, spec));
  return result;
}

SweepResult sweep(double m1, std::span<const double> m2_grid, std::span<const double> m3_grid,
                  const quadrature::QuadratureSpec& spec, Execution exec) {
  if (exec == Execution::Serial) return sweep_serial(m1, m2_grid, m3_grid, spec);
  const long n2 = static_cast<long>(m2_grid.size());
  const long n3 = static_cast<long>(m3_grid.size());
  SweepResult result;
  result.rows.resize(static_cast<std::size_t>(n2 * n3));
#pragma omp parallel for schedule(dynamic, 1) num_threads(parallel::thread_cap())
  for (long i = 0; i < n2 * n3; ++i) {
    result.rows[static_cast<std::size_t>(i)] = evaluate_row(m1, m2_grid[i / n3], m3_grid[i % n3], spec);
  }
  return result;
}

std::vector<double> log_grid(double lo, double hi, int count) {
  if (!(lo > 0.0 && hi > lo) || count < 2) throw std::invalid_argument("log_grid: need 0 < lo < hi, count >= 2");
  std::vector<double> g(static_cast<std::size_t>(count));
  const double step = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) g[i] = lo * std::exp(step * i);
  g.back() = hi;
  return g;
}

std::vector<double> linear_grid(double lo, double hi, int count) {
  if (!(hi > lo) || count < 2) throw std::invalid_argument("linear_grid: need lo < hi, count >= 2");
  std::vector<double> g(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) g[i] = lo + (hi - lo) * i / (count - 1);
  return g;
}

void write_csv(const SweepResult& result, std::ostream& out) {
  out << "# units: m1,m2,m3,psi,psi1,psi2,error_estimate dimensionless; psi > 0 attractive\n";
  out << "m1,m2,m3,psi,psi1,psi2,label,error_estimate\n";
  for (const auto& r : result.rows) {
    out << fmt_double(r.m1) << ',' << fmt_double(r.m2) << ',' << fmt_double(r.m3) << ',' << fmt_double(r.psi) << ','
        << fmt_double(r.psi1) << ',' << fmt_double(r.psi2) << ',' << (r.ok() ? to_string(r.label) : "failed") << ','
        << fmt_double(r.error_estimate) << '\n';
  }
}

void write_json(const SweepResult& result, std::ostream& out) {
  out << "[";
  bool first = true;
  for (const auto& r : result.rows) {
    out << (first ? "\n" : ",\n");
    first = false;
    out << "  {\"m1\": " << json_double(r.m1) << ", \"m2\": " << json_double(r.m2) << ", \"m3\": " << json_double(r.m3)
        << ", \"psi\": " << json_double(r.psi) << ", \"psi1\": " << json_double(r.psi1)
        << ", \"psi2\": " << json_double(r.psi2) << ", \"label\": \"" << (r.ok() ? to_string(r.label) : "failed")
        << "\", \"error_estimate\": " << json_double(r.error_estimate) << ", \"units\": \"dimensionless\"";
    if (!r.ok()) out << ", \"error\": " << json_string(r.error);
    out << "}";
  }
  out << (first ? "]\n" : "\n]\n");
}

}  // namespace casimir::atlas
