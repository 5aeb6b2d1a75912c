#include "casimir/quadrature.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <vector>

namespace casimir::quadrature {

namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
constexpr std::array<double, 11> kNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208745345160, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for nodes kNodes[1], kNodes[3], ..., kNodes[9].
constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};
constexpr int kPoints = 21;

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
};

// Abscissae of one segment in a fixed order: center, then (x-, x+) pairs.
void abscissae(double lo, double hi, double* out) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  out[0] = center;
  for (int j = 0; j < 10; ++j) {
    out[1 + 2 * j] = center - half * kNodes[j];
    out[2 + 2 * j] = center + half * kNodes[j];
  }
}

Segment apply_rule(double lo, double hi, const double* fv) {
  const double half = 0.5 * (hi - lo);
  const double fc = fv[0];
  double kronrod = fc * kKronrodWeights[10];
  double gauss = 0.0;
  double abs_sum = std::abs(kronrod);
  for (int j = 0; j < 10; ++j) {
    const double f1 = fv[1 + 2 * j];
    const double f2 = fv[2 + 2 * j];
    kronrod += kKronrodWeights[j] * (f1 + f2);
    abs_sum += kKronrodWeights[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * (f1 + f2);
  }
  const double mean = 0.5 * kronrod;
  double asc = kKronrodWeights[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j)
    asc += kKronrodWeights[j] * (std::abs(fv[1 + 2 * j] - mean) + std::abs(fv[2 + 2 * j] - mean));

  const double value = kronrod * half;
  const double res_abs = abs_sum * std::abs(half);
  const double res_asc = asc * std::abs(half);
  double err = std::abs((kronrod - gauss) * half);
  if (res_asc != 0.0 && err != 0.0) err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (res_abs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * res_abs, err);
  return {lo, hi, value, err};
}

void evaluate(const Integrand& f, const std::vector<double>& xs, std::vector<double>& ys, Execution exec) {
  const int n = static_cast<int>(xs.size());
  ys.resize(xs.size());
  if (exec == Execution::Serial || n < 2) {
    for (int i = 0; i < n; ++i) ys[i] = f(xs[i]);
  } else {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(parallel::thread_cap())
    for (int i = 0; i < n; ++i) {
      try {
        ys[i] = f(xs[i]);
      } catch (...) {
#pragma omp critical(casimir_quadrature_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  }
  for (int i = 0; i < n; ++i) {
    if (!std::isfinite(ys[i])) throw NonFiniteIntegrand(xs[i], ys[i]);
  }
}

double tolerance(const QuadratureSpec& spec, double value) {
  return std::max(spec.abs_tol, spec.rel_tol * std::abs(value));
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("abs_tol must be > 0");
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw std::invalid_argument("rel_tol must lie in (0, 1)");
  if (max_subdivisions < 10) throw std::invalid_argument("max_subdivisions must be >= 10");
}

QuadratureSpec QuadratureSpec::tightened(double factor) const {
  QuadratureSpec s = *this;
  s.rel_tol /= factor;
  s.abs_tol /= factor;
  return s;
}

NonFiniteIntegrand::NonFiniteIntegrand(double abscissa, double value)
    : std::runtime_error([&] {
        std::ostringstream os;
        os.precision(17);
        os << "integrand returned " << value << " at abscissa " << abscissa;
        return os.str();
      }()),
      abscissa_(abscissa) {}

IntegralResult integrate_interval(const Integrand& f, double lo, double hi, const QuadratureSpec& spec,
                                  Execution exec) {
  spec.validate();
  if (!(std::isfinite(lo) && std::isfinite(hi)) || !(lo < hi))
    throw std::invalid_argument("integration interval must be finite with lo < hi");

  std::vector<double> xs(kPoints);
  std::vector<double> ys;
  abscissae(lo, hi, xs.data());
  evaluate(f, xs, ys, exec);

  std::vector<Segment> segments{apply_rule(lo, hi, ys.data())};
  IntegralResult result;
  result.evaluations = kPoints;

  auto totals = [&] {
    double v = 0.0;
    double e = 0.0;
    for (const auto& s : segments) {
      v += s.value;
      e += s.error;
    }
    result.value = v;
    result.error_estimate = e;
  };
  totals();

  while (result.error_estimate > tolerance(spec, result.value)) {
    if (static_cast<int>(segments.size()) >= spec.max_subdivisions) {
      result.converged = false;
      break;
    }
    auto worst = std::max_element(segments.begin(), segments.end(),
                                  [](const Segment& a, const Segment& b) { return a.error < b.error; });
    const double a = worst->lo;
    const double b = worst->hi;
    const double mid = 0.5 * (a + b);
    if (!(a < mid && mid < b)) {
      // Interval can no longer be split in floating point.
      result.converged = false;
      break;
    }
    xs.resize(2 * kPoints);
    abscissae(a, mid, xs.data());
    abscissae(mid, b, xs.data() + kPoints);
    evaluate(f, xs, ys, exec);
    result.evaluations += 2 * kPoints;

    *worst = apply_rule(a, mid, ys.data());
    segments.insert(worst + 1, apply_rule(mid, b, ys.data() + kPoints));
    totals();
  }
  return result;
}

IntegralResult integrate_unit(const Integrand& f, const QuadratureSpec& spec, Execution exec) {
  return integrate_interval(f, 0.0, 1.0, spec, exec);
}

IntegralResult integrate_p(const Integrand& f, const QuadratureSpec& spec, Execution exec) {
  return integrate_unit(
      [&f](double u) {
        const double p = 1.0 / u;
        return f(p) * p * p;
      },
      spec, exec);
}

IntegralResult integrate_xi(const Integrand& f, double xi_scale, const QuadratureSpec& spec, Execution exec) {
  if (!(xi_scale > 0.0) || !std::isfinite(xi_scale)) throw std::invalid_argument("xi_scale must be positive");
  return integrate_unit(
      [&f, xi_scale](double t) {
        const double one_minus = 1.0 - t;
        const double xi = xi_scale * t / one_minus;
        const double fx = f(xi);
        // Exponentially decaying integrands vanish before the Jacobian overflows.
        if (fx == 0.0) return 0.0;
        return fx * xi_scale / (one_minus * one_minus);
      },
      spec, exec);
}

}  // namespace casimir::quadrature
