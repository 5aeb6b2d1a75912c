#include "casimir/polylog.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace casimir {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double direct_series(int s, double z) {
  double sum = 0.0;
  double zk = z;
  for (int k = 1; k < 2000; ++k) {
    const double term = zk / std::pow(static_cast<double>(k), s);
    sum += term;
    if (std::abs(zk) < 0.25 * kEps * std::abs(sum)) break;
    zk *= z;
  }
  return sum;
}

// Expansion about z = 1 in mu = ln z (|mu| < 2 pi):
// Li_s(e^mu) = mu^{s-1}/(s-1)! [H_{s-1} - ln(-mu)] + sum_{k != s-1} zeta(s-k) mu^k / k!
double log_series(int s, double z) {
  const double mu = std::log(z);
  double harmonic = 0.0;
  for (int k = 1; k <= s - 1; ++k) harmonic += 1.0 / k;
  double factorial = 1.0;
  for (int k = 2; k <= s - 1; ++k) factorial *= k;
  double sum = std::pow(mu, s - 1) / factorial * (harmonic - std::log(-mu));

  double mu_k = 1.0;   // mu^k
  double k_fact = 1.0;  // k!
  for (int k = 0; k < 80; ++k) {
    if (k > 0) {
      mu_k *= mu;
      k_fact *= k;
    }
    if (k == s - 1) continue;
    const double term = std::riemann_zeta(static_cast<double>(s - k)) * mu_k / k_fact;
    sum += term;
    // zeta vanishes at negative even integers, so test the power, not the term.
    if (k > s && std::abs(mu_k / k_fact) < 0.25 * kEps * std::abs(sum)) break;
  }
  return sum;
}

double positive_branch(int s, double z) {
  if (z == 0.0) return 0.0;
  if (z == 1.0) return std::riemann_zeta(static_cast<double>(s));
  if (z <= 0.5) return direct_series(s, z);
  return log_series(s, z);
}

}  // namespace

double polylog(int s, double z) {
  if (s < 2) throw std::domain_error("polylog: order s must be >= 2");
  if (!(z >= -1.0 && z <= 1.0)) throw std::domain_error("polylog: argument must lie in [-1, 1]");
  if (z >= 0.0) return positive_branch(s, z);
  // Li_s(z) + Li_s(-z) = 2^{1-s} Li_s(z^2)
  return std::ldexp(positive_branch(s, z * z), 1 - s) - positive_branch(s, -z);
}

}  // namespace casimir
