#include "casimir/mode_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/kernels.hpp"

namespace casimir::modes {

namespace {

struct RegionEps {
  double x;  // transverse
  double z;  // along the normal
};

RegionEps region_eps(Region region, const MaterialSystem& system, double xi) {
  switch (region) {
    case Region::I: {
      const double e = permittivity_at(system.eps1, xi);
      return {e, e};
    }
    case Region::II: {
      const double e = permittivity_at(system.eps2, xi);
      return {e, e};
    }
    case Region::III:
      return {permittivity_at(system.eps3x, xi), permittivity_at(system.eps3z, xi)};
  }
  throw std::logic_error("unknown region");
}

// Sort key separating the "-" and "+" members of a +/- eigenvalue pair.
double branch_key(std::complex<double> g) {
  return std::abs(g.imag()) > 1e-12 * std::abs(g) ? g.imag() : g.real();
}

// Scales a column so its largest entry is 1; removes arbitrary complex phases.
Eigen::Vector4cd normalized(const Eigen::Vector4cd& v) {
  Eigen::Index idx = 0;
  v.cwiseAbs().maxCoeff(&idx);
  return v / v(idx);
}

}  // namespace

double alpha_sq_from_p(double p, double eps3x) { return eps3x * (1.0 - p * p); }

ModeSystem make_mode_system(const MaterialSystem& system, double alpha_sq, double xi, double a) {
  const double e1 = permittivity_at(system.eps1, xi);
  const double e2 = permittivity_at(system.eps2, xi);
  const double ex = permittivity_at(system.eps3x, xi);
  const double ez = permittivity_at(system.eps3z, xi);
  return {alpha_sq, xi, a, alpha_sq - e1, alpha_sq - e2, alpha_sq - ex, (alpha_sq - ez) * ex / ez};
}

Eigen::Matrix4d propagation_operator(Region region, double alpha_sq, const MaterialSystem& system, double xi) {
  const RegionEps eps = region_eps(region, system, xi);
  Eigen::Matrix4d L = Eigen::Matrix4d::Zero();
  // Acting on (e_x, e_y, c b_y, c b_x).
  L(0, 2) = 1.0 - alpha_sq / eps.z;
  L(1, 3) = -1.0;
  L(2, 0) = eps.x;
  L(3, 1) = alpha_sq - eps.x;
  return L;
}

RegionEigensystem region_eigensystem(Region region, double alpha_sq, const MaterialSystem& system, double xi) {
  const Eigen::Matrix4d L = propagation_operator(region, alpha_sq, system, xi);

  // The operator decouples into a TM block on (e_x, c b_y) and a TE block on
  // (e_y, c b_x); diagonalising the blocks separately keeps the polarisations
  // apart even when their eigenvalues coincide.
  struct Pair {
    std::complex<double> minus_value, plus_value;
    Eigen::Vector4cd minus_vec, plus_vec;
  };
  auto solve_block = [&](int i, int j) {
    Eigen::Matrix2d block;
    block << L(i, i), L(i, j), L(j, i), L(j, j);
    Eigen::EigenSolver<Eigen::Matrix2d> solver(block);
    if (solver.info() != Eigen::Success) throw std::domain_error("region eigensystem: diagonalisation failed");
    const auto values = solver.eigenvalues();
    const auto vectors = solver.eigenvectors();
    const double scale = std::max({std::abs(values(0)), std::abs(values(1)), 1e-300});
    if (std::abs(values(0) - values(1)) <= 1e-12 * scale || std::abs(values(0)) < 1e-14)
      throw std::domain_error("region eigensystem: defective operator (gamma = 0)");
    Pair out;
    const int lo = branch_key(values(0)) < branch_key(values(1)) ? 0 : 1;
    const int hi = 1 - lo;
    out.minus_value = values(lo);
    out.plus_value = values(hi);
    Eigen::Vector4cd vm = Eigen::Vector4cd::Zero(), vp = Eigen::Vector4cd::Zero();
    vm(i) = vectors(0, lo);
    vm(j) = vectors(1, lo);
    vp(i) = vectors(0, hi);
    vp(j) = vectors(1, hi);
    out.minus_vec = normalized(vm);
    out.plus_vec = normalized(vp);
    return out;
  };

  const Pair te = solve_block(1, 3);
  const Pair tm = solve_block(0, 2);
  RegionEigensystem es;
  es.W.col(0) = te.minus_vec;
  es.W.col(1) = tm.minus_vec;
  es.W.col(2) = te.plus_vec;
  es.W.col(3) = tm.plus_vec;
  es.gammas << te.minus_value, tm.minus_value, te.plus_value, tm.plus_value;
  return es;
}

namespace {

Eigen::Matrix4d real_part_checked(const Eigen::Matrix4cd& m) {
  if (m.imag().cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, m.real().cwiseAbs().maxCoeff()))
    throw std::domain_error("boundary determinant: complex eigensystem on the imaginary axis");
  return m.real();
}

}  // namespace

double boundary_determinant(const MaterialSystem& system, double alpha_sq, double xi, double a) {
  require_valid(system);
  if (!(alpha_sq <= 0.0)) throw std::domain_error("boundary determinant: imaginary axis requires alpha^2 <= 0");
  if (!(xi > 0.0)) throw std::domain_error("boundary determinant: xi must be > 0");
  if (!(a > 0.0)) throw std::domain_error("separation a must be > 0");

  const auto plate1 = region_eigensystem(Region::I, alpha_sq, system, xi);
  const auto plate2 = region_eigensystem(Region::II, alpha_sq, system, xi);
  const auto gap = region_eigensystem(Region::III, alpha_sq, system, xi);

  const Eigen::Matrix4d W1 = real_part_checked(plate1.W);
  const Eigen::Matrix4d W2 = real_part_checked(plate2.W);
  const Eigen::Matrix4d W3 = real_part_checked(gap.W);
  const Eigen::Vector4d g3 = gap.gammas.real();

  // Transfer across the gap: field(a) = W3 diag(exp(-(xi/c) gamma a)) W3^-1 field(0).
  Eigen::Vector4d growth;
  for (int j = 0; j < 4; ++j) growth(j) = std::exp(-(xi / PhysicalConstants::c) * g3(j) * a);
  Eigen::FullPivLU<Eigen::Matrix4d> lu(W3);
  if (!lu.isInvertible()) throw std::domain_error("boundary determinant: singular gap eigenbasis");
  const Eigen::Matrix4d transfer = W3 * growth.asDiagonal() * lu.inverse();

  // Plate 1 (z < 0) keeps gamma < 0 columns; plate 2 (z > a) keeps gamma > 0.
  Eigen::Matrix4d system_matrix;
  system_matrix.leftCols<2>() = transfer * W1.leftCols<2>();
  system_matrix.rightCols<2>() = -W2.rightCols<2>();
  return system_matrix.determinant();
}

double factorization_residual(const MaterialSystem& system, double alpha_sq, double xi,
                              std::span<const double> separations, RateChoice rates) {
  if (separations.size() < 3) throw std::invalid_argument("factorization_residual: need at least three separations");
  std::vector<double> sorted(separations.begin(), separations.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("factorization_residual: separations must be distinct");

  const RatioSet r = ratios(system, xi);
  const double p = std::sqrt(1.0 - alpha_sq / r.eps3x);
  const double P = kernels::kernel_params(r, p).P;
  const double root = std::sqrt(r.eps3x) * xi / PhysicalConstants::c;
  const double q_perp = p * root;
  const double q_par = P * root;
  const double rate = rates == RateChoice::Physical ? q_perp + q_par : 2.0 * q_par;

  std::vector<double> c;
  for (double a : separations) {
    const kernels::ModePoint mode{p, xi, a};
    const double G1 = kernels::g1(mode, r);
    const double G2 = kernels::g2(mode, r);
    if (!(G1 > 0.0 && G2 > 0.0)) throw std::domain_error("factorization_residual: G <= 0 (out of regime)");
    c.push_back(boundary_determinant(system, alpha_sq, xi, a) * std::exp(-rate * a) / (G1 * G2));
  }
  double mean = 0.0;
  for (double v : c) mean += v;
  mean /= static_cast<double>(c.size());
  double spread = 0.0;
  for (double v : c) spread = std::max(spread, std::abs(v - mean));
  return spread / std::abs(mean);
}

}  // namespace casimir::modes
