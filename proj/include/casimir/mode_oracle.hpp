#pragma once

#include <Eigen/Dense>
#include <span>

#include "casimir/materials.hpp"

// Independent check of the G1, G2 dispersion functions from the electromagnetic
// boundary-value problem. In each region the transverse field vector
// (e_x, e_y, c b_y, c b_x) obeys an eigenproblem in the normal wave-vector
// component gamma; fields vary as exp(i K0 gamma z) with K0 = omega / c.
//
// On the imaginary axis (omega = i xi) the operator is real: alpha^2 <= 0,
// every gamma is real and exp(i K0 gamma z) = exp(-(xi / c) gamma z).

namespace casimir::modes {

enum class Region { I, II, III };

struct ModeSystem {
  double alpha_sq;  // (k c / omega)^2; equals eps3x (1 - p^2) on the imaginary axis
  double xi;        // rad/s
  double a;         // m
  double t1_sq;     // alpha^2 - eps1
  double t2_sq;     // alpha^2 - eps2
  double t3x_sq;    // alpha^2 - eps3x
  double t3z_sq;    // (alpha^2 - eps3z) eps3x / eps3z
};

ModeSystem make_mode_system(const MaterialSystem& system, double alpha_sq, double xi, double a);

/// alpha^2 = eps3x (1 - p^2)
double alpha_sq_from_p(double p, double eps3x);

struct RegionEigensystem {
  // Columns ordered [TE-, TM-, TE+, TM+]: TE columns carry (e_y, c b_x), TM
  // columns (e_x, c b_y); "-" has Re(gamma) < 0 (or Im(gamma) < 0 when gamma
  // is imaginary).
  Eigen::Matrix4cd W;
  Eigen::Vector4cd gammas;
};

/// The 4x4 transverse propagation operator of a region at permittivities
/// evaluated at xi.
Eigen::Matrix4d propagation_operator(Region region, double alpha_sq, const MaterialSystem& system, double xi);

/// Numerically diagonalises the operator. Throws std::domain_error when it is
/// defective (gamma = 0).
RegionEigensystem region_eigensystem(Region region, double alpha_sq, const MaterialSystem& system, double xi);

/// Determinant of the 4x4 matching system after eliminating the interlayer
/// amplitudes. Unknowns are the plate-1 amplitudes at z = 0 and the plate-2
/// amplitudes at z = a. Imaginary axis only (alpha_sq <= 0).
double boundary_determinant(const MaterialSystem& system, double alpha_sq, double xi, double a);

enum class RateChoice {
  Physical,  // exp(-(q_perp + q_par) a)
  TmForBoth  // exp(-2 q_par a): deliberately wrong, negative control
};

/// Relative spread max|C - mean| / |mean| of C(a) = D(a) exp(-(q_perp + q_par) a) / (G1(a) G2(a))
/// over the given separations (at least three, distinct).
double factorization_residual(const MaterialSystem& system, double alpha_sq, double xi,
                              std::span<const double> separations, RateChoice rates = RateChoice::Physical);

}  // namespace casimir::modes
