#pragma once

#include "pdicke/model.hpp"

namespace pdicke {

// Data of the squeeze transform b = cosh(theta_b) a + e^{i phi} sinh(theta_b) a^dag
// that removes the two-photon terms from the hermitian image, plus the
// coefficients of the resulting rotating-wave form
//
//   Omega_K (b^dag b + J_z) + Omega_L L + shift,
//   L = e^{-i xi2} J_+ b + e^{i xi2} J_- b^dag + ((omega0 - Omega_K)/Omega_L) J_z.
struct BogoliubovReduction {
  double phi = 0.0;      // squeeze phase, -xi1
  double theta_b = 0.0;  // rapidity, artanh(delta / (2 sgn(theta1) sqrt(theta1 theta2)))
  double delta = 0.0;    // omega - sqrt(omega^2 - 4 theta1 theta2)
  double omega_k = 0.0;  // dressed boson frequency, equals sqrt(omega^2 - 4 theta1 theta2)
  double omega_l = 0.0;  // dressed rotating coupling, >= 0 by convention
  double shift = 0.0;    // additive constant, -delta/2
  double omega0 = 0.0;   // bare J_z frequency, carried for the block solver
};

// Computes the reduction from (omega, theta1, theta2, alpha, beta).
// Requires theta1*theta2 > 0 and alpha*beta > 0; throws numerical_error when
// omega^2 <= 4*theta1*theta2 (spectral collapse, no real rapidity) or when the
// kept branch still leaves |tanh theta_b| >= 1 (only possible for omega < 0).
BogoliubovReduction reduce(const ModelParams& p);

// Squeeze-free reduction for the rotating-wave family theta1 = theta2 = 0,
// gamma = delta = 0. omega_l = sqrt(alpha*beta), which may be zero.
BogoliubovReduction trivial_reduction(const ModelParams& p);

// Counter-rotating couplings that the squeeze cannot remove unless
//   gamma = alpha*delta_B/(2 theta2), delta = beta*delta_B/(2 theta1),
//   xi3 = xi1 + xi2,
// with delta_B the reduction's delta. Returns that triple.
struct TCCompletion {
  double gamma = 0.0;
  double delta = 0.0;
  double xi3 = 0.0;
};
TCCompletion tc_constraint(const ModelParams& p);
// Convenience: same parameters with (gamma, delta, xi3) overwritten so the
// counter-rotating terms cancel.
ModelParams with_tc_constraint(ModelParams p);

// Coefficient of J_- b in the transformed image; vanishes exactly on the
// constraint surface above.
complex counter_rotating_coefficient(const ModelParams& p, const BogoliubovReduction& r);

// One eigenvalue block of the commuting pair (K, L), K = b^dag b + J_z.
struct TCBlockSolution {
  double k_value = 0.0;
  std::vector<double> eigenvalues;  // of the transformed Hamiltonian, ascending
};

// Solves every block k = -j .. k_max. Block dimension is min(2j+1, k+j+1);
// within a block L is tridiagonal in the spin ladder and the phases gauge away.
std::vector<TCBlockSolution> exact_spectrum(const BogoliubovReduction& r, double j,
                                            int k_max);
std::vector<double> flatten_spectrum(const std::vector<TCBlockSolution>& blocks);

// E_n = -omega/2 + sqrt(omega^2 - 4 theta1 theta2) (n + 1/2), n = 0..n_max.
std::vector<double> swanson_spectrum(double omega, double theta1, double theta2,
                                     int n_max);

}  // namespace pdicke
