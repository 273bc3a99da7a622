#pragma once

#include "pdicke/model.hpp"

namespace pdicke {

// Diagonal similarity transform rho = exp(c_boson n + c_spin m) on the |n, m>
// basis, stored as realized diagonals. rho H rho^{-1} is hermitian and
// eta = rho^2 is the positive metric; eta_diag[i] = rho_diag[i]^2 exactly.
struct MetricFactors {
  double c_boson = 0.0;
  double c_spin = 0.0;  // doubles as the spin dressing rapidity
  std::vector<double> rho_diag;
  std::vector<double> eta_diag;
};

// Solves the dressing conditions
//   e^{4 c_boson} = theta1/theta2,
//   e^{2(c_spin - c_boson)} = alpha/beta,
//   e^{2(c_spin + c_boson)} = gamma/delta
// for whichever coupling pairs are present and realizes the diagonals.
// Throws validation_error on invalid parameters and numerical_error when an
// exponent magnitude would exceed 600 (rho leaving double range).
MetricFactors build_metric(const ModelParams& p, const SpinBosonBasis& basis);

// Unchecked construction from given exponents; for probing mismatched
// parameter/metric combinations.
MetricFactors metric_from_exponents(double c_boson, double c_spin,
                                    const SpinBosonBasis& basis);

// rho M rho^{-1} as the entrywise scaling M[i][k] * rho_diag[i] / rho_diag[k].
ComplexMatrix transform(const MetricFactors& mf, const ComplexMatrix& m);

// max-norm of (eta H - H^dag eta) divided by max-norm of (eta H); small values
// certify H^dag = eta H eta^{-1}.
double pseudo_hermiticity_residual(const MetricFactors& mf, const ComplexMatrix& h);

// Spin and boson operators conjugated by rho^{-1}; each is hermitian with
// respect to eta and the su(2) algebra survives the dressing.
struct DressedOps {
  ComplexMatrix jx, jy, jz;
  ComplexMatrix a, a_dag;
};
DressedOps dressed_observables(const MetricFactors& mf, const SpinBosonBasis& basis);

// <v, eta X v> / <v, eta v>; total on unnormalized solver output. Throws on a
// zero state.
complex expectation(const MetricFactors& mf, const ComplexMatrix& op,
                    std::span<const complex> state);

}  // namespace pdicke
