#pragma once

#include <functional>

#include "pdicke/basis.hpp"

namespace pdicke {

// Couplings of the non-hermitian Dicke-type Hamiltonian
//
//   H = omega a^dag a + theta1 e^{i xi1} a^2 + theta2 e^{-i xi1} a^dag^2
//     + alpha e^{i xi2} J_- a^dag + beta e^{-i xi2} J_+ a
//     + gamma e^{i xi3} J_- a + delta e^{-i xi3} J_+ a^dag
//     + omega0 J_z
//
// plus the truncation data (spin j, boson cutoff).
struct ModelParams {
  double omega = 1.0;
  double omega0 = 1.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double xi1 = 0.0;
  double xi2 = 0.0;
  double xi3 = 0.0;
  double j = 0.5;
  int cutoff = 16;
};

// Which couplings survive; drives the metric exponents.
enum class CaseTag { hermitian, boson_only, no_theta, no_gamma_delta, no_alpha_beta, full };
const char* to_string(CaseTag tag);

struct ValidationReport {
  bool quasi_hermitian = false;
  bool positivity_ok = false;
  CaseTag case_tag = CaseTag::hermitian;
  std::vector<std::string> violated_conditions;
};

// Parameter validation failed where validity is required.
class validation_error : public std::runtime_error {
public:
  explicit validation_error(const std::string& msg,
                            std::vector<std::string> conditions = {})
      : std::runtime_error(msg), conditions(std::move(conditions)) {}
  std::vector<std::string> conditions;
};

// Checks the quasi-hermiticity constraint (alpha*delta*theta1 ==
// beta*gamma*theta2, or alpha*delta == beta*gamma when both thetas vanish)
// and the positivity of the coupling ratios. Reports, never throws.
ValidationReport validate(const ModelParams& p);

SpinBosonBasis basis_for(const ModelParams& p);

// The Hamiltonian above on the truncated product space. Tagged hermitian
// exactly when theta1 == theta2, alpha == beta, gamma == delta.
ComplexMatrix build_H(const ModelParams& p, const SpinBosonBasis& basis);

// Hermitian image: same operator content with every coupling pair replaced
// by its (signed) geometric mean. Equals rho H rho^{-1} for the metric of
// build_metric. Requires a valid parameter set.
ComplexMatrix build_H_image(const ModelParams& p, const SpinBosonBasis& basis);

// Stream nonzero entries of H (or the image) as (row, col, value) without
// materializing the full matrix; used for the parity-sector solvers.
using EntrySink = std::function<void(std::size_t, std::size_t, complex)>;
void for_each_hamiltonian_entry(const ModelParams& p, const SpinBosonBasis& basis,
                                bool image, const EntrySink& sink);

// Named parameter families.
ModelParams hermitian_dicke(double omega, double omega0, double theta,
                            double g_rot, double g_cr, double j, int cutoff);
// alpha = beta = gamma = delta = lambda2 / sqrt(2j), no two-photon terms.
ModelParams standard_dicke(double lambda2, double j, int cutoff,
                           double omega = 1.0, double omega0 = 1.0);
// gamma = sign*alpha, delta = sign*beta, sign = +-1; similar to the standard
// Dicke model at lambda2 = sqrt(2j * alpha * beta).
ModelParams nonhermitian_dicke(double alpha, double beta, int sign, double j,
                               int cutoff, double omega = 1.0, double omega0 = 1.0);
ModelParams tavis_cummings(double alpha, double beta, double j, int cutoff,
                           double omega = 1.0, double omega0 = 1.0);
ModelParams jaynes_cummings(double alpha, double beta, int cutoff,
                            double omega = 1.0, double omega0 = 1.0);
// Pure boson model with two-photon terms only (omega0 = couplings = 0, j = 0).
ModelParams swanson(double omega, double theta1, double theta2, double xi1, int cutoff);

}  // namespace pdicke
