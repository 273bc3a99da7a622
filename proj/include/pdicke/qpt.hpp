#pragma once

#include <limits>

#include "pdicke/exact.hpp"

namespace pdicke {

// Critical couplings and the dimensionless transition parameter mu in the
// thermodynamic limit. lambda3/lambda4 are the collective couplings
// sqrt(2j alpha beta) and sqrt(2j gamma delta); the transition sits at mu = 1.
struct CriticalData {
  double lambda1_c = 0.0;  // sqrt(Omega omega0), rotating-wave family
  double lambda2_c = 0.0;  // sqrt(omega omega0)/2, Dicke family
  double lambda3 = 0.0;
  double lambda4 = 0.0;
  double mu = std::numeric_limits<double>::infinity();
};
CriticalData critical_data(const ModelParams& p);

struct OrderParams {
  double jz_over_j = -1.0;
  double n_over_j = 0.0;
};

// Thermodynamic-limit order parameters of the rotating-wave family in terms of
// the collective coupling lambda1 = sqrt(2j) * omega_l. The photon number is
// that of the squeezed mode b.
OrderParams analytic_order_params_tc(const BogoliubovReduction& red, double omega0,
                                     double lambda1);

// Standard Dicke order parameters above/below lambda2_c = sqrt(omega omega0)/2.
OrderParams analytic_order_params_dicke(double omega, double omega0, double lambda2);

// mu-form valid for the whole family; reduces to the Dicke formulas when the
// two-photon terms vanish and lambda3 = lambda4.
struct GeneralOrderParams {
  double jz_over_j = -1.0;
  double n_over_j = 0.0;
  double mu = std::numeric_limits<double>::infinity();
};
GeneralOrderParams analytic_order_params_general(const ModelParams& p);

// One sweep point: finite-j ground-state observables next to the analytic
// thermodynamic-limit values. A nonempty error marks a failed point; its
// numeric columns stay NaN.
struct ScanRecord {
  double coupling = std::numeric_limits<double>::quiet_NaN();
  double j = 0.0;
  int cutoff = 0;
  double jz_over_j = std::numeric_limits<double>::quiet_NaN();
  double n_over_j = std::numeric_limits<double>::quiet_NaN();
  double e0_over_j = std::numeric_limits<double>::quiet_NaN();
  double analytic_jz = std::numeric_limits<double>::quiet_NaN();
  double analytic_n = std::numeric_limits<double>::quiet_NaN();
  bool converged = false;
  std::string error;
};

// Adaptive cutoff ladder: solve at doubling cutoffs until the ground energy
// per spin moves by less than tol, starting from max(min_cutoff, p.cutoff).
struct ConvergenceSettings {
  int min_cutoff = 16;
  int max_cutoff = 512;
  double tol = 1e-8;
};

// Ground state of the hermitian image (parity-resolved, lowest eigenpair
// only), observables <Jz>/j and <a^dag a>/j from its diagonal amplitudes.
// Reaching the cutoff cap without convergence flags the record, never throws.
ScanRecord finite_j_order_params(const ModelParams& p,
                                 const ConvergenceSettings& s = {});

// Sweep description. param is either a ModelParams field name, "lambda2"
// (sets alpha=beta=gamma=delta=lambda2/sqrt(2j)), or "lambda2_nh" (rescales
// the base alpha:beta pair so sqrt(2j alpha beta) = lambda2 and mirrors it
// onto gamma, delta with the base gamma's sign).
struct SweepSpec {
  std::string param = "lambda2";
  double start = 0.0;
  double stop = 1.0;
  int steps = 2;
  std::vector<double> j_list;
  ModelParams base;
};

// Cartesian product of coupling grid and j list, coupling-major; invalid
// points become failed records and the sweep continues.
std::vector<ScanRecord> scan(const SweepSpec& sweep, const ConvergenceSettings& s = {});

}  // namespace pdicke
