#include "pdicke/exact.hpp"

#include <algorithm>
#include <cmath>

namespace pdicke {
namespace {

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

int require_spin(double j) {
  const double two_j = 2.0 * j;
  const int tj = static_cast<int>(std::lround(two_j));
  if (j < 0.0 || std::abs(two_j - tj) > 1e-9)
    throw contract_error("2*j must be a nonnegative integer");
  return tj;
}

}  // namespace

BogoliubovReduction reduce(const ModelParams& p) {
  const double s2 = p.theta1 * p.theta2;
  if (!(s2 > 0.0))
    throw validation_error("reduction requires theta1*theta2 > 0",
                           {"theta1*theta2 > 0"});
  if (p.alpha * p.beta < 0.0)
    throw validation_error("reduction requires alpha*beta >= 0",
                           {"alpha*beta >= 0"});
  const double r2 = p.omega * p.omega - 4.0 * s2;
  if (!(r2 > 0.0)) {
    throw numerical_error(
        "spectral collapse: omega^2 <= 4*theta1*theta2 leaves no real rapidity");
  }
  const double root = std::sqrt(r2);

  BogoliubovReduction red;
  red.phi = -p.xi1;
  // delta = omega - root, in the cancellation-free form 4 s2 / (omega + root)
  red.delta = 4.0 * s2 / (p.omega + root);
  const double s_theta = sign_of(p.theta1) * std::sqrt(s2);
  const double tanh_b = red.delta / (2.0 * s_theta);
  if (!(std::abs(tanh_b) < 1.0))
    throw numerical_error("squeeze rapidity undefined on this branch");
  red.theta_b = std::atanh(tanh_b);
  red.shift = -0.5 * red.delta;
  const double denom = 4.0 * s2 - p.omega * red.delta;
  red.omega_k = r2 * red.delta / denom;
  red.omega_l = std::sqrt(p.alpha * p.beta * denom / (2.0 * s2));
  red.omega0 = p.omega0;
  return red;
}

BogoliubovReduction trivial_reduction(const ModelParams& p) {
  if (p.theta1 != 0.0 || p.theta2 != 0.0)
    throw contract_error("trivial_reduction requires theta1 = theta2 = 0");
  if (p.gamma != 0.0 || p.delta != 0.0) {
    throw validation_error(
        "counter-rotating couplings cannot cancel without a squeeze",
        {"gamma == 0", "delta == 0"});
  }
  if (p.alpha * p.beta < 0.0)
    throw validation_error("reduction requires alpha*beta >= 0", {"alpha*beta >= 0"});
  BogoliubovReduction red;
  red.omega_k = p.omega;
  red.omega_l = std::sqrt(p.alpha * p.beta);
  red.omega0 = p.omega0;
  return red;
}

TCCompletion tc_constraint(const ModelParams& p) {
  const BogoliubovReduction red = reduce(p);
  TCCompletion out;
  out.gamma = p.alpha * red.delta / (2.0 * p.theta2);
  out.delta = p.beta * red.delta / (2.0 * p.theta1);
  out.xi3 = p.xi1 + p.xi2;
  return out;
}

ModelParams with_tc_constraint(ModelParams p) {
  const TCCompletion c = tc_constraint(p);
  p.gamma = c.gamma;
  p.delta = c.delta;
  p.xi3 = c.xi3;
  return p;
}

complex counter_rotating_coefficient(const ModelParams& p,
                                     const BogoliubovReduction& r) {
  const double s_alpha = p.alpha == p.beta
                             ? p.alpha
                             : sign_of(p.alpha) * std::sqrt(p.alpha * p.beta);
  const double s_gamma = p.gamma == p.delta
                             ? p.gamma
                             : sign_of(p.gamma) * std::sqrt(p.gamma * p.delta);
  const complex from_rotating =
      -s_alpha * std::sinh(r.theta_b) * std::polar(1.0, p.xi1 + p.xi2);
  const complex from_counter = s_gamma * std::cosh(r.theta_b) * std::polar(1.0, p.xi3);
  return from_rotating + from_counter;
}

std::vector<TCBlockSolution> exact_spectrum(const BogoliubovReduction& r, double j,
                                            int k_max) {
  const int two_j = require_spin(j);
  std::vector<TCBlockSolution> blocks;
  const int n_blocks = static_cast<int>(std::floor(k_max + j)) + 1;
  for (int ell = 0; ell < n_blocks; ++ell) {
    TCBlockSolution block;
    block.k_value = static_cast<double>(ell) - j;
    const int dim = std::min(two_j + 1, ell + 1);
    block.eigenvalues.resize(dim);

    if (r.omega_l == 0.0) {
      for (int m = 0; m < dim; ++m) {
        const int n_b = ell - m;
        block.eigenvalues[m] = r.omega_k * n_b + r.omega0 * (m - j) + r.shift;
      }
      std::sort(block.eigenvalues.begin(), block.eigenvalues.end());
    } else {
      // L restricted to the block, phases gauged away: real symmetric tridiagonal
      ComplexMatrix lm(dim, dim, symmetry_tag::hermitian);
      const double c0 = (r.omega0 - r.omega_k) / r.omega_l;
      for (int m = 0; m < dim; ++m) {
        lm(m, m) = c0 * (m - j);
        if (m + 1 < dim) {
          const double v = std::sqrt(static_cast<double>(two_j - m) * (m + 1)) *
                           std::sqrt(static_cast<double>(ell - m));
          lm(m + 1, m) = v;
          lm(m, m + 1) = v;
        }
      }
      const Spectrum s = diagonalize_hermitian(lm, {.with_vectors = false});
      for (int m = 0; m < dim; ++m) {
        block.eigenvalues[m] =
            r.omega_k * block.k_value + r.omega_l * s.eigenvalues[m].real() + r.shift;
      }
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::vector<double> flatten_spectrum(const std::vector<TCBlockSolution>& blocks) {
  std::vector<double> all;
  for (const auto& b : blocks)
    all.insert(all.end(), b.eigenvalues.begin(), b.eigenvalues.end());
  std::sort(all.begin(), all.end());
  return all;
}

std::vector<double> swanson_spectrum(double omega, double theta1, double theta2,
                                     int n_max) {
  const double s2 = theta1 * theta2;
  if (s2 < 0.0)
    throw validation_error("theta1/theta2 must be positive", {"theta1*theta2 >= 0"});
  const double r2 = omega * omega - 4.0 * s2;
  if (!(r2 > 0.0)) {
    throw numerical_error(
        "spectral collapse: omega^2 <= 4*theta1*theta2 leaves no real rapidity");
  }
  const double root = std::sqrt(r2);
  std::vector<double> out;
  out.reserve(n_max >= 0 ? n_max + 1 : 0);
  for (int n = 0; n <= n_max; ++n)
    out.push_back(-0.5 * omega + root * (n + 0.5));
  return out;
}

}  // namespace pdicke
