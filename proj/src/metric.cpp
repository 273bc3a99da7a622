#include "pdicke/metric.hpp"

#include <cmath>

namespace pdicke {
namespace {

// Largest |exponent| of any rho entry before leaving double range.
constexpr double max_exponent = 600.0;

MetricFactors realize(double c_boson, double c_spin, const SpinBosonBasis& basis) {
  MetricFactors f;
  f.c_boson = c_boson;
  f.c_spin = c_spin;
  f.rho_diag.resize(basis.dim());
  f.eta_diag.resize(basis.dim());
  for (std::size_t idx = 0; idx < basis.dim(); ++idx) {
    const auto [n, m] = basis.state(idx);
    const double r = std::exp(c_boson * static_cast<double>(n) +
                              c_spin * static_cast<double>(m));
    f.rho_diag[idx] = r;
    f.eta_diag[idx] = r * r;
  }
  return f;
}

}  // namespace

MetricFactors build_metric(const ModelParams& p, const SpinBosonBasis& basis) {
  ValidationReport report = validate(p);
  if (!report.quasi_hermitian) {
    throw validation_error("parameters are not quasi-hermitian",
                           std::move(report.violated_conditions));
  }

  double cb = 0.0;
  double cs = 0.0;
  const bool have_theta = (p.theta1 != 0.0);
  const bool have_ab = (p.alpha != 0.0);
  const bool have_gd = (p.gamma != 0.0);

  if (have_theta && p.theta1 != p.theta2) cb = 0.25 * std::log(p.theta1 / p.theta2);

  if (have_ab && have_gd) {
    if (p.alpha * p.gamma != p.beta * p.delta)
      cs = 0.25 * std::log((p.alpha * p.gamma) / (p.beta * p.delta));
  } else if (have_ab) {
    cs = cb;
    if (p.alpha != p.beta) cs += 0.5 * std::log(p.alpha / p.beta);
  } else if (have_gd) {
    cs = -cb;
    if (p.gamma != p.delta) cs += 0.5 * std::log(p.gamma / p.delta);
  }

  // Exponent extremes sit at the corners of the (n, m) rectangle.
  const double en = cb * static_cast<double>(p.cutoff);
  const double em = cs * 2.0 * p.j;
  const double worst = std::max({std::abs(en), std::abs(em), std::abs(en + em)});
  if (worst > max_exponent) {
    throw numerical_error(
        "metric entries would overflow; reduce the cutoff or the coupling asymmetry");
  }
  return realize(cb, cs, basis);
}

MetricFactors metric_from_exponents(double c_boson, double c_spin,
                                    const SpinBosonBasis& basis) {
  return realize(c_boson, c_spin, basis);
}

ComplexMatrix transform(const MetricFactors& mf, const ComplexMatrix& m) {
  if (m.rows() != mf.rho_diag.size() || m.cols() != mf.rho_diag.size())
    throw contract_error("transform: shape mismatch");
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k)
      out(i, k) = m(i, k) * (mf.rho_diag[i] / mf.rho_diag[k]);
  return out;
}

double pseudo_hermiticity_residual(const MetricFactors& mf, const ComplexMatrix& h) {
  if (h.rows() != mf.eta_diag.size() || h.cols() != mf.eta_diag.size())
    throw contract_error("pseudo_hermiticity_residual: shape mismatch");
  double defect = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    for (std::size_t k = 0; k < h.cols(); ++k) {
      const complex lhs = mf.eta_diag[i] * h(i, k);
      const complex rhs = std::conj(h(k, i)) * mf.eta_diag[k];
      defect = std::max(defect, std::abs(lhs - rhs));
      scale = std::max(scale, std::abs(lhs));
    }
  }
  if (scale == 0.0) return 0.0;
  return defect / scale;
}

DressedOps dressed_observables(const MetricFactors& mf, const SpinBosonBasis& basis) {
  const SpinOps spin = build_spin_ops(basis);
  const BosonOps boson = build_boson_ops(basis);

  const complex half(0.5, 0.0);
  const complex half_over_i(0.0, -0.5);
  const ComplexMatrix jx = half * (spin.j_plus + spin.j_minus);
  const ComplexMatrix jy = half_over_i * (spin.j_plus - spin.j_minus);

  const double ch = std::cosh(mf.c_spin);
  const double sh = std::sinh(mf.c_spin);

  DressedOps out{
      /*jx=*/complex(ch, 0.0) * jx + complex(0.0, -sh) * jy,
      /*jy=*/complex(ch, 0.0) * jy + complex(0.0, sh) * jx,
      /*jz=*/spin.j_z,
      /*a=*/complex(std::exp(mf.c_boson), 0.0) * boson.a,
      /*a_dag=*/complex(std::exp(-mf.c_boson), 0.0) * boson.a_dag,
  };
  return out;
}

complex expectation(const MetricFactors& mf, const ComplexMatrix& op,
                    std::span<const complex> state) {
  if (mf.eta_diag.size() != state.size() || op.rows() != state.size())
    throw contract_error("expectation: dimension mismatch");
  const std::vector<complex> xv = op.apply(state);
  complex num(0.0, 0.0);
  double den = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    num += std::conj(state[i]) * mf.eta_diag[i] * xv[i];
    den += mf.eta_diag[i] * std::norm(state[i]);
  }
  if (den == 0.0) throw numerical_error("expectation: state has zero eta norm");
  return num / den;
}

}  // namespace pdicke
