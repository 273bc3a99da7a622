#include "pdicke/model.hpp"

#include <cmath>

namespace pdicke {
namespace {

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

// Signed geometric mean of a coupling pair. The x == y shortcut keeps the
// hermitian limit bit-exact instead of sqrt(x*x)-exact.
double pair_root(double x, double y) {
  if (x == y) return x;
  return sign_of(x) * std::sqrt(x * y);
}

struct Couplings {
  double theta1, theta2, alpha, beta, gamma, delta;
};

Couplings plain_couplings(const ModelParams& p) {
  return {p.theta1, p.theta2, p.alpha, p.beta, p.gamma, p.delta};
}

Couplings image_couplings(const ModelParams& p) {
  const double st = pair_root(p.theta1, p.theta2);
  const double sa = pair_root(p.alpha, p.beta);
  const double sg = pair_root(p.gamma, p.delta);
  return {st, st, sa, sa, sg, sg};
}

bool all_pairs_equal(const Couplings& c) {
  return c.theta1 == c.theta2 && c.alpha == c.beta && c.gamma == c.delta;
}

bool all_couplings_zero(const Couplings& c) {
  return c.theta1 == 0.0 && c.theta2 == 0.0 && c.alpha == 0.0 &&
         c.beta == 0.0 && c.gamma == 0.0 && c.delta == 0.0;
}

// H += coeff * kron(B, S); skips structural zeros in either factor.
void accumulate_kron(ComplexMatrix& H, complex coeff, const ComplexMatrix& B,
                     const ComplexMatrix& S) {
  if (coeff == complex(0.0, 0.0)) return;
  const std::size_t sd = S.rows();
  for (std::size_t nb = 0; nb < B.rows(); ++nb) {
    for (std::size_t mb = 0; mb < B.cols(); ++mb) {
      const complex bv = B(nb, mb);
      if (bv == complex(0.0, 0.0)) continue;
      const complex cb = coeff * bv;
      for (std::size_t ns = 0; ns < sd; ++ns) {
        for (std::size_t ms = 0; ms < sd; ++ms) {
          const complex sv = S(ns, ms);
          if (sv == complex(0.0, 0.0)) continue;
          H(nb * sd + ns, mb * sd + ms) += cb * sv;
        }
      }
    }
  }
}

void assemble(ComplexMatrix& H, const ModelParams& p, const SpinBosonBasis& basis,
              const Couplings& c) {
  const ComplexMatrix a = boson_annihilation(basis.boson_dim() - 1);
  const ComplexMatrix a_dag = a.adjoint();
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a2_dag = a2.adjoint();
  const ComplexMatrix jp = spin_raising(basis.two_j);
  const ComplexMatrix jm = jp.adjoint();

  for (std::size_t idx = 0; idx < basis.dim(); ++idx) {
    const auto [n, m] = basis.state(idx);
    H(idx, idx) += p.omega * static_cast<double>(n) + p.omega0 * basis.jz_value(m);
  }
  const ComplexMatrix spin_eye = ComplexMatrix::identity(basis.spin_dim());
  accumulate_kron(H, c.theta1 * std::polar(1.0, p.xi1), a2, spin_eye);
  accumulate_kron(H, c.theta2 * std::polar(1.0, -p.xi1), a2_dag, spin_eye);
  accumulate_kron(H, c.alpha * std::polar(1.0, p.xi2), a_dag, jm);
  accumulate_kron(H, c.beta * std::polar(1.0, -p.xi2), a, jp);
  accumulate_kron(H, c.gamma * std::polar(1.0, p.xi3), a, jm);
  accumulate_kron(H, c.delta * std::polar(1.0, -p.xi3), a_dag, jp);
}

ComplexMatrix build(const ModelParams& p, const SpinBosonBasis& basis,
                    const Couplings& c) {
  ComplexMatrix H(basis.dim(), basis.dim(), symmetry_tag::general);
  assemble(H, p, basis, c);
  if (all_couplings_zero(c))
    H.set_tag(symmetry_tag::diagonal);
  else if (all_pairs_equal(c))
    H.set_tag(symmetry_tag::hermitian);
  return H;
}

std::string pair_name(const char* x, const char* y) {
  return std::string(x) + "/" + y;
}

}  // namespace

const char* to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::hermitian: return "hermitian";
    case CaseTag::boson_only: return "boson_only";
    case CaseTag::no_theta: return "no_theta";
    case CaseTag::no_gamma_delta: return "no_gamma_delta";
    case CaseTag::no_alpha_beta: return "no_alpha_beta";
    case CaseTag::full: return "full";
  }
  return "unknown";
}

ValidationReport validate(const ModelParams& p) {
  ValidationReport r;
  auto& bad = r.violated_conditions;

  const double vals[] = {p.omega, p.omega0, p.theta1, p.theta2, p.alpha, p.beta,
                         p.gamma, p.delta, p.xi1,   p.xi2,   p.xi3,  p.j};
  for (double v : vals) {
    if (!std::isfinite(v)) {
      bad.push_back("all parameters finite");
      return r;
    }
  }

  bool basis_ok = true;
  const double two_j = 2.0 * p.j;
  if (p.j < 0.0 || std::abs(two_j - std::round(two_j)) > 1e-9) {
    bad.push_back("2*j must be a nonnegative integer");
    basis_ok = false;
  }
  if (p.cutoff < 0) {
    bad.push_back("cutoff must be nonnegative");
    basis_ok = false;
  }

  auto check_pair = [&bad](double x, double y, const char* nx, const char* ny) {
    const bool zx = (x == 0.0), zy = (y == 0.0);
    if (zx && zy) return true;
    if (zx != zy) {
      bad.push_back(pair_name(nx, ny) + " must vanish together or not at all");
      return false;
    }
    if (x * y < 0.0) {
      bad.push_back(pair_name(nx, ny) + " must be positive");
      return false;
    }
    return true;
  };
  bool pos = true;
  pos &= check_pair(p.theta1, p.theta2, "theta1", "theta2");
  pos &= check_pair(p.alpha, p.beta, "alpha", "beta");
  pos &= check_pair(p.gamma, p.delta, "gamma", "delta");
  r.positivity_ok = pos;

  const bool have_theta = (p.theta1 != 0.0 || p.theta2 != 0.0);
  const double defect = have_theta
                            ? p.alpha * p.delta * p.theta1 - p.beta * p.gamma * p.theta2
                            : p.alpha * p.delta - p.beta * p.gamma;
  const bool constraint_ok = std::abs(defect) <= 1e-12;
  if (!constraint_ok) {
    bad.push_back(have_theta
                      ? "alpha*delta*theta1 == beta*gamma*theta2 (tol 1e-12)"
                      : "alpha*delta == beta*gamma (tol 1e-12)");
  }

  r.quasi_hermitian = basis_ok && pos && constraint_ok;

  const bool have_ab = (p.alpha != 0.0 || p.beta != 0.0);
  const bool have_gd = (p.gamma != 0.0 || p.delta != 0.0);
  if (p.theta1 == p.theta2 && p.alpha == p.beta && p.gamma == p.delta)
    r.case_tag = CaseTag::hermitian;
  else if (!have_ab && !have_gd)
    r.case_tag = CaseTag::boson_only;
  else if (have_ab && !have_gd)
    r.case_tag = CaseTag::no_gamma_delta;
  else if (!have_ab && have_gd)
    r.case_tag = CaseTag::no_alpha_beta;
  else if (!have_theta)
    r.case_tag = CaseTag::no_theta;
  else
    r.case_tag = CaseTag::full;
  return r;
}

SpinBosonBasis basis_for(const ModelParams& p) {
  return SpinBosonBasis::make(p.j, p.cutoff);
}

ComplexMatrix build_H(const ModelParams& p, const SpinBosonBasis& basis) {
  return build(p, basis, plain_couplings(p));
}

ComplexMatrix build_H_image(const ModelParams& p, const SpinBosonBasis& basis) {
  ValidationReport report = validate(p);
  if (!report.quasi_hermitian) {
    throw validation_error("parameters are not quasi-hermitian",
                           std::move(report.violated_conditions));
  }
  return build(p, basis, image_couplings(p));
}

void for_each_hamiltonian_entry(const ModelParams& p, const SpinBosonBasis& basis,
                                bool image, const EntrySink& sink) {
  const Couplings c = image ? image_couplings(p) : plain_couplings(p);
  if (image) {
    ValidationReport report = validate(p);
    if (!report.quasi_hermitian) {
      throw validation_error("parameters are not quasi-hermitian",
                             std::move(report.violated_conditions));
    }
  }

  for (std::size_t idx = 0; idx < basis.dim(); ++idx) {
    const auto [n, m] = basis.state(idx);
    const double d = p.omega * static_cast<double>(n) + p.omega0 * basis.jz_value(m);
    if (d != 0.0) sink(idx, idx, complex(d, 0.0));
  }

  const ComplexMatrix a = boson_annihilation(basis.boson_dim() - 1);
  const ComplexMatrix a_dag = a.adjoint();
  const ComplexMatrix a2 = a * a;
  const ComplexMatrix a2_dag = a2.adjoint();
  const ComplexMatrix jp = spin_raising(basis.two_j);
  const ComplexMatrix jm = jp.adjoint();
  const ComplexMatrix spin_eye = ComplexMatrix::identity(basis.spin_dim());

  auto emit = [&](complex coeff, const ComplexMatrix& B, const ComplexMatrix& S) {
    if (coeff == complex(0.0, 0.0)) return;
    const std::size_t sd = S.rows();
    for (std::size_t nb = 0; nb < B.rows(); ++nb) {
      for (std::size_t mb = 0; mb < B.cols(); ++mb) {
        const complex bv = B(nb, mb);
        if (bv == complex(0.0, 0.0)) continue;
        const complex cb = coeff * bv;
        for (std::size_t ns = 0; ns < sd; ++ns) {
          for (std::size_t ms = 0; ms < sd; ++ms) {
            const complex sv = S(ns, ms);
            if (sv == complex(0.0, 0.0)) continue;
            sink(nb * sd + ns, mb * sd + ms, cb * sv);
          }
        }
      }
    }
  };
  emit(c.theta1 * std::polar(1.0, p.xi1), a2, spin_eye);
  emit(c.theta2 * std::polar(1.0, -p.xi1), a2_dag, spin_eye);
  emit(c.alpha * std::polar(1.0, p.xi2), a_dag, jm);
  emit(c.beta * std::polar(1.0, -p.xi2), a, jp);
  emit(c.gamma * std::polar(1.0, p.xi3), a, jm);
  emit(c.delta * std::polar(1.0, -p.xi3), a_dag, jp);
}

ModelParams hermitian_dicke(double omega, double omega0, double theta,
                            double g_rot, double g_cr, double j, int cutoff) {
  ModelParams p;
  p.omega = omega;
  p.omega0 = omega0;
  p.theta1 = p.theta2 = theta;
  p.alpha = p.beta = g_rot;
  p.gamma = p.delta = g_cr;
  p.j = j;
  p.cutoff = cutoff;
  return p;
}

ModelParams standard_dicke(double lambda2, double j, int cutoff, double omega,
                           double omega0) {
  if (j <= 0.0) throw contract_error("standard_dicke requires j > 0");
  const double g = lambda2 / std::sqrt(2.0 * j);
  return hermitian_dicke(omega, omega0, 0.0, g, g, j, cutoff);
}

ModelParams nonhermitian_dicke(double alpha, double beta, int sign, double j,
                               int cutoff, double omega, double omega0) {
  if (sign != 1 && sign != -1) throw contract_error("sign must be +1 or -1");
  ModelParams p;
  p.omega = omega;
  p.omega0 = omega0;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = sign * alpha;
  p.delta = sign * beta;
  p.j = j;
  p.cutoff = cutoff;
  return p;
}

ModelParams tavis_cummings(double alpha, double beta, double j, int cutoff,
                           double omega, double omega0) {
  ModelParams p;
  p.omega = omega;
  p.omega0 = omega0;
  p.alpha = alpha;
  p.beta = beta;
  p.j = j;
  p.cutoff = cutoff;
  return p;
}

ModelParams jaynes_cummings(double alpha, double beta, int cutoff, double omega,
                            double omega0) {
  return tavis_cummings(alpha, beta, 0.5, cutoff, omega, omega0);
}

ModelParams swanson(double omega, double theta1, double theta2, double xi1,
                    int cutoff) {
  ModelParams p;
  p.omega = omega;
  p.omega0 = 0.0;
  p.theta1 = theta1;
  p.theta2 = theta2;
  p.xi1 = xi1;
  p.j = 0.0;
  p.cutoff = cutoff;
  return p;
}

}  // namespace pdicke
