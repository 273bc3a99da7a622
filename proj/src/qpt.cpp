#include "pdicke/qpt.hpp"

#include <algorithm>
#include <cmath>

#include "pdicke/spectral.hpp"

namespace pdicke {
namespace {

struct GroundObservables {
  double e0 = 0.0;
  double jz = 0.0;
  double n = 0.0;
  int cutoff = 0;
};

GroundObservables solve_point(const ModelParams& p) {
  const SpinBosonBasis basis = basis_for(p);
  const GroundState gs = ground_state_image(p);
  GroundObservables out;
  out.e0 = gs.energy;
  out.cutoff = p.cutoff;
  for (std::size_t idx = 0; idx < basis.dim(); ++idx) {
    const double w = std::norm(gs.image_state[idx]);
    if (w == 0.0) continue;
    const auto [nb, m] = basis.state(idx);
    out.jz += w * basis.jz_value(m);
    out.n += w * static_cast<double>(nb);
  }
  return out;
}

std::string join_conditions(const std::vector<std::string>& conditions) {
  if (conditions.empty()) return "invalid parameters";
  std::string out;
  for (const auto& c : conditions) {
    if (!out.empty()) out += "; ";
    out += c;
  }
  return out;
}

const char* const sweepable[] = {"lambda2", "lambda2_nh", "omega", "omega0",
                                 "theta1",  "theta2",     "alpha", "beta",
                                 "gamma",   "delta",      "xi1",   "xi2",
                                 "xi3"};

ModelParams apply_sweep(const SweepSpec& sw, double value, double j,
                        std::string* err) {
  ModelParams p = sw.base;
  p.j = j;
  const std::string& name = sw.param;
  if (name == "lambda2") {
    if (!(j > 0.0)) {
      *err = "lambda2 sweep needs j > 0";
      return p;
    }
    const double g = value / std::sqrt(2.0 * j);
    p.alpha = p.beta = p.gamma = p.delta = g;
  } else if (name == "lambda2_nh") {
    const double ab = sw.base.alpha * sw.base.beta;
    if (!(j > 0.0) || !(ab > 0.0)) {
      *err = "lambda2_nh sweep needs j > 0 and base alpha*beta > 0";
      return p;
    }
    const double scale = value / std::sqrt(2.0 * j * ab);
    const double sigma = sw.base.gamma < 0.0 ? -1.0 : 1.0;
    p.alpha = sw.base.alpha * scale;
    p.beta = sw.base.beta * scale;
    p.gamma = sigma * p.alpha;
    p.delta = sigma * p.beta;
  } else if (name == "omega") {
    p.omega = value;
  } else if (name == "omega0") {
    p.omega0 = value;
  } else if (name == "theta1") {
    p.theta1 = value;
  } else if (name == "theta2") {
    p.theta2 = value;
  } else if (name == "alpha") {
    p.alpha = value;
  } else if (name == "beta") {
    p.beta = value;
  } else if (name == "gamma") {
    p.gamma = value;
  } else if (name == "delta") {
    p.delta = value;
  } else if (name == "xi1") {
    p.xi1 = value;
  } else if (name == "xi2") {
    p.xi2 = value;
  } else if (name == "xi3") {
    p.xi3 = value;
  }
  return p;
}

}  // namespace

CriticalData critical_data(const ModelParams& p) {
  CriticalData cd;
  const double s2 = p.theta1 * p.theta2;
  const double r2 = p.omega * p.omega - 4.0 * s2;
  const double omega_k =
      r2 > 0.0 ? std::sqrt(r2) : std::numeric_limits<double>::quiet_NaN();
  cd.lambda1_c = std::sqrt(omega_k * p.omega0);
  cd.lambda2_c = 0.5 * std::sqrt(p.omega * p.omega0);
  const double two_j = 2.0 * p.j;
  cd.lambda3 = std::sqrt(two_j * p.alpha * p.beta);
  cd.lambda4 = std::sqrt(two_j * p.gamma * p.delta);
  const double sum = cd.lambda3 + cd.lambda4;
  if (sum != 0.0)
    cd.mu = p.omega0 * (p.omega + 2.0 * std::sqrt(s2)) / (sum * sum);
  return cd;
}

OrderParams analytic_order_params_tc(const BogoliubovReduction& red, double omega0,
                                     double lambda1) {
  OrderParams op;
  const double omk = red.omega_k;
  const double crit2 = omk * omega0;  // lambda1_c squared
  const double l2 = lambda1 * lambda1;
  if (l2 > crit2) {
    const double r = crit2 / l2;
    op.jz_over_j = -r;
    op.n_over_j = 0.5 * (1.0 - r * r) * l2 / (omk * omk);
  }
  return op;
}

OrderParams analytic_order_params_dicke(double omega, double omega0, double lambda2) {
  OrderParams op;
  const double crit2 = 0.25 * omega * omega0;  // lambda2_c squared
  const double l2 = lambda2 * lambda2;
  if (l2 > crit2) {
    const double r = crit2 / l2;
    op.jz_over_j = -r;
    op.n_over_j = (2.0 * l2 / (omega * omega)) * (1.0 - r * r);
  }
  return op;
}

GeneralOrderParams analytic_order_params_general(const ModelParams& p) {
  GeneralOrderParams op;
  const CriticalData cd = critical_data(p);
  op.mu = cd.mu;
  if (cd.mu < 1.0) {
    const double sum = cd.lambda3 + cd.lambda4;
    const double denom = p.omega + 2.0 * std::sqrt(p.theta1 * p.theta2);
    const double ratio = sum / denom;
    op.jz_over_j = -cd.mu;
    op.n_over_j = 0.5 * (1.0 - cd.mu * cd.mu) * ratio * ratio;
  }
  return op;
}

ScanRecord finite_j_order_params(const ModelParams& p, const ConvergenceSettings& s) {
  ScanRecord rec;
  rec.j = p.j;
  const ValidationReport report = validate(p);
  if (!report.quasi_hermitian) {
    rec.error = join_conditions(report.violated_conditions);
    return rec;
  }
  if (!(p.j > 0.0)) {
    rec.error = "order parameters need j > 0";
    return rec;
  }

  const GeneralOrderParams an = analytic_order_params_general(p);
  rec.analytic_jz = an.jz_over_j;
  rec.analytic_n = an.n_over_j;

  try {
    ModelParams q = p;
    q.cutoff = std::max(p.cutoff, s.min_cutoff);
    GroundObservables best = solve_point(q);
    bool converged = false;
    while (q.cutoff < s.max_cutoff) {
      q.cutoff = std::min(q.cutoff * 2, s.max_cutoff);
      const GroundObservables next = solve_point(q);
      const double move = std::abs(next.e0 - best.e0) / p.j;
      best = next;
      if (move < s.tol) {
        converged = true;
        break;
      }
    }
    rec.cutoff = best.cutoff;
    rec.jz_over_j = best.jz / p.j;
    rec.n_over_j = best.n / p.j;
    rec.e0_over_j = best.e0 / p.j;
    rec.converged = converged;
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  return rec;
}

std::vector<ScanRecord> scan(const SweepSpec& sweep, const ConvergenceSettings& s) {
  if (sweep.steps < 2) throw contract_error("sweep needs at least 2 steps");
  if (!(sweep.start < sweep.stop))
    throw contract_error("sweep start must lie below stop");
  if (sweep.j_list.empty()) throw contract_error("sweep needs a j list");
  if (!std::is_sorted(sweep.j_list.begin(), sweep.j_list.end()))
    throw contract_error("sweep j list must be ascending");
  if (std::none_of(std::begin(sweepable), std::end(sweepable),
                   [&](const char* n) { return sweep.param == n; }))
    throw contract_error("unknown sweep parameter: " + sweep.param);

  std::vector<ScanRecord> out;
  out.reserve(static_cast<std::size_t>(sweep.steps) * sweep.j_list.size());
  for (int i = 0; i < sweep.steps; ++i) {
    const double t = static_cast<double>(i) / (sweep.steps - 1);
    const double value = sweep.start * (1.0 - t) + sweep.stop * t;
    for (double j : sweep.j_list) {
      std::string err;
      const ModelParams p = apply_sweep(sweep, value, j, &err);
      ScanRecord rec;
      if (!err.empty()) {
        rec.j = j;
        rec.error = err;
      } else {
        rec = finite_j_order_params(p, s);
      }
      rec.coupling = value;
      out.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace pdicke
