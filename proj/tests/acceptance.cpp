// Acceptance gate: every release criterion in one binary, one printed line
// per criterion. Exits nonzero if any line fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "pdicke/exact.hpp"
#include "pdicke/metric.hpp"
#include "pdicke/qpt.hpp"
#include "pdicke/spectral.hpp"

using namespace pdicke;

namespace {

int failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail) {
  std::printf("criterion %d  %-32s %s  %s\n", idx, name, pass ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[200];
  std::snprintf(buf, sizeof(buf), pattern, a, b, c);
  return buf;
}

// Valid parameter sets built from the dressing exponents, so the balance
// condition holds by construction. Pair ratios stay log-uniform in [e-2, e2],
// magnitudes too; pairs drop out on fixed residue patterns for case variety.
std::vector<ModelParams> random_valid_sets() {
  std::mt19937_64 rng(20260816ull);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  auto log_uniform = [&] { return std::exp(4.0 * unif(rng) - 2.0); };
  const double spins[] = {0.5, 1.0, 1.5, 2.0};
  std::vector<ModelParams> sets;
  sets.reserve(100);
  for (int i = 0; i < 100; ++i) {
    ModelParams p;
    p.omega = 1.0;
    p.omega0 = log_uniform();
    p.j = spins[i % 4];
    p.cutoff = 24;
    double cb = unif(rng) - 0.5;
    const double cs = unif(rng) - 0.5;
    const bool with_theta = (i % 3) != 0;
    const bool with_rot = (i % 4) != 1;
    const bool with_cr = (i % 5) != 2;
    // without two-photon terms the balance alpha*delta = beta*gamma pins the
    // boson exponent to zero whenever both spin pairs survive
    if (!with_theta && with_rot && with_cr) cb = 0.0;
    if (with_theta) {
      const double t = log_uniform();
      p.theta1 = t * std::exp(2.0 * cb);
      p.theta2 = t * std::exp(-2.0 * cb);
      p.xi1 = 6.283185307179586 * unif(rng);
    }
    if (with_rot) {
      const double s = log_uniform();
      p.alpha = s * std::exp(cs - cb);
      p.beta = s * std::exp(-(cs - cb));
      p.xi2 = 6.283185307179586 * unif(rng);
    }
    if (with_cr) {
      const double s = log_uniform();
      p.gamma = s * std::exp(cs + cb);
      p.delta = s * std::exp(-(cs + cb));
      p.xi3 = 6.283185307179586 * unif(rng);
    }
    sets.push_back(p);
  }
  return sets;
}

struct BulkResults {
  double residual = 0.0;  // pseudo-hermiticity, relative
  double reality = 0.0;   // max |Im eig H| / max(1, ||H||_max)
  double gap = 0.0;       // sorted-spectra distance / spectral scale
  double comm = 0.0;      // ||[H, Pi]||_max
  double parity = 0.0;    // worst |<Pi> -/+ 1| over all eigenstates
  int invalid = 0;
  double elapsed = 0.0;
};

BulkResults sweep_random_sets(const std::vector<ModelParams>& sets) {
  const auto t0 = clock_type::now();
  BulkResults r;
  for (const ModelParams& p : sets) {
    if (!validate(p).quasi_hermitian) {
      ++r.invalid;
      continue;
    }
    const SpinBosonBasis basis = basis_for(p);
    const ComplexMatrix h = build_H(p, basis);
    const MetricFactors mf = build_metric(p, basis);
    r.residual = std::max(r.residual, pseudo_hermiticity_residual(mf, h));

    const SpectralComparison sc = compare_spectra(p);
    r.reality = std::max(r.reality, sc.reality_defect / std::max(1.0, sc.h_norm));
    const double scale =
        std::max({1.0, std::abs(sc.spectrum_image.eigenvalues.front()),
                  std::abs(sc.spectrum_image.eigenvalues.back())});
    r.gap = std::max(r.gap, sc.max_pairwise_gap / scale);

    const ComplexMatrix pi = build_parity(basis);
    r.comm = std::max(r.comm, (h * pi - pi * h).max_norm());

    const EigenSolution sol = solve_eigensystem(p);
    for (std::size_t k = 0; k < basis.dim(); ++k) {
      complex num(0.0, 0.0), den(0.0, 0.0);
      for (std::size_t i = 0; i < basis.dim(); ++i) {
        const double w = mf.eta_diag[i] * std::norm(sol.states(i, k));
        num += w * pi(i, i);
        den += w;
      }
      r.parity = std::max(
          r.parity, std::abs(num / den - complex(double(sol.parity[k]), 0.0)));
    }
  }
  r.elapsed = seconds_since(t0);
  return r;
}

ComplexMatrix dense_kl_operator(const BogoliubovReduction& red, double xi2,
                                double j, int cutoff) {
  const SpinBosonBasis basis = SpinBosonBasis::make(j, cutoff);
  const ComplexMatrix is = ComplexMatrix::identity(basis.spin_dim());
  ComplexMatrix h = kron(boson_number(cutoff), is);
  h *= red.omega_k;
  ComplexMatrix split = kron(ComplexMatrix::identity(basis.boson_dim()),
                             spin_z(basis.two_j));
  split *= red.omega0;
  h += split;
  if (red.omega_l != 0.0) {
    ComplexMatrix ladder =
        kron(boson_annihilation(cutoff), spin_raising(basis.two_j));
    ladder *= red.omega_l * std::polar(1.0, -xi2);
    h += ladder;
    h += ladder.adjoint();
  }
  ComplexMatrix shift = ComplexMatrix::identity(basis.dim());
  shift *= red.shift;
  h += shift;
  h.set_tag(symmetry_tag::hermitian);
  return h;
}

void criterion_3() {
  const auto t0 = clock_type::now();
  const ModelParams p = swanson(2.0, 0.5, 0.5, 0.0, 80);
  const ComplexMatrix h = build_H(p, basis_for(p));
  const Spectrum s = diagonalize_general(h, {.with_vectors = false});
  double worst = 0.0;
  for (int n = 0; n < 20; ++n) {
    const double target = -1.0 + std::sqrt(3.0) * (n + 0.5);
    worst = std::max(worst, std::abs(s.eigenvalues[n] - complex(target, 0.0)));
  }
  const double elapsed = seconds_since(t0);
  report(3, "swanson ladder oracle", worst <= 1e-6 && elapsed < 5.0,
         fmt("max level error=%.2e t=%.2fs", worst, elapsed));
}

void criterion_4() {
  ModelParams base;
  base.omega = 2.0;
  base.omega0 = 0.9;
  base.theta1 = 0.4;
  base.theta2 = 0.2;
  base.alpha = 0.9;
  base.beta = 0.45;
  base.xi1 = 0.3;
  base.xi2 = -0.7;

  double worst_level = 0.0;
  double worst_closure = 0.0;
  bool shapes_ok = true;
  for (double j : {0.5, 1.0, 2.0}) {
    ModelParams p = base;
    p.j = j;
    const int k_max = 12;
    p.cutoff = k_max + static_cast<int>(std::lround(2.0 * j)) + 4;
    const ModelParams q = with_tc_constraint(p);
    const BogoliubovReduction red = reduce(q);
    worst_closure =
        std::max(worst_closure, std::abs(counter_rotating_coefficient(q, red)));

    const auto blocks = exact_spectrum(red, j, k_max);
    const ComplexMatrix dense = dense_kl_operator(red, q.xi2, j, p.cutoff);
    const SpinBosonBasis basis = SpinBosonBasis::make(j, p.cutoff);
    for (const auto& block : blocks) {
      const int ell = static_cast<int>(std::lround(block.k_value + j));
      std::vector<std::size_t> members;
      for (std::size_t idx = 0; idx < basis.dim(); ++idx) {
        const auto st = basis.state(idx);
        if (st.n + st.m == ell) members.push_back(idx);
      }
      if (members.size() != block.eigenvalues.size()) {
        shapes_ok = false;
        continue;
      }
      ComplexMatrix sub(members.size(), members.size(), symmetry_tag::hermitian);
      for (std::size_t rr = 0; rr < members.size(); ++rr)
        for (std::size_t cc = 0; cc < members.size(); ++cc)
          sub(rr, cc) = dense(members[rr], members[cc]);
      const Spectrum ss = diagonalize_hermitian(sub, {.with_vectors = false});
      for (std::size_t i = 0; i < members.size(); ++i)
        worst_level =
            std::max(worst_level, std::abs(ss.eigenvalues[i].real() -
                                           block.eigenvalues[i]));
    }
  }
  report(4, "exact block spectra",
         shapes_ok && worst_level <= 1e-9 && worst_closure <= 1e-12,
         fmt("level error=%.2e closure=%.2e", worst_level, worst_closure));
}

void criterion_5() {
  const auto t0 = clock_type::now();
  const ConvergenceSettings settings{16, 256, 1e-8};
  double err[3] = {0.0, 0.0, 0.0};
  bool clean = true;
  const double js[3] = {4.0, 8.0, 16.0};
  for (int i = 0; i < 3; ++i) {
    const ScanRecord rec =
        finite_j_order_params(standard_dicke(1.0, js[i], 16), settings);
    clean = clean && rec.converged && rec.error.empty();
    err[i] = std::abs(rec.jz_over_j - (-0.25));
  }
  const double elapsed = seconds_since(t0);
  report(5, "dicke finite-size scaling",
         clean && err[2] < 0.1 && err[2] < err[1] && err[1] < err[0] &&
             elapsed < 120.0,
         fmt("err(j=4,8,16)=%.4f/%.4f/%.4f", err[0], err[1], err[2]) +
             fmt(" t=%.0fs", elapsed));
}

void criterion_6() {
  SweepSpec hermitian;
  hermitian.param = "lambda2";
  hermitian.start = 0.4;
  hermitian.stop = 1.2;
  hermitian.steps = 3;
  hermitian.j_list = {1.0, 2.0, 4.0};

  SweepSpec skew = hermitian;
  skew.param = "lambda2_nh";
  skew.base.alpha = 2.0;
  skew.base.beta = 0.5;
  skew.base.gamma = 2.0;
  skew.base.delta = 0.5;

  const ConvergenceSettings settings{16, 128, 1e-9};
  const auto a = scan(hermitian, settings);
  const auto b = scan(skew, settings);
  double worst = 0.0;
  bool ok = a.size() == b.size() && !a.empty();
  for (std::size_t i = 0; ok && i < a.size(); ++i) {
    ok = a[i].error.empty() && b[i].error.empty();
    worst = std::max({worst, std::abs(a[i].jz_over_j - b[i].jz_over_j),
                      std::abs(a[i].n_over_j - b[i].n_over_j),
                      std::abs(a[i].e0_over_j - b[i].e0_over_j)});
  }
  report(6, "non-hermitian dicke equivalence", ok && worst <= 1e-8,
         fmt("max record deviation=%.2e", worst));
}

void criterion_7() {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double l2 = 0.05 + 0.035 * i;
    const ModelParams p = standard_dicke(l2, 2.0, 16);
    const GeneralOrderParams g = analytic_order_params_general(p);
    const OrderParams d = analytic_order_params_dicke(1.0, 1.0, l2);
    worst = std::max({worst, std::abs(g.jz_over_j - d.jz_over_j),
                      std::abs(g.n_over_j - d.n_over_j)});
  }
  for (int i = 0; i < 100; ++i) {
    const double l1 = 0.1 + 0.05 * i;
    ModelParams p;
    p.omega = 1.3;
    p.omega0 = 0.7;
    p.j = 2.0;
    p.alpha = p.beta = l1 / 2.0;  // sqrt(2j) = 2
    const GeneralOrderParams g = analytic_order_params_general(p);
    const OrderParams t =
        analytic_order_params_tc(trivial_reduction(p), 0.7, l1);
    worst = std::max({worst, std::abs(g.jz_over_j - t.jz_over_j),
                      std::abs(g.n_over_j - t.n_over_j)});
  }
  report(7, "general criterion reduction", worst <= 1e-12,
         fmt("max formula deviation=%.2e", worst));
}

}  // namespace

int main() {
  const auto sets = random_valid_sets();
  const BulkResults bulk = sweep_random_sets(sets);

  report(1, "pseudo-hermiticity (100 sets)",
         bulk.invalid == 0 && bulk.residual <= 1e-10 &&
             bulk.reality <= 1e-7 && bulk.elapsed < 30.0,
         fmt("residual=%.2e reality=%.2e", bulk.residual, bulk.reality) +
             fmt(" invalid=%.0f t=%.1fs", double(bulk.invalid), bulk.elapsed));
  report(2, "similarity equivalence", bulk.invalid == 0 && bulk.gap <= 1e-7,
         fmt("relative spectral gap=%.2e", bulk.gap));
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  report(8, "parity conservation",
         bulk.invalid == 0 && bulk.comm == 0.0 && bulk.parity <= 1e-8,
         fmt("commutator=%.1e parity defect=%.2e", bulk.comm, bulk.parity));

  std::printf("%s\n",
              failures == 0 ? "all criteria passed" : "some criteria FAILED");
  return failures;
}
