#include <doctest.h>

#include <cmath>

#include "pdicke/metric.hpp"
#include "pdicke/spectral.hpp"

using namespace pdicke;

namespace {

ModelParams asymmetric_but_valid() {
  ModelParams p;
  p.omega = 1.2;
  p.omega0 = 0.8;
  p.alpha = 2.0;
  p.beta = 0.5;
  p.gamma = 2.0;
  p.delta = 0.5;
  p.xi2 = 0.6;
  p.xi3 = -0.2;
  p.j = 1.0;
  p.cutoff = 10;
  return p;
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("valid parameters give matching real spectra") {
  const ModelParams p = asymmetric_but_valid();
  const SpectralComparison sc = compare_spectra(p);
  CHECK(sc.params_valid);
  const std::size_t dim = basis_for(p).dim();
  REQUIRE(sc.spectrum_H.eigenvalues.size() == dim);
  REQUIRE(sc.spectrum_image.eigenvalues.size() == dim);
  CHECK(sc.reality_defect < 1e-8 * std::max(1.0, sc.h_norm));
  CHECK(sc.max_pairwise_gap <
        1e-8 * std::max(1.0, std::abs(sc.spectrum_image.eigenvalues.back())));
}

TEST_CASE("invalid parameters fall back to diagnostics") {
  ModelParams p;
  p.alpha = 1.0;
  p.beta = -1.0;
  p.j = 0.5;
  p.cutoff = 8;
  const SpectralComparison sc = compare_spectra(p);
  CHECK_FALSE(sc.params_valid);
  CHECK(std::isnan(sc.max_pairwise_gap));
  CHECK(sc.spectrum_image.eigenvalues.empty());
  CHECK(sc.spectrum_H.eigenvalues.size() == basis_for(p).dim());
}

TEST_CASE("broken symmetry shows up as complex eigenvalues") {
  ModelParams p;
  p.alpha = 5.0;
  p.beta = -5.0;
  p.j = 0.5;
  p.cutoff = 10;
  const SpectralComparison sc = compare_spectra(p);
  CHECK_FALSE(sc.params_valid);
  CHECK(sc.reality_defect > 1e-3);
}

TEST_CASE("eigensystem carries parity labels and an eta orthonormal frame") {
  const ModelParams p = asymmetric_but_valid();
  const SpinBosonBasis b = basis_for(p);
  const MetricFactors mf = build_metric(p, b);
  const EigenSolution sol = solve_eigensystem(p);
  REQUIRE(sol.eigenvalues.size() == b.dim());
  CHECK(std::is_sorted(sol.eigenvalues.begin(), sol.eigenvalues.end()));

  for (int s : sol.parity) CHECK(std::abs(s) == 1);

  // Gram matrix in the eta inner product is the identity
  double gram_defect = 0.0;
  for (std::size_t a = 0; a < b.dim(); ++a)
    for (std::size_t c = 0; c < b.dim(); ++c) {
      complex g(0, 0);
      for (std::size_t i = 0; i < b.dim(); ++i)
        g += std::conj(sol.states(i, a)) * mf.eta_diag[i] * sol.states(i, c);
      const double target = a == c ? 1.0 : 0.0;
      gram_defect = std::max(gram_defect, std::abs(g - complex(target, 0)));
    }
  CHECK(gram_defect < 1e-10);

  // columns really are eigenvectors of the original non-hermitian H
  const ComplexMatrix h = build_H(p, b);
  for (std::size_t k : {std::size_t(0), std::size_t(3), b.dim() - 1}) {
    const auto v = sol.states.column(k);
    const auto hv = h.apply(v);
    double defect = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
      defect = std::max(defect, std::abs(hv[i] - sol.eigenvalues[k] * v[i]));
    CHECK(defect < 1e-10 * std::max(1.0, h.max_norm()));
  }

  // parity labels are exact sector memberships
  const ComplexMatrix pi = build_parity(b);
  for (std::size_t k = 0; k < b.dim(); ++k) {
    const auto v = sol.states.column(k);
    complex num(0, 0), den(0, 0);
    for (std::size_t i = 0; i < b.dim(); ++i) {
      num += std::conj(v[i]) * mf.eta_diag[i] * pi(i, i) * v[i];
      den += std::conj(v[i]) * mf.eta_diag[i] * v[i];
    }
    CHECK(std::abs(num / den - complex(sol.parity[k], 0)) < 1e-12);
  }
}

TEST_CASE("ground state agrees with the full eigensystem") {
  const ModelParams p = asymmetric_but_valid();
  const EigenSolution sol = solve_eigensystem(p);
  const GroundState gs = ground_state_image(p);
  CHECK(gs.energy == doctest::Approx(sol.eigenvalues[0]).epsilon(1e-11));
  CHECK(gs.parity == sol.parity[0]);
  REQUIRE(gs.image_state.size() == basis_for(p).dim());

  // the image state is a unit eigenvector of the hermitian image
  const ComplexMatrix image = build_H_image(p, basis_for(p));
  const auto hv = image.apply(gs.image_state);
  double defect = 0.0;
  double norm2 = 0.0;
  for (std::size_t i = 0; i < gs.image_state.size(); ++i) {
    defect = std::max(defect, std::abs(hv[i] - gs.energy * gs.image_state[i]));
    norm2 += std::norm(gs.image_state[i]);
  }
  CHECK(defect < 1e-10 * std::max(1.0, image.max_norm()));
  CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigenstate mapping undoes the similarity scaling") {
  const ModelParams p = asymmetric_but_valid();
  const SpinBosonBasis b = basis_for(p);
  const MetricFactors mf = build_metric(p, b);
  const ComplexMatrix image = build_H_image(p, b);
  const Spectrum s = diagonalize_hermitian(image);
  const ComplexMatrix mapped = map_eigenstates(mf, s.eigenvectors);
  const ComplexMatrix h = build_H(p, b);
  const auto v = mapped.column(0);
  const auto hv = h.apply(v);
  double defect = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    defect = std::max(defect, std::abs(hv[i] - s.eigenvalues[0] * v[i]));
  CHECK(defect < 1e-10 * std::max(1.0, h.max_norm()));
}

TEST_CASE("hermitian input reduces to ordinary diagonalization") {
  const ModelParams p = standard_dicke(0.8, 1.0, 8);
  const SpectralComparison sc = compare_spectra(p);
  CHECK(sc.max_pairwise_gap < 1e-10);
  const EigenSolution sol = solve_eigensystem(p);
  const Spectrum direct =
      diagonalize_hermitian(build_H(p, basis_for(p)), {.with_vectors = false});
  for (std::size_t i = 0; i < sol.eigenvalues.size(); ++i)
    CHECK(sol.eigenvalues[i] ==
          doctest::Approx(direct.eigenvalues[i].real()).epsilon(1e-11));
}

}  // TEST_SUITE
