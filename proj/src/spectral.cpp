#include "pdicke/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace pdicke {
namespace {

struct Sector {
  std::vector<std::size_t> members;       // full-basis indices
  std::vector<std::ptrdiff_t> local;      // full index -> sector index or -1
};

Sector collect_sector(const SpinBosonBasis& basis, int parity) {
  Sector s;
  s.local.assign(basis.dim(), -1);
  for (std::size_t idx = 0; idx < basis.dim(); ++idx) {
    const auto [n, m] = basis.state(idx);
    if (basis.parity_sign(n, m) == parity) {
      s.local[idx] = static_cast<std::ptrdiff_t>(s.members.size());
      s.members.push_back(idx);
    }
  }
  return s;
}

// The Hamiltonian never connects the sectors, so filtering rows is enough.
ComplexMatrix assemble_image_sector(const ModelParams& p, const SpinBosonBasis& basis,
                                    const Sector& s) {
  ComplexMatrix m(s.members.size(), s.members.size(), symmetry_tag::hermitian);
  for_each_hamiltonian_entry(p, basis, /*image=*/true,
                             [&](std::size_t row, std::size_t col, complex v) {
                               const auto lr = s.local[row];
                               const auto lc = s.local[col];
                               if (lr < 0 || lc < 0) return;
                               m(static_cast<std::size_t>(lr),
                                 static_cast<std::size_t>(lc)) += v;
                             });
  return m;
}

}  // namespace

SpectralComparison compare_spectra(const ModelParams& p) {
  const SpinBosonBasis basis = basis_for(p);
  SpectralComparison out;
  const ComplexMatrix h = build_H(p, basis);
  out.h_norm = h.max_norm();
  out.spectrum_H = diagonalize_general(h, {.with_vectors = false});
  double defect = 0.0;
  for (const complex& z : out.spectrum_H.eigenvalues)
    defect = std::max(defect, std::abs(z.imag()));
  out.reality_defect = defect;

  out.params_valid = validate(p).quasi_hermitian;
  if (!out.params_valid) {
    out.max_pairwise_gap = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  const ComplexMatrix image = build_H_image(p, basis);
  out.image_norm = image.max_norm();
  out.spectrum_image = diagonalize_hermitian(image, {.with_vectors = false});
  double gap = 0.0;
  for (std::size_t i = 0; i < out.spectrum_H.eigenvalues.size(); ++i)
    gap = std::max(gap, std::abs(out.spectrum_H.eigenvalues[i] -
                                 out.spectrum_image.eigenvalues[i]));
  out.max_pairwise_gap = gap;
  return out;
}

ComplexMatrix map_eigenstates(const MetricFactors& mf,
                              const ComplexMatrix& image_states) {
  if (image_states.rows() != mf.rho_diag.size())
    throw contract_error("map_eigenstates: shape mismatch");
  ComplexMatrix out(image_states.rows(), image_states.cols());
  for (std::size_t i = 0; i < image_states.rows(); ++i) {
    const double scale = 1.0 / mf.rho_diag[i];
    for (std::size_t c = 0; c < image_states.cols(); ++c)
      out(i, c) = image_states(i, c) * scale;
  }
  return out;
}

EigenSolution solve_eigensystem(const ModelParams& p) {
  const SpinBosonBasis basis = basis_for(p);
  const MetricFactors mf = build_metric(p, basis);
  const std::size_t dim = basis.dim();

  struct Labeled {
    double energy;
    int parity;
    std::vector<complex> state;
  };
  std::vector<Labeled> all;
  all.reserve(dim);

  for (int parity : {+1, -1}) {
    const Sector s = collect_sector(basis, parity);
    if (s.members.empty()) continue;
    const ComplexMatrix m = assemble_image_sector(p, basis, s);
    const Spectrum spec = diagonalize_hermitian(m, {});
    for (std::size_t k = 0; k < s.members.size(); ++k) {
      Labeled l;
      l.energy = spec.eigenvalues[k].real();
      l.parity = parity;
      l.state.assign(dim, complex(0.0, 0.0));
      for (std::size_t r = 0; r < s.members.size(); ++r) {
        // embed and map through rho^{-1} in one pass
        l.state[s.members[r]] =
            spec.eigenvectors(r, k) / mf.rho_diag[s.members[r]];
      }
      all.push_back(std::move(l));
    }
  }

  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (all[a].energy != all[b].energy) return all[a].energy < all[b].energy;
    return all[a].parity > all[b].parity;
  });

  EigenSolution out;
  out.eigenvalues.resize(all.size());
  out.parity.resize(all.size());
  out.states = ComplexMatrix(dim, all.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Labeled& l = all[order[k]];
    out.eigenvalues[k] = l.energy;
    out.parity[k] = l.parity;
    out.states.set_column(k, std::span<const complex>(l.state));
  }
  return out;
}

GroundState ground_state_image(const ModelParams& p) {
  const SpinBosonBasis basis = basis_for(p);
  GroundState best;
  best.energy = std::numeric_limits<double>::infinity();

  for (int parity : {+1, -1}) {
    const Sector s = collect_sector(basis, parity);
    if (s.members.empty()) continue;
    const ComplexMatrix m = assemble_image_sector(p, basis, s);
    const PartialSpectrum ps = lowest_hermitian_eigenpairs(m, 1);
    if (ps.eigenvalues[0] < best.energy) {
      best.energy = ps.eigenvalues[0];
      best.parity = parity;
      best.image_state.assign(basis.dim(), complex(0.0, 0.0));
      for (std::size_t r = 0; r < s.members.size(); ++r)
        best.image_state[s.members[r]] = ps.eigenvectors(r, 0);
    }
  }
  return best;
}

}  // namespace pdicke
