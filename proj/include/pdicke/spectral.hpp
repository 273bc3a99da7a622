#pragma once

#include "pdicke/metric.hpp"

namespace pdicke {

// Direct non-hermitian spectrum of H next to the hermitian spectrum of its
// image, with the sorted-eigenvalue distance between them. For invalid
// parameters (diagnostic mode) the image side stays empty and the gap is NaN;
// reality_defect always reports max |Im| of H's spectrum.
struct SpectralComparison {
  Spectrum spectrum_H;
  Spectrum spectrum_image;
  double max_pairwise_gap = 0.0;
  double reality_defect = 0.0;
  bool params_valid = false;
  double h_norm = 0.0;
  double image_norm = 0.0;
};
SpectralComparison compare_spectra(const ModelParams& p);

// Columnwise rho^{-1} applied to eigenvectors of the image; the results are
// eigenvectors of H and inherit eta-orthonormality from euclidean
// orthonormality.
ComplexMatrix map_eigenstates(const MetricFactors& mf, const ComplexMatrix& image_states);

// Full eigensystem of a valid model, solved per parity sector of the image so
// every state carries an exact parity label. States are eigenvectors of H,
// eta-orthonormal, ordered by energy (ties: even sector first).
struct EigenSolution {
  std::vector<double> eigenvalues;
  ComplexMatrix states;
  std::vector<int> parity;
};
EigenSolution solve_eigensystem(const ModelParams& p);

// Lowest eigenpair of the image across the two parity sectors, embedded back
// into the full basis (euclidean-normalized image-picture state).
struct GroundState {
  double energy = 0.0;
  int parity = 1;
  std::vector<complex> image_state;
};
GroundState ground_state_image(const ModelParams& p);

}  // namespace pdicke
