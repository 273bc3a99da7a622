#include "pdicke/basis.hpp"

#include <cmath>

namespace pdicke {

SpinBosonBasis SpinBosonBasis::make(double j, int cutoff) {
  const double two_j = 2.0 * j;
  if (!(j >= 0.0) || two_j != std::round(two_j))
    throw contract_error("basis: 2j must be a non-negative integer, got j = " + std::to_string(j));
  if (cutoff < 0) throw contract_error("basis: cutoff must be >= 0");
  SpinBosonBasis b;
  b.two_j = static_cast<int>(std::lround(two_j));
  b.cutoff = cutoff;
  return b;
}

std::size_t SpinBosonBasis::index(int n, int m) const {
  if (n < 0 || n > cutoff || m < 0 || m > two_j)
    throw contract_error("basis: state label out of range");
  return static_cast<std::size_t>(n) * spin_dim() + m;
}

SpinBosonBasis::State SpinBosonBasis::state(std::size_t index) const {
  if (index >= dim()) throw contract_error("basis: flat index out of range");
  const int sd = spin_dim();
  return {static_cast<int>(index / sd), static_cast<int>(index % sd)};
}

ComplexMatrix boson_annihilation(int cutoff) {
  const int d = cutoff + 1;
  ComplexMatrix a(d, d);
  for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

ComplexMatrix boson_number(int cutoff) {
  const int d = cutoff + 1;
  ComplexMatrix num(d, d, symmetry_tag::diagonal);
  for (int n = 0; n < d; ++n) num(n, n) = static_cast<double>(n);
  return num;
}

ComplexMatrix spin_raising(int two_j) {
  const int d = two_j + 1;
  ComplexMatrix jp(d, d);
  for (int m = 0; m + 1 < d; ++m)
    jp(m + 1, m) = std::sqrt(static_cast<double>(two_j - m) * (m + 1));
  return jp;
}

ComplexMatrix spin_lowering(int two_j) { return spin_raising(two_j).adjoint(); }

ComplexMatrix spin_z(int two_j) {
  const int d = two_j + 1;
  ComplexMatrix jz(d, d, symmetry_tag::diagonal);
  for (int m = 0; m < d; ++m) jz(m, m) = m - 0.5 * two_j;
  return jz;
}

BosonOps build_boson_ops(const SpinBosonBasis& basis) {
  const ComplexMatrix a = boson_annihilation(basis.cutoff);
  const ComplexMatrix eye = ComplexMatrix::identity(basis.spin_dim());
  return {kron(a, eye), kron(a.adjoint(), eye)};
}

SpinOps build_spin_ops(const SpinBosonBasis& basis) {
  const ComplexMatrix jp = spin_raising(basis.two_j);
  const ComplexMatrix eye = ComplexMatrix::identity(basis.boson_dim());
  SpinOps ops{kron(eye, jp), kron(eye, jp.adjoint()), kron(eye, spin_z(basis.two_j))};
  ops.j_z.set_tag(symmetry_tag::diagonal);
  return ops;
}

ComplexMatrix build_parity(const SpinBosonBasis& basis) {
  ComplexMatrix pi(basis.dim(), basis.dim(), symmetry_tag::diagonal);
  for (std::size_t k = 0; k < basis.dim(); ++k) {
    const auto [n, m] = basis.state(k);
    pi(k, k) = basis.parity_sign(n, m);
  }
  return pi;
}

}  // namespace pdicke
