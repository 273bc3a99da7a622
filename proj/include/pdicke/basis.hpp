#pragma once

#include "pdicke/numerics.hpp"

namespace pdicke {

// Truncated spin-boson product space. Boson occupation n = 0..cutoff,
// spin deviation m = 0..2j (j_z eigenvalue m - j). Flat index n*(2j+1) + m,
// so the boson label is major.
struct SpinBosonBasis {
  int two_j = 1;
  int cutoff = 16;

  // j may be integer or half-integer; anything else is rejected.
  static SpinBosonBasis make(double j, int cutoff);

  double j() const { return 0.5 * two_j; }
  int spin_dim() const { return two_j + 1; }
  int boson_dim() const { return cutoff + 1; }
  std::size_t dim() const {
    return static_cast<std::size_t>(boson_dim()) * static_cast<std::size_t>(spin_dim());
  }

  std::size_t index(int n, int m) const;

  struct State { int n; int m; };
  State state(std::size_t index) const;

  double jz_value(int m) const { return m - 0.5 * two_j; }
  int parity_sign(int n, int m) const { return ((n + m) % 2 == 0) ? 1 : -1; }
};

// Factor-space operators. Products and Kronecker lifts of these are the
// single source of truth for all ladder matrix elements.
ComplexMatrix boson_annihilation(int cutoff);  // <n-1| a |n> = sqrt(n)
ComplexMatrix boson_number(int cutoff);        // diag(n), exact integers
ComplexMatrix spin_raising(int two_j);         // <m+1| J+ |m> = sqrt((2j-m)(m+1))
ComplexMatrix spin_lowering(int two_j);        // adjoint of spin_raising
ComplexMatrix spin_z(int two_j);               // diag(m - j), exact

// Product-space lifts.
struct BosonOps { ComplexMatrix a, a_dag; };
struct SpinOps { ComplexMatrix j_plus, j_minus, j_z; };
BosonOps build_boson_ops(const SpinBosonBasis& basis);
SpinOps build_spin_ops(const SpinBosonBasis& basis);

// Parity exp(i*pi*(a^dag a + J_z + j)): diagonal, entries (-1)^(n+m).
ComplexMatrix build_parity(const SpinBosonBasis& basis);

}  // namespace pdicke
