#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdicke {

using complex = std::complex<double>;

// Input violates a documented precondition of the called operation.
class contract_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A backend eigensolver failed to converge or produced non-finite output.
class numerical_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class symmetry_tag { general, hermitian, diagonal };

// Dense square-or-rectangular complex matrix, row major storage.
// The symmetry tag is advisory metadata set by builders; the hermitian
// solver re-checks it numerically before trusting it.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols,
                symmetry_tag tag = symmetry_tag::general)
      : rows_(rows), cols_(cols), tag_(tag), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> entries);
  static ComplexMatrix diagonal(std::span<const complex> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }
  bool square() const { return rows_ == cols_; }

  complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  symmetry_tag tag() const { return tag_; }
  void set_tag(symmetry_tag t) { tag_ = t; }

  complex* data() { return data_.data(); }
  const complex* data() const { return data_.data(); }

  ComplexMatrix adjoint() const;
  complex trace() const;
  double max_norm() const;            // max_ij |m_ij|
  double hermiticity_defect() const;  // max_ij |m_ij - conj(m_ji)|
  bool all_finite() const;
  bool all_real() const;              // every entry has imag == 0 exactly

  std::vector<complex> apply(std::span<const complex> v) const;
  std::vector<complex> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const complex> v);

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(complex scale);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
  friend ComplexMatrix operator*(complex scale, ComplexMatrix m) { return m *= scale; }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  symmetry_tag tag_ = symmetry_tag::general;
  std::vector<complex> data_;
};

// Kronecker product with the left (boson) factor major:
// out[(ib*nf + if), (jb*nf + jf)] = coarse(ib, jb) * fine(if, jf).
ComplexMatrix kron(const ComplexMatrix& coarse, const ComplexMatrix& fine);

struct Spectrum {
  std::vector<complex> eigenvalues;   // sorted by (re, im) ascending
  ComplexMatrix eigenvectors;         // columns, aligned with eigenvalues; empty if not requested
  bool is_real = false;               // max |Im| <= reality_tolerance
  double reality_tolerance = 0.0;     // the tolerance actually applied
};

struct EigenOptions {
  bool with_vectors = true;
  std::optional<double> reality_tolerance;  // default: 1e-8 * max(1, max_norm)
};

double default_reality_tolerance(const ComplexMatrix& m);

// Full eigensystem of a hermitian matrix. Requires tag hermitian (or
// diagonal with real diagonal) and hermiticity defect <= 1e-12 * max_norm.
// Eigenvalues come out real and ascending, eigenvectors orthonormal.
Spectrum diagonalize_hermitian(const ComplexMatrix& m, EigenOptions opt = {});

// Full eigensystem of an arbitrary square matrix. Right eigenvectors,
// unit 2-norm columns, eigenvalues sorted by (re, im).
Spectrum diagonalize_general(const ComplexMatrix& m, EigenOptions opt = {});

// Lowest `count` eigenpairs of a hermitian matrix by a dense direct
// selected-range solver. Falls into real symmetric arithmetic when the
// matrix has no imaginary part anywhere.
struct PartialSpectrum {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // dim x count
};
PartialSpectrum lowest_hermitian_eigenpairs(const ComplexMatrix& m, std::size_t count);

}  // namespace pdicke
