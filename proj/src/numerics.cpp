#include "pdicke/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

namespace pdicke {

namespace {

lapack_complex_double* lp(complex* p) { return reinterpret_cast<lapack_complex_double*>(p); }

void require(bool ok, const char* msg) {
  if (!ok) throw contract_error(msg);
}

void check_solver_info(lapack_int info, const char* routine) {
  if (info == 0) return;
  std::string msg = std::string(routine) + " failed, info = " + std::to_string(info);
  if (info > 0) msg += " (did not converge)";
  throw numerical_error(msg);
}

// The row-major buffer of M, read column major by LAPACK, is M^T.
// For hermitian M that is conj(M); eigenvectors of conj(M) are the
// conjugates of those of M at the same (real) eigenvalues.
std::vector<complex> copy_buffer(const ComplexMatrix& m) {
  return {m.data(), m.data() + m.rows() * m.cols()};
}

bool hermitian_input_ok(const ComplexMatrix& m) {
  if (m.tag() == symmetry_tag::hermitian) return true;
  if (m.tag() != symmetry_tag::diagonal) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, i).imag() != 0.0) return false;
  return true;
}

void check_hermitian_contract(const ComplexMatrix& m) {
  require(m.square(), "diagonalize_hermitian: matrix must be square");
  require(m.all_finite(), "diagonalize_hermitian: matrix has non-finite entries");
  require(hermitian_input_ok(m),
          "diagonalize_hermitian: matrix not tagged hermitian (or real diagonal)");
  const double defect = m.hermiticity_defect();
  if (defect > 1e-12 * std::max(1.0, m.max_norm()))
    throw contract_error("diagonalize_hermitian: hermiticity defect " +
                         std::to_string(defect) + " exceeds 1e-12 * max_norm");
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n, symmetry_tag::diagonal);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> entries) {
  ComplexMatrix m(entries.size(), entries.size(), symmetry_tag::diagonal);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const complex> entries) {
  ComplexMatrix m(entries.size(), entries.size(), symmetry_tag::diagonal);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_, tag_ == symmetry_tag::general ? symmetry_tag::general : tag_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

complex ComplexMatrix::trace() const {
  complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_norm() const {
  double m = 0.0;
  for (const complex& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::hermiticity_defect() const {
  if (!square()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

bool ComplexMatrix::all_finite() const {
  for (const complex& z : data_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

bool ComplexMatrix::all_real() const {
  for (const complex& z : data_)
    if (z.imag() != 0.0) return false;
  return true;
}

std::vector<complex> ComplexMatrix::apply(std::span<const complex> v) const {
  require(v.size() == cols_, "apply: vector length does not match matrix columns");
  std::vector<complex> out(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    complex acc = 0.0;
    const complex* row = data_.data() + i * cols_;
    for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * v[j];
    out[i] = acc;
  }
  return out;
}

std::vector<complex> ComplexMatrix::column(std::size_t c) const {
  require(c < cols_, "column: index out of range");
  std::vector<complex> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

void ComplexMatrix::set_column(std::size_t c, std::span<const complex> v) {
  require(c < cols_ && v.size() == rows_, "set_column: shape mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix addition: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  tag_ = symmetry_tag::general;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix subtraction: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  tag_ = symmetry_tag::general;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complex scale) {
  for (complex& z : data_) z *= scale;
  if (tag_ != symmetry_tag::diagonal) tag_ = symmetry_tag::general;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw contract_error("matrix product: shape mismatch");
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    complex* orow = out.data() + i * out.cols();
    const complex* lrow = lhs.data() + i * lhs.cols();
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const complex l = lrow[k];
      if (l == complex(0.0)) continue;
      const complex* rrow = rhs.data() + k * rhs.cols();
      for (std::size_t j = 0; j < rhs.cols(); ++j) orow[j] += l * rrow[j];
    }
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& coarse, const ComplexMatrix& fine) {
  ComplexMatrix out(coarse.rows() * fine.rows(), coarse.cols() * fine.cols());
  for (std::size_t ib = 0; ib < coarse.rows(); ++ib)
    for (std::size_t jb = 0; jb < coarse.cols(); ++jb) {
      const complex c = coarse(ib, jb);
      if (c == complex(0.0)) continue;
      for (std::size_t i = 0; i < fine.rows(); ++i)
        for (std::size_t j = 0; j < fine.cols(); ++j)
          out(ib * fine.rows() + i, jb * fine.cols() + j) = c * fine(i, j);
    }
  return out;
}

double default_reality_tolerance(const ComplexMatrix& m) {
  return 1e-8 * std::max(1.0, m.max_norm());
}

Spectrum diagonalize_hermitian(const ComplexMatrix& m, EigenOptions opt) {
  check_hermitian_contract(m);
  const std::size_t n = m.rows();
  Spectrum s;
  s.reality_tolerance = opt.reality_tolerance.value_or(default_reality_tolerance(m));
  s.is_real = true;
  if (n == 0) return s;

  std::vector<complex> buf = copy_buffer(m);
  std::vector<double> w(n);
  const lapack_int info = LAPACKE_zheevd(
      LAPACK_COL_MAJOR, opt.with_vectors ? 'V' : 'N', 'L',
      static_cast<lapack_int>(n), lp(buf.data()), static_cast<lapack_int>(n), w.data());
  check_solver_info(info, "zheevd");

  s.eigenvalues.reserve(n);
  for (double v : w) s.eigenvalues.emplace_back(v, 0.0);
  if (opt.with_vectors) {
    // buf holds eigenvectors of conj(M) column major; conjugate-transpose
    // into row-major columns for M itself.
    s.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t i = 0; i < n; ++i)
        s.eigenvectors(i, c) = std::conj(buf[c * n + i]);
  }
  return s;
}

Spectrum diagonalize_general(const ComplexMatrix& m, EigenOptions opt) {
  require(m.square(), "diagonalize_general: matrix must be square");
  require(m.all_finite(), "diagonalize_general: matrix has non-finite entries");
  const std::size_t n = m.rows();
  Spectrum s;
  s.reality_tolerance = opt.reality_tolerance.value_or(default_reality_tolerance(m));
  if (n == 0) {
    s.is_real = true;
    return s;
  }

  // Column-major view of the row-major buffer is M^T; eigenvalues agree,
  // and the left eigenvectors of M^T conjugate into right eigenvectors of M.
  std::vector<complex> buf = copy_buffer(m);
  std::vector<complex> w(n);
  std::vector<complex> vl(opt.with_vectors ? n * n : 1);
  const lapack_int info = LAPACKE_zgeev(
      LAPACK_COL_MAJOR, opt.with_vectors ? 'V' : 'N', 'N',
      static_cast<lapack_int>(n), lp(buf.data()), static_cast<lapack_int>(n),
      lp(w.data()), lp(vl.data()), static_cast<lapack_int>(n), nullptr, 1);
  check_solver_info(info, "zgeev");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (w[a].real() != w[b].real()) return w[a].real() < w[b].real();
    return w[a].imag() < w[b].imag();
  });

  s.eigenvalues.resize(n);
  double max_imag = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    s.eigenvalues[k] = w[order[k]];
    max_imag = std::max(max_imag, std::abs(s.eigenvalues[k].imag()));
  }
  s.is_real = max_imag <= s.reality_tolerance;

  if (opt.with_vectors) {
    s.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t src = order[k];
      for (std::size_t i = 0; i < n; ++i)
        s.eigenvectors(i, k) = std::conj(vl[src * n + i]);
    }
  }
  return s;
}

PartialSpectrum lowest_hermitian_eigenpairs(const ComplexMatrix& m, std::size_t count) {
  check_hermitian_contract(m);
  const std::size_t n = m.rows();
  require(count >= 1 && count <= n, "lowest_hermitian_eigenpairs: count out of range");

  PartialSpectrum out;
  out.eigenvalues.resize(count);
  out.eigenvectors = ComplexMatrix(n, count);
  std::vector<lapack_int> isuppz(2 * count);
  lapack_int found = 0;

  if (m.all_real()) {
    // Real symmetric fast path; M^T = M so no conjugation games needed.
    std::vector<double> a(n * n);
    for (std::size_t k = 0; k < n * n; ++k) a[k] = m.data()[k].real();
    std::vector<double> z(n * count);
    const lapack_int info = LAPACKE_dsyevr(
        LAPACK_COL_MAJOR, 'V', 'I', 'L', static_cast<lapack_int>(n), a.data(),
        static_cast<lapack_int>(n), 0.0, 0.0, 1, static_cast<lapack_int>(count),
        0.0, &found, out.eigenvalues.data(), z.data(), static_cast<lapack_int>(n),
        isuppz.data());
    check_solver_info(info, "dsyevr");
    for (std::size_t c = 0; c < count; ++c)
      for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, c) = z[c * n + i];
  } else {
    std::vector<complex> a = copy_buffer(m);
    std::vector<complex> z(n * count);
    const lapack_int info = LAPACKE_zheevr(
        LAPACK_COL_MAJOR, 'V', 'I', 'L', static_cast<lapack_int>(n), lp(a.data()),
        static_cast<lapack_int>(n), 0.0, 0.0, 1, static_cast<lapack_int>(count),
        0.0, &found, out.eigenvalues.data(), lp(z.data()), static_cast<lapack_int>(n),
        isuppz.data());
    check_solver_info(info, "zheevr");
    for (std::size_t c = 0; c < count; ++c)
      for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, c) = std::conj(z[c * n + i]);
  }
  if (static_cast<std::size_t>(found) != count)
    throw numerical_error("selected-range eigensolver returned fewer pairs than requested");
  return out;
}

}  // namespace pdicke
