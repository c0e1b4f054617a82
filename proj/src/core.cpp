#include "toeplitz/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace toeplitz {

namespace {

void require_tail(const CVector& v, const char* name) {
  if (v.empty()) throw std::invalid_argument(std::string(name) + " must have length >= 1");
  if (v[0] != Complex{}) {
    throw std::invalid_argument(std::string(name) + "[0] is structural and must be 0");
  }
  if (!std::all_of(v.begin(), v.end(), is_finite)) {
    throw std::invalid_argument(std::string(name) + " must be finite");
  }
}

}  // namespace

AsymToeplitz::AsymToeplitz(Complex a0, CVector a, CVector alpha)
    : a0_(a0), a_(std::move(a)), alpha_(std::move(alpha)) {
  if (!is_finite(a0_)) throw std::invalid_argument("a0 must be finite");
  require_tail(a_, "a");
  require_tail(alpha_, "alpha");
}

AsymToeplitz AsymToeplitz::zero(std::size_t n, std::size_t m) {
  return AsymToeplitz(0.0, CVector(n), CVector(m));
}

AsymToeplitz AsymToeplitz::identity(std::size_t n, std::size_t m) {
  return AsymToeplitz(1.0, CVector(n), CVector(m));
}

AsymToeplitz AsymToeplitz::from_diagonals(std::size_t n, std::size_t m,
                                          const std::function<Complex(std::ptrdiff_t)>& diag) {
  if (n == 0 || m == 0) throw DimensionError("matrix dimensions must be positive");
  CVector a(n);
  CVector alpha(m);
  for (std::size_t i = 1; i < n; ++i) a[i] = diag(static_cast<std::ptrdiff_t>(i));
  for (std::size_t j = 1; j < m; ++j) alpha[j] = std::conj(diag(-static_cast<std::ptrdiff_t>(j)));
  return AsymToeplitz(diag(0), std::move(a), std::move(alpha));
}

AsymToeplitz AsymToeplitz::from_first_row_col(std::span<const Complex> first_row,
                                              std::span<const Complex> first_col) {
  if (first_row.empty() || first_col.empty()) {
    throw DimensionError("first row and first column must be nonempty");
  }
  if (first_row[0] != first_col[0]) {
    throw std::invalid_argument("first_row[0] and first_col[0] must agree");
  }
  CVector a(first_col.size());
  CVector alpha(first_row.size());
  for (std::size_t i = 1; i < a.size(); ++i) a[i] = first_col[i];
  for (std::size_t j = 1; j < alpha.size(); ++j) alpha[j] = std::conj(first_row[j]);
  return AsymToeplitz(first_col[0], std::move(a), std::move(alpha));
}

Complex AsymToeplitz::diagonal(std::ptrdiff_t k) const {
  const auto n = static_cast<std::ptrdiff_t>(rows());
  const auto m = static_cast<std::ptrdiff_t>(cols());
  if (k >= n || -k >= m) throw std::out_of_range("diagonal index out of range");
  if (k == 0) return a0_;
  if (k > 0) return a_[static_cast<std::size_t>(k)];
  return std::conj(alpha_[static_cast<std::size_t>(-k)]);
}

AsymToeplitz AsymToeplitz::without_corner() const { return AsymToeplitz(0.0, a_, alpha_); }

CVector AsymToeplitz::first_row() const {
  CVector r(cols());
  r[0] = a0_;
  for (std::size_t j = 1; j < cols(); ++j) r[j] = std::conj(alpha_[j]);
  return r;
}

CVector AsymToeplitz::first_col() const {
  CVector c = a_;
  c[0] = a0_;
  return c;
}

AsymHankel AsymHankel::from_first_row_last_col(std::span<const Complex> first_row,
                                               std::span<const Complex> last_col) {
  if (first_row.empty() || last_col.empty()) {
    throw DimensionError("first row and last column must be nonempty");
  }
  // The core's row 0 is the Hankel row 0 reversed; its column 0 is the
  // Hankel last column.
  CVector core_row(first_row.rbegin(), first_row.rend());
  return AsymHankel(AsymToeplitz::from_first_row_col(core_row, last_col));
}

AsymToeplitz AsymHankel::row_core() const { return rotate_half_turn(core_); }

CVector AsymHankel::first_row() const {
  CVector r = core_.first_row();
  std::reverse(r.begin(), r.end());
  return r;
}

CVector AsymHankel::last_col() const { return core_.first_col(); }

Complex entry(const AsymToeplitz& a, std::size_t i, std::size_t j) {
  if (i >= a.rows() || j >= a.cols()) {
    throw std::out_of_range("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") outside " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()));
  }
  return a(i, j);
}

DenseMatrix to_dense(const AsymToeplitz& a) {
  DenseMatrix d(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d(i, j) = a(i, j);
  return d;
}

AsymToeplitz from_dense(const DenseMatrix& m, const Tolerance& tol) {
  if (auto broken = first_broken_diagonal(m, tol)) {
    throw StructureError(broken->first, broken->second);
  }
  CVector a(m.rows());
  CVector alpha(m.cols());
  for (std::size_t i = 1; i < m.rows(); ++i) a[i] = m(i, 0);
  for (std::size_t j = 1; j < m.cols(); ++j) alpha[j] = std::conj(m(0, j));
  return AsymToeplitz(m(0, 0), std::move(a), std::move(alpha));
}

AsymToeplitz adjoint(const AsymToeplitz& a) {
  return AsymToeplitz(std::conj(a.corner()), a.row_params(), a.col_tail());
}

AsymToeplitz rotate_half_turn(const AsymToeplitz& a) {
  // (P_n A P_m)(i, j) = A(n-1-i, m-1-j) sits on diagonal (n - m) - (i - j).
  const auto shift = static_cast<std::ptrdiff_t>(a.rows()) - static_cast<std::ptrdiff_t>(a.cols());
  return AsymToeplitz::from_diagonals(a.rows(), a.cols(),
                                      [&](std::ptrdiff_t k) { return a.diagonal(shift - k); });
}

AsymHankel flip_cols(const AsymToeplitz& a) { return AsymHankel(a); }

AsymHankel flip_rows_of(const AsymToeplitz& a) { return AsymHankel(rotate_half_turn(a)); }

DenseMatrix hankel_to_dense(const AsymHankel& h) {
  DenseMatrix d(h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) d(i, j) = h(i, j);
  return d;
}

AsymHankel hankel_from_dense(const DenseMatrix& m, const Tolerance& tol) {
  try {
    return AsymHankel(from_dense(reverse_columns(m), tol));
  } catch (const StructureError& e) {
    // Report the position in the caller's (unreversed) frame.
    throw StructureError(e.row(), m.cols() - 1 - e.col());
  }
}

}  // namespace toeplitz
