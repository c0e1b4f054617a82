#include "toeplitz/dense.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace toeplitz {

namespace {

void require_same_shape(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DimensionError("shape mismatch: " + std::to_string(x.rows()) + "x" +
                         std::to_string(x.cols()) + " vs " + std::to_string(y.rows()) +
                         "x" + std::to_string(y.cols()));
  }
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
  if (data_.size() != rows * cols) throw DimensionError("data length must equal rows * cols");
  if (!std::all_of(data_.begin(), data_.end(), is_finite)) {
    throw std::invalid_argument("matrix entries must be finite");
  }
}

Complex DenseMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("dense index out of range");
  return (*this)(i, j);
}

CVector DenseMatrix::column(std::size_t j) const {
  CVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

DenseMatrix DenseMatrix::conj_transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y) {
  require_same_shape(x, y);
  DenseMatrix r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j) + y(i, j);
  return r;
}

DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y) {
  require_same_shape(x, y);
  DenseMatrix r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = x(i, j) - y(i, j);
  return r;
}

DenseMatrix operator*(Complex c, const DenseMatrix& x) {
  DenseMatrix r(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r(i, j) = c * x(i, j);
  return r;
}

DenseMatrix dense_mul(const DenseMatrix& x, const DenseMatrix& y) {
  if (x.cols() != y.rows()) {
    throw DimensionError("inner dimensions differ: " + std::to_string(x.cols()) + " vs " +
                         std::to_string(y.rows()));
  }
  DenseMatrix r(x.rows(), y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const Complex xik = x(i, k);
      for (std::size_t j = 0; j < y.cols(); ++j) r(i, j) += xik * y(k, j);
    }
  }
  return r;
}

CVector dense_apply(const DenseMatrix& x, std::span<const Complex> v) {
  if (x.cols() != v.size()) throw DimensionError("vector length must equal column count");
  CVector r(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) r[i] += x(i, j) * v[j];
  return r;
}

double max_abs(const DenseMatrix& m) { return max_abs(m.data()); }

double max_abs_diff(const DenseMatrix& x, const DenseMatrix& y) {
  require_same_shape(x, y);
  double best = 0.0;
  for (std::size_t k = 0; k < x.data().size(); ++k)
    best = std::max(best, std::abs(x.data()[k] - y.data()[k]));
  return best;
}

std::optional<std::pair<std::size_t, std::size_t>> first_broken_diagonal(
    const DenseMatrix& m, const Tolerance& tol) {
  const double bound = tol.bound(max_abs(m));
  for (std::size_t i = 1; i < m.rows(); ++i)
    for (std::size_t j = 1; j < m.cols(); ++j)
      if (std::abs(m(i, j) - m(i - 1, j - 1)) > bound) return std::pair{i, j};
  return std::nullopt;
}

bool dense_is_toeplitz(const DenseMatrix& m, const Tolerance& tol) {
  return !first_broken_diagonal(m, tol).has_value();
}

bool dense_is_hankel(const DenseMatrix& m, const Tolerance& tol) {
  const double bound = tol.bound(max_abs(m));
  for (std::size_t i = 1; i < m.rows(); ++i)
    for (std::size_t j = 0; j + 1 < m.cols(); ++j)
      if (std::abs(m(i, j) - m(i - 1, j + 1)) > bound) return false;
  return true;
}

DenseMatrix rect_identity(std::size_t n, std::size_t m) {
  DenseMatrix r(n, m);
  for (std::size_t i = 0; i < std::min(n, m); ++i) r(i, i) = 1.0;
  return r;
}

DenseMatrix shift_matrix(std::size_t n) {
  DenseMatrix r(n, n);
  for (std::size_t i = 1; i < n; ++i) r(i, i - 1) = 1.0;
  return r;
}

DenseMatrix exchange_matrix(std::size_t n) {
  DenseMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) r(i, n - 1 - i) = 1.0;
  return r;
}

DenseMatrix outer(std::span<const Complex> x, std::span<const Complex> y) {
  DenseMatrix r(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r(i, j) = x[i] * std::conj(y[j]);
  return r;
}

DenseMatrix reverse_columns(const DenseMatrix& m) {
  DenseMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, m.cols() - 1 - j);
  return r;
}

DenseMatrix reverse_rows(const DenseMatrix& m) {
  DenseMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(m.rows() - 1 - i, j);
  return r;
}

}  // namespace toeplitz
