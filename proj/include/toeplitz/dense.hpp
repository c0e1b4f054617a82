#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "toeplitz/types.hpp"

namespace toeplitz {

/// Row-major complex matrix. This is the brute-force substrate every
/// structured predicate is cross-checked against.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionError if data.size() != rows * cols or a dimension is 0,
  /// std::invalid_argument on a non-finite entry.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Complex operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Bounds-checked access; throws std::out_of_range.
  Complex at(std::size_t i, std::size_t j) const;

  std::span<const Complex> data() const noexcept { return data_; }

  /// Column j as a vector (M * e_j).
  CVector column(std::size_t j) const;

  DenseMatrix conj_transpose() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> data_;
};

DenseMatrix operator+(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix operator-(const DenseMatrix& x, const DenseMatrix& y);
DenseMatrix operator*(Complex c, const DenseMatrix& x);

/// Standard matrix product; throws DimensionError when x.cols() != y.rows().
DenseMatrix dense_mul(const DenseMatrix& x, const DenseMatrix& y);

/// Matrix-vector product; throws DimensionError on length mismatch.
CVector dense_apply(const DenseMatrix& x, std::span<const Complex> v);

double max_abs(const DenseMatrix& m);

/// Max-norm of x - y; throws DimensionError on shape mismatch.
double max_abs_diff(const DenseMatrix& x, const DenseMatrix& y);

/// First (i, j), scanning row-major, where M(i, j) differs from M(i-1, j-1)
/// beyond tol. The scale is the largest modulus in M.
std::optional<std::pair<std::size_t, std::size_t>> first_broken_diagonal(
    const DenseMatrix& m, const Tolerance& tol);

bool dense_is_toeplitz(const DenseMatrix& m, const Tolerance& tol = {});

/// Anti-diagonal constancy: M(i, j) == M(i-1, j+1).
bool dense_is_hankel(const DenseMatrix& m, const Tolerance& tol = {});

// Operator algebra. All of these are materialized densely; they exist for
// oracles and tests, the structured code never builds them.

/// Rectangular identity I_{n x m}: ones where i == j.
DenseMatrix rect_identity(std::size_t n, std::size_t m);

/// Lower shift S_n: ones on the subdiagonal.
DenseMatrix shift_matrix(std::size_t n);

/// Exchange matrix P_n: ones on the anti-diagonal.
DenseMatrix exchange_matrix(std::size_t n);

/// Outer product x (x) y with entries x_i * conj(y_j).
DenseMatrix outer(std::span<const Complex> x, std::span<const Complex> y);

/// Column-reversal M * P_m.
DenseMatrix reverse_columns(const DenseMatrix& m);

/// Row-reversal P_n * M.
DenseMatrix reverse_rows(const DenseMatrix& m);

}  // namespace toeplitz
