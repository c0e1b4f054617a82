#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "toeplitz/dense.hpp"
#include "toeplitz/types.hpp"

namespace toeplitz {

/// Compact n x m Toeplitz matrix A = A(a, alpha) + a0 * I_{n x m}.
///
/// Entry (i, j) is a0 on the main diagonal, a[i - j] below it and
/// conj(alpha[j - i]) above it. Both tails carry their structural zero at
/// index 0, so a has length n and alpha has length m.
class AsymToeplitz {
 public:
  /// Throws std::invalid_argument when a tail is empty, a[0] or alpha[0] is
  /// nonzero, or any value is non-finite.
  AsymToeplitz(Complex a0, CVector a, CVector alpha);

  static AsymToeplitz zero(std::size_t n, std::size_t m);
  static AsymToeplitz identity(std::size_t n, std::size_t m);

  /// Builds the matrix whose value on diagonal k = i - j is diag(k), for
  /// k in [1 - m, n - 1].
  static AsymToeplitz from_diagonals(std::size_t n, std::size_t m,
                                     const std::function<Complex(std::ptrdiff_t)>& diag);

  /// Literal first row and first column; first_row[0] must equal
  /// first_col[0] exactly.
  static AsymToeplitz from_first_row_col(std::span<const Complex> first_row,
                                         std::span<const Complex> first_col);

  std::size_t rows() const noexcept { return a_.size(); }
  std::size_t cols() const noexcept { return alpha_.size(); }

  Complex corner() const noexcept { return a0_; }
  const CVector& col_tail() const noexcept { return a_; }
  const CVector& row_params() const noexcept { return alpha_; }

  /// Value on diagonal k = i - j.
  Complex diagonal(std::ptrdiff_t k) const;

  /// Unchecked O(1) access.
  Complex operator()(std::size_t i, std::size_t j) const {
    if (i == j) return a0_;
    if (i > j) return a_[i - j];
    return std::conj(alpha_[j - i]);
  }

  /// The A_0 part (corner dropped).
  AsymToeplitz without_corner() const;

  CVector first_row() const;
  CVector first_col() const;

  friend bool operator==(const AsymToeplitz&, const AsymToeplitz&) = default;

 private:
  Complex a0_;
  CVector a_;
  CVector alpha_;
};

/// n x m Hankel matrix H = core * P_m, i.e. H(i, j) = core(i, m - 1 - j).
class AsymHankel {
 public:
  explicit AsymHankel(AsymToeplitz core) : core_(std::move(core)) {}

  /// Literal first row and last column; first_row[cols-1] must equal
  /// last_col[0] exactly.
  static AsymHankel from_first_row_last_col(std::span<const Complex> first_row,
                                            std::span<const Complex> last_col);

  std::size_t rows() const noexcept { return core_.rows(); }
  std::size_t cols() const noexcept { return core_.cols(); }

  /// Toeplitz A with H = A * P_m.
  const AsymToeplitz& column_core() const noexcept { return core_; }
  /// Toeplitz A' with H = P_n * A'.
  AsymToeplitz row_core() const;

  Complex operator()(std::size_t i, std::size_t j) const {
    return core_(i, cols() - 1 - j);
  }

  CVector first_row() const;
  CVector last_col() const;

  friend bool operator==(const AsymHankel&, const AsymHankel&) = default;

 private:
  AsymToeplitz core_;
};

/// Bounds-checked entry; throws std::out_of_range.
Complex entry(const AsymToeplitz& a, std::size_t i, std::size_t j);

DenseMatrix to_dense(const AsymToeplitz& a);

/// Reads the compact form off row 0 and column 0 after checking every
/// diagonal within tol (scale = largest modulus in m). Throws StructureError
/// at the first violating (i, j).
AsymToeplitz from_dense(const DenseMatrix& m, const Tolerance& tol = {});

/// A* = A(alpha, a) + conj(a0) I_{m x n}.
AsymToeplitz adjoint(const AsymToeplitz& a);

/// P_n * A * P_m, which is again Toeplitz.
AsymToeplitz rotate_half_turn(const AsymToeplitz& a);

/// H = A * P_m.
AsymHankel flip_cols(const AsymToeplitz& a);

/// H = P_n * A, stored through its column core P_n * A * P_m.
AsymHankel flip_rows_of(const AsymToeplitz& a);

DenseMatrix hankel_to_dense(const AsymHankel& h);

/// Hankel compact form of a dense matrix via its column reversal.
AsymHankel hankel_from_dense(const DenseMatrix& m, const Tolerance& tol = {});

}  // namespace toeplitz
