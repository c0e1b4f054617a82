#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace toeplitz {

using Complex = std::complex<double>;

/// Parameter vectors (a, alpha, b, beta, hat and sharp vectors) keep their
/// structural zero at index 0 so that index k in code is index k in the math.
using CVector = std::vector<Complex>;

/// Absolute/relative comparison policy shared by every predicate.
///
/// A complex number is zero when |z| <= atol. Two numbers are close when
/// |x - y| <= atol + rtol * scale, where scale is the largest modulus among
/// the operands of the comparison.
struct Tolerance {
  double atol = 1e-9;
  double rtol = 1e-9;

  static constexpr Tolerance exact() { return {0.0, 0.0}; }
  static constexpr Tolerance uniform(double tol) { return {tol, tol}; }

  bool is_zero(Complex z) const { return std::abs(z) <= atol; }
  bool close(Complex x, Complex y, double scale) const {
    return std::abs(x - y) <= bound(scale);
  }
  double bound(double scale) const { return atol + rtol * scale; }
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by from_dense when a diagonal is not constant.
class StructureError : public std::runtime_error {
 public:
  StructureError(std::size_t row, std::size_t col)
      : std::runtime_error("matrix is not Toeplitz: diagonal breaks at (" +
                           std::to_string(row) + ", " + std::to_string(col) +
                           ")"),
        row_(row),
        col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// Invalid generator request (regime and sizes disagree, lambda = 0, ...).
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

bool is_finite(Complex z);

/// Largest modulus in v, 0 for an empty vector.
double max_abs(std::span<const Complex> v);

bool is_zero_vector(std::span<const Complex> v, const Tolerance& tol);

/// Standard basis vector of length n with a one at index k.
CVector basis(std::size_t n, std::size_t k);

}  // namespace toeplitz
