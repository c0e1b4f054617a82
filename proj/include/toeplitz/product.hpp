#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <variant>

#include "toeplitz/core.hpp"
#include "toeplitz/dense.hpp"

namespace toeplitz {

/// Size regime of a product of an n x m and an m x l Toeplitz matrix.
///   R1: n <= m and l <= m
///   R2: m < n and m < l
///   R3: n <= m < l
///   R4: l <= m < n
enum class Regime { R1, R2, R3, R4 };

std::string_view to_string(Regime r);
/// Accepts "R1".."R4" in either case; nullopt otherwise.
std::optional<Regime> parse_regime(std::string_view s);

/// Total over positive n, m, l. Throws DimensionError on a zero size.
Regime classify_regime(std::size_t n, std::size_t m, std::size_t l);

/// Which of the four vectors in x (x) y = x' (x) y' vanished.
///
/// In the extended-plane reading of the rank-one lemma, x = y' = 0 is the
/// lambda = 0 case and x' = y = 0 is lambda = infinity.
struct BothZero {
  bool x_zero = false;
  bool y_zero = false;
  bool xp_zero = false;
  bool yp_zero = false;

  bool lambda_zero() const { return x_zero && yp_zero; }
  bool lambda_infinity() const { return xp_zero && y_zero; }
};

/// x = lambda * x' and y' = conj(lambda) * y with lambda != 0.
struct Proportional {
  Complex lambda;
};

using RankOneOutcome = std::variant<BothZero, Proportional>;

/// Decides x (x) y == xp (x) yp in O(len x + len y). nullopt means the two
/// rank-one matrices differ.
///
/// Proportionality is checked in cross-multiplied form against the pivot
/// p = argmax |xp_p|, so Gaussian-integer inputs are compared exactly even
/// when lambda = x_p / xp_p is not representable.
/// Throws DimensionError when x/xp or y/yp lengths differ.
std::optional<RankOneOutcome> rank_one_equal(std::span<const Complex> x,
                                             std::span<const Complex> y,
                                             std::span<const Complex> xp,
                                             std::span<const Complex> yp,
                                             const Tolerance& tol = {});

/// S_n A_0 eps_{m-1}: the shifted last column of A_0.
CVector alpha_hat(const AsymToeplitz& a);

/// S_l B_0^* eps_{m-1} for B of size m x l: the shifted, conjugated last row
/// of B_0.
CVector b_hat(const AsymToeplitz& b);

/// I_{to x from} x: truncation or zero padding. x[0] must be 0.
CVector sharp(std::span<const Complex> x, std::size_t to_dim);

/// k with k*m < n <= (k+1)*m.
std::size_t block_count(std::size_t n, std::size_t m);

/// The two sides of the interior equation a (x) beta = u (x) v that decides
/// whether AB is Toeplitz.
struct ComparisonVectors {
  Regime regime;
  CVector x;  ///< a, length n
  CVector y;  ///< beta, length l
  CVector u;  ///< alpha_hat, plus a0 at index m when m < n
  CVector v;  ///< b_hat, plus conj(b0) at index m when m < l
};

/// Throws DimensionError when a.cols() != b.rows().
ComparisonVectors comparison_vectors(const AsymToeplitz& a, const AsymToeplitz& b);

/// Witness that AB is Toeplitz.
///
/// lambda follows one convention in all regimes: a = lambda * u and
/// v = conj(lambda) * beta. For R1 that is the reciprocal of the lambda in
/// the classical statement A = A(alpha_hat / lambda, alpha).
struct ProductCertificate {
  Regime regime;
  CVector x;
  CVector y;
  CVector u;
  CVector v;
  RankOneOutcome outcome;
  std::size_t k;        ///< block count of n over m
  std::size_t k_prime;  ///< block count of l over m
};

/// AB is not Toeplitz; (row, col) is an interior position where the
/// displacement of AB is nonzero, i.e. AB(row, col) != AB(row-1, col-1).
struct NotToeplitz {
  Regime regime;
  std::size_t row;
  std::size_t col;
};

using ProductVerdict = std::variant<ProductCertificate, NotToeplitz>;

inline bool accepted(const ProductVerdict& v) {
  return std::holds_alternative<ProductCertificate>(v);
}

/// O(n + m + l) decision of whether AB is Toeplitz. A zero factor is
/// accepted with a BothZero certificate. Throws DimensionError on an inner
/// dimension mismatch.
ProductVerdict product_is_toeplitz(const AsymToeplitz& a, const AsymToeplitz& b,
                                   const Tolerance& tol = {});

/// Delta(I_{n x m} B_0) for B of size m x l.
DenseMatrix delta_identity_times(std::size_t n, const AsymToeplitz& b);

/// Delta(A_0 I_{m x l}) for A of size n x m.
DenseMatrix delta_times_identity(const AsymToeplitz& a, std::size_t l);

/// Delta(I_{n x m} I_{m x l}).
DenseMatrix delta_identity_product(std::size_t n, std::size_t m, std::size_t l);

/// Structured Delta(AB) and its first-column/first-row aggregates:
/// Delta(AB) = x (x) y - u (x) v + gamma1 (x) zeta_0 + e_0 (x) gamma2.
struct ProductDisplacement {
  DenseMatrix matrix;
  CVector gamma1;  ///< A_0 b + a0 b#_(m,n) + b0 a + a0 b0 e_0
  CVector gamma2;  ///< S_l B_0^* S_m^* alpha + conj(a0) beta + conj(b0) alpha#_(m,l)
};

/// Assembles Delta(AB) term by term from the parameters of A and B without
/// forming AB. Throws DimensionError on an inner dimension mismatch.
ProductDisplacement delta_product_structured(const AsymToeplitz& a, const AsymToeplitz& b);

}  // namespace toeplitz
