#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "toeplitz/core.hpp"
#include "toeplitz/dense.hpp"
#include "toeplitz/product.hpp"

namespace toeplitz::testing {

using Rng = std::mt19937_64;

/// Gaussian integer with both parts uniform in [lo, hi].
Complex gaussian_int(Rng& rng, int lo = -5, int hi = 5);

/// Toeplitz matrix with Gaussian-integer diagonals.
AsymToeplitz random_toeplitz(Rng& rng, std::size_t n, std::size_t m, int lo = -5, int hi = 5);

DenseMatrix random_dense(Rng& rng, std::size_t n, std::size_t m, int lo = -5, int hi = 5);

/// Real-valued uniform(-1, 1) entries in both parts.
AsymToeplitz random_real_toeplitz(Rng& rng, std::size_t n, std::size_t m);

/// Brute-force oracles built from dense products only.
DenseMatrix dense_product(const AsymToeplitz& a, const AsymToeplitz& b);
bool oracle_product_is_toeplitz(const AsymToeplitz& a, const AsymToeplitz& b,
                                const Tolerance& tol = Tolerance::exact());
DenseMatrix oracle_delta_product(const AsymToeplitz& a, const AsymToeplitz& b);

/// A_0 = A - a0 I_{n x m}.
DenseMatrix dense_without_corner(const AsymToeplitz& a);
/// S_n A_0 eps_{m-1}.
CVector oracle_alpha_hat(const AsymToeplitz& a);
/// S_l B_0^* eps_{m-1}.
CVector oracle_b_hat(const AsymToeplitz& b);
/// S_m A_0^* eps_{n-1}.
CVector oracle_a_hat(const AsymToeplitz& a);
/// I_{to x from} x.
CVector oracle_sharp(const CVector& x, std::size_t to_dim);
/// Max-norm of A^*A - I_m.
double oracle_isometry_error(const AsymToeplitz& a);

/// First m columns (m <= n) of an n x n unitary circulant with random
/// unimodular eigenvalues: a Toeplitz isometry.
AsymToeplitz unitary_circulant_columns(Rng& rng, std::size_t n, std::size_t m);

/// 3 x 2 isometry with a0 = i/2.
AsymToeplitz example_isometry();
/// The 4 x 5 and 5 x 3 pair with symbolic entries a, b, c, d, e, lambda.
std::pair<AsymToeplitz, AsymToeplitz> example_product(Complex a, Complex b, Complex c, Complex d,
                                                      Complex e, Complex lambda);

/// Dyadic lambdas: |lambda|^2 is a power of two, so lambda and 1/lambda are exact.
inline constexpr Complex kDyadicLambdas[] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1}, {2, 0},
                                             {0, 2},  {1, 1},  {1, -1}, {-1, 1}, {0.5, 0},
                                             {-2, 0}, {-1, -1}};

/// True when (n, m, l) falls in regime r.
bool admissible(Regime r, std::size_t n, std::size_t m, std::size_t l);

}  // namespace toeplitz::testing
