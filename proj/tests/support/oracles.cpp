#include "oracles.hpp"

#include <cmath>
#include <numbers>

namespace toeplitz::testing {

Complex gaussian_int(Rng& rng, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  const double re = dist(rng);
  const double im = dist(rng);
  return {re, im};
}

AsymToeplitz random_toeplitz(Rng& rng, std::size_t n, std::size_t m, int lo, int hi) {
  const Complex a0 = gaussian_int(rng, lo, hi);
  CVector a(n), alpha(m);
  for (std::size_t i = 1; i < n; ++i) a[i] = gaussian_int(rng, lo, hi);
  for (std::size_t j = 1; j < m; ++j) alpha[j] = gaussian_int(rng, lo, hi);
  return AsymToeplitz(a0, std::move(a), std::move(alpha));
}

DenseMatrix random_dense(Rng& rng, std::size_t n, std::size_t m, int lo, int hi) {
  DenseMatrix d(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) d(i, j) = gaussian_int(rng, lo, hi);
  return d;
}

AsymToeplitz random_real_toeplitz(Rng& rng, std::size_t n, std::size_t m) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  auto draw = [&] {
    const double re = dist(rng);
    const double im = dist(rng);
    return Complex{re, im};
  };
  const Complex a0 = draw();
  CVector a(n), alpha(m);
  for (std::size_t i = 1; i < n; ++i) a[i] = draw();
  for (std::size_t j = 1; j < m; ++j) alpha[j] = draw();
  return AsymToeplitz(a0, std::move(a), std::move(alpha));
}

DenseMatrix dense_product(const AsymToeplitz& a, const AsymToeplitz& b) {
  return dense_mul(to_dense(a), to_dense(b));
}

bool oracle_product_is_toeplitz(const AsymToeplitz& a, const AsymToeplitz& b,
                                const Tolerance& tol) {
  return dense_is_toeplitz(dense_product(a, b), tol);
}

DenseMatrix oracle_delta_product(const AsymToeplitz& a, const AsymToeplitz& b) {
  const DenseMatrix p = dense_product(a, b);
  const DenseMatrix sn = shift_matrix(p.rows());
  const DenseMatrix sl = shift_matrix(p.cols());
  return p - dense_mul(dense_mul(sn, p), sl.conj_transpose());
}

DenseMatrix dense_without_corner(const AsymToeplitz& a) {
  return to_dense(a) - a.corner() * rect_identity(a.rows(), a.cols());
}

CVector oracle_alpha_hat(const AsymToeplitz& a) {
  const DenseMatrix s = dense_mul(shift_matrix(a.rows()), dense_without_corner(a));
  return s.column(a.cols() - 1);
}

CVector oracle_b_hat(const AsymToeplitz& b) {
  const DenseMatrix s =
      dense_mul(shift_matrix(b.cols()), dense_without_corner(b).conj_transpose());
  return s.column(b.rows() - 1);
}

CVector oracle_a_hat(const AsymToeplitz& a) {
  const DenseMatrix s =
      dense_mul(shift_matrix(a.cols()), dense_without_corner(a).conj_transpose());
  return s.column(a.rows() - 1);
}

CVector oracle_sharp(const CVector& x, std::size_t to_dim) {
  return dense_apply(rect_identity(to_dim, x.size()), x);
}

double oracle_isometry_error(const AsymToeplitz& a) {
  const DenseMatrix d = to_dense(a);
  return max_abs_diff(dense_mul(d.conj_transpose(), d), rect_identity(a.cols(), a.cols()));
}

AsymToeplitz unitary_circulant_columns(Rng& rng, std::size_t n, std::size_t m) {
  const double two_pi = 2.0 * std::numbers::pi;
  std::uniform_real_distribution<double> angle(0.0, two_pi);
  CVector eig(n);
  for (auto& z : eig) z = std::polar(1.0, angle(rng));
  CVector c(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k)
      c[j] += eig[k] * std::polar(1.0, two_pi * double(j * k % n) / double(n));
    c[j] /= double(n);
  }
  const auto nn = std::ptrdiff_t(n);
  return AsymToeplitz::from_diagonals(
      n, m, [&](std::ptrdiff_t k) { return c[std::size_t(((k % nn) + nn) % nn)]; });
}

AsymToeplitz example_isometry() {
  const double s7 = std::sqrt(7.0);
  const Complex i{0.0, 1.0};
  const CVector row{0.5 * i, 0.25 - (s7 / 4.0) * i};
  const CVector col{0.5 * i, 0.5, s7 / 4.0 + 0.25 * i};
  return AsymToeplitz::from_first_row_col(row, col);
}

std::pair<AsymToeplitz, AsymToeplitz> example_product(Complex a, Complex b, Complex c, Complex d,
                                                      Complex e, Complex lambda) {
  const CVector a_row{a, b, lambda, 2.0 * lambda, 3.0 * lambda};
  const CVector a_col{a, 3, 2, 1};
  const CVector b_row{c, 5.0 * lambda, 4.0 * lambda};
  const CVector b_col{c, d, e, 4, 5};
  return {AsymToeplitz::from_first_row_col(a_row, a_col),
          AsymToeplitz::from_first_row_col(b_row, b_col)};
}

bool admissible(Regime r, std::size_t n, std::size_t m, std::size_t l) {
  return classify_regime(n, m, l) == r;
}

}  // namespace toeplitz::testing
