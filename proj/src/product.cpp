#include "toeplitz/product.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace toeplitz {

namespace {

std::size_t argmax_abs(std::span<const Complex> v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  return best;
}

void require_chain(const AsymToeplitz& a, const AsymToeplitz& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("inner dimensions differ: A is " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + ", B is " + std::to_string(b.rows()) +
                         "x" + std::to_string(b.cols()));
  }
}

// A_0 x for x of length m.
CVector apply_core(const AsymToeplitz& a, std::span<const Complex> x) {
  CVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) r[i] += a(i, j) * x[j];
  return r;
}

// S_l B_0^* S_m^* alpha for B of size m x l and alpha of length m.
CVector shifted_adjoint_apply(const AsymToeplitz& b, std::span<const Complex> alpha) {
  const std::size_t m = b.rows();
  const std::size_t l = b.cols();
  CVector up(m);  // S_m^* alpha
  for (std::size_t i = 0; i + 1 < m; ++i) up[i] = alpha[i + 1];
  CVector r(l);
  for (std::size_t j = 0; j + 1 < l; ++j) {
    Complex s{};
    for (std::size_t i = 0; i < m; ++i)
      if (i != j) s += std::conj(b(i, j)) * up[i];
    r[j + 1] = s;
  }
  return r;
}

// Locates an interior entry where x (x) y - u (x) v is largest among the
// rows at argmax|x|, argmax|u| and the columns at argmax|y|, argmax|v|. The
// difference has rank at most two, and if it is nonzero one of those four
// lines carries a nonzero entry.
std::pair<std::size_t, std::size_t> locate_mismatch(const ComparisonVectors& cv) {
  auto diff = [&](std::size_t i, std::size_t j) {
    return std::abs(cv.x[i] * std::conj(cv.y[j]) - cv.u[i] * std::conj(cv.v[j]));
  };
  std::pair<std::size_t, std::size_t> best{1, 1};
  double best_val = -1.0;
  auto consider = [&](std::size_t i, std::size_t j) {
    const double d = diff(i, j);
    if (d > best_val) {
      best_val = d;
      best = {i, j};
    }
  };
  for (std::size_t i : {argmax_abs(cv.x), argmax_abs(cv.u)})
    for (std::size_t j = 0; j < cv.y.size(); ++j) consider(i, j);
  for (std::size_t j : {argmax_abs(cv.y), argmax_abs(cv.v)})
    for (std::size_t i = 0; i < cv.x.size(); ++i) consider(i, j);
  return best;
}

}  // namespace

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::R1: return "R1";
    case Regime::R2: return "R2";
    case Regime::R3: return "R3";
    case Regime::R4: return "R4";
  }
  return "?";
}

std::optional<Regime> parse_regime(std::string_view s) {
  std::string up(s);
  std::transform(up.begin(), up.end(), up.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (up == "R1") return Regime::R1;
  if (up == "R2") return Regime::R2;
  if (up == "R3") return Regime::R3;
  if (up == "R4") return Regime::R4;
  return std::nullopt;
}

Regime classify_regime(std::size_t n, std::size_t m, std::size_t l) {
  if (n == 0 || m == 0 || l == 0) throw DimensionError("sizes must be positive");
  if (n <= m) return l <= m ? Regime::R1 : Regime::R3;
  return l <= m ? Regime::R4 : Regime::R2;
}

std::optional<RankOneOutcome> rank_one_equal(std::span<const Complex> x,
                                             std::span<const Complex> y,
                                             std::span<const Complex> xp,
                                             std::span<const Complex> yp,
                                             const Tolerance& tol) {
  if (x.size() != xp.size() || y.size() != yp.size()) {
    throw DimensionError("rank_one_equal: paired vectors must have equal lengths");
  }
  const BothZero zeros{is_zero_vector(x, tol), is_zero_vector(y, tol), is_zero_vector(xp, tol),
                       is_zero_vector(yp, tol)};
  const bool lhs_zero = zeros.x_zero || zeros.y_zero;
  const bool rhs_zero = zeros.xp_zero || zeros.yp_zero;
  if (lhs_zero && rhs_zero) return zeros;
  if (lhs_zero != rhs_zero) return std::nullopt;

  const std::size_t p = argmax_abs(xp);
  const Complex pivot = xp[p];
  if (x[p] == Complex{}) return std::nullopt;
  const Complex lambda = x[p] * std::conj(pivot) / std::norm(pivot);
  const double pivot_abs = std::abs(pivot);

  // x_i = lambda xp_i  <=>  x_i xp_p = x_p xp_i
  const double bound_x = tol.bound(std::max(max_abs(x), std::abs(lambda) * max_abs(xp))) * pivot_abs;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::abs(x[i] * pivot - x[p] * xp[i]) > bound_x) return std::nullopt;

  // yp_j = conj(lambda) y_j  <=>  yp_j conj(xp_p) = conj(x_p) y_j
  const double bound_y = tol.bound(std::max(max_abs(yp), std::abs(lambda) * max_abs(y))) * pivot_abs;
  for (std::size_t j = 0; j < y.size(); ++j)
    if (std::abs(yp[j] * std::conj(pivot) - std::conj(x[p]) * y[j]) > bound_y) return std::nullopt;

  return Proportional{lambda};
}

CVector alpha_hat(const AsymToeplitz& a) {
  // Entry i >= 1 is A_0(i-1, m-1).
  const std::size_t m = a.cols();
  CVector r(a.rows());
  for (std::size_t i = 1; i < a.rows(); ++i)
    if (i - 1 != m - 1) r[i] = a(i - 1, m - 1);
  return r;
}

CVector b_hat(const AsymToeplitz& b) {
  // Entry j >= 1 is conj(B_0(m-1, j-1)).
  const std::size_t m = b.rows();
  CVector r(b.cols());
  for (std::size_t j = 1; j < b.cols(); ++j)
    if (j - 1 != m - 1) r[j] = std::conj(b(m - 1, j - 1));
  return r;
}

CVector sharp(std::span<const Complex> x, std::size_t to_dim) {
  if (x.empty() || x[0] != Complex{}) {
    throw std::invalid_argument("sharp: input must carry a structural zero at index 0");
  }
  CVector r(to_dim);
  std::copy_n(x.begin(), std::min(to_dim, x.size()), r.begin());
  return r;
}

std::size_t block_count(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw DimensionError("sizes must be positive");
  return (n - 1) / m;
}

ComparisonVectors comparison_vectors(const AsymToeplitz& a, const AsymToeplitz& b) {
  require_chain(a, b);
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  const std::size_t l = b.cols();
  ComparisonVectors cv{classify_regime(n, m, l), a.col_tail(), b.row_params(), alpha_hat(a),
                       b_hat(b)};
  if (m < n) cv.u[m] += a.corner();
  if (m < l) cv.v[m] += std::conj(b.corner());
  return cv;
}

ProductVerdict product_is_toeplitz(const AsymToeplitz& a, const AsymToeplitz& b,
                                   const Tolerance& tol) {
  ComparisonVectors cv = comparison_vectors(a, b);
  auto outcome = rank_one_equal(cv.x, cv.y, cv.u, cv.v, tol);
  if (!outcome) {
    const auto [row, col] = locate_mismatch(cv);
    return NotToeplitz{cv.regime, row, col};
  }
  return ProductCertificate{cv.regime,
                            std::move(cv.x),
                            std::move(cv.y),
                            std::move(cv.u),
                            std::move(cv.v),
                            *outcome,
                            block_count(a.rows(), a.cols()),
                            block_count(b.cols(), b.rows())};
}

DenseMatrix delta_identity_times(std::size_t n, const AsymToeplitz& b) {
  const std::size_t m = b.rows();
  const std::size_t l = b.cols();
  DenseMatrix d = outer(sharp(b.col_tail(), n), basis(l, 0)) + outer(basis(n, 0), b.row_params());
  if (m < n) d = d - outer(basis(n, m), b_hat(b));
  return d;
}

DenseMatrix delta_times_identity(const AsymToeplitz& a, std::size_t l) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  DenseMatrix d = outer(a.col_tail(), basis(l, 0)) + outer(basis(n, 0), sharp(a.row_params(), l));
  if (m < l) d = d - outer(alpha_hat(a), basis(l, m));
  return d;
}

DenseMatrix delta_identity_product(std::size_t n, std::size_t m, std::size_t l) {
  DenseMatrix d = outer(basis(n, 0), basis(l, 0));
  if (m < std::min(n, l)) d = d - outer(basis(n, m), basis(l, m));
  return d;
}

ProductDisplacement delta_product_structured(const AsymToeplitz& a, const AsymToeplitz& b) {
  require_chain(a, b);
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  const std::size_t l = b.cols();
  const Complex a0 = a.corner();
  const Complex b0 = b.corner();
  const CVector& at = a.col_tail();
  const CVector& alpha = a.row_params();
  const CVector& bt = b.col_tail();
  const CVector& beta = b.row_params();

  const CVector a0b = apply_core(a, bt);
  const CVector tail_row = shifted_adjoint_apply(b, alpha);

  DenseMatrix delta = outer(at, beta) - outer(alpha_hat(a), b_hat(b)) +
                      outer(a0b, basis(l, 0)) + outer(basis(n, 0), tail_row) +
                      (a0 * b0) * delta_identity_product(n, m, l) +
                      b0 * delta_times_identity(a, l) + a0 * delta_identity_times(n, b);

  CVector gamma1(n);
  const CVector b_sharp = sharp(bt, n);
  for (std::size_t i = 0; i < n; ++i) gamma1[i] = a0b[i] + a0 * b_sharp[i] + b0 * at[i];
  gamma1[0] += a0 * b0;

  CVector gamma2(l);
  const CVector alpha_sharp = sharp(alpha, l);
  for (std::size_t j = 0; j < l; ++j)
    gamma2[j] = tail_row[j] + std::conj(a0) * beta[j] + std::conj(b0) * alpha_sharp[j];

  return {std::move(delta), std::move(gamma1), std::move(gamma2)};
}

}  // namespace toeplitz
