#include "toeplitz/isometry.hpp"

#include <cmath>

namespace toeplitz {

std::string_view to_string(IsometryRegime r) {
  return r == IsometryRegime::MleN ? "m_le_n" : "n_lt_m";
}

CVector a_hat(const AsymToeplitz& a) { return alpha_hat(adjoint(a)); }

CVector isometry_comparison_vector(const AsymToeplitz& a) {
  CVector w = a_hat(a);
  if (a.rows() < a.cols()) w[a.rows()] += std::conj(a.corner());
  return w;
}

CVector isometry_residual(const AsymToeplitz& a) {
  const std::size_t n = a.rows();
  const std::size_t m = a.cols();
  const Complex a0 = a.corner();
  const CVector& at = a.col_tail();
  const CVector& alpha = a.row_params();

  double tail_norm_sq = 0.0;
  for (const Complex& z : at) tail_norm_sq += std::norm(z);

  const CVector at_sharp = sharp(at, m);
  CVector r(m);
  for (std::size_t j = 0; j < m; ++j) {
    Complex s{};  // (A_0^* a)_j
    for (std::size_t i = 0; i < n; ++i)
      if (i != j) s += std::conj(a(i, j)) * at[i];
    r[j] = s + std::conj(a0) * at_sharp[j] + a0 * alpha[j];
  }
  r[0] += (std::norm(a0) - tail_norm_sq - 1.0) / 2.0;
  return r;
}

double unit_column_check(const AsymToeplitz& a) {
  double s = std::norm(a.corner());
  for (const Complex& z : a.col_tail()) s += std::norm(z);
  return s;
}

IsometryVerdict is_isometry(const AsymToeplitz& a, const Tolerance& tol) {
  IsometryDiagnostics d{
      a.cols() <= a.rows() ? IsometryRegime::MleN : IsometryRegime::NltM,
      isometry_comparison_vector(a),
      std::nullopt,
      max_abs(isometry_residual(a)),
      unit_column_check(a),
  };
  const CVector& alpha = a.row_params();
  d.match = rank_one_equal(alpha, alpha, d.w, d.w, tol);

  bool ok = d.match.has_value();
  if (ok) {
    if (const auto* p = std::get_if<Proportional>(&*d.match)) {
      ok = std::abs(std::abs(p->lambda) - 1.0) <= tol.atol;
    }
  }
  ok = ok && d.residual_norm <= tol.atol && std::abs(d.column_norm_sq - 1.0) <= tol.atol;
  if (ok) return IsometryCertificate{std::move(d)};
  return NotIsometry{std::move(d)};
}

IsometryVerdict hankel_is_isometry(const AsymHankel& h, const Tolerance& tol) {
  return is_isometry(h.row_core(), tol);
}

}  // namespace toeplitz
