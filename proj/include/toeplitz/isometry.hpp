#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "toeplitz/core.hpp"
#include "toeplitz/product.hpp"

namespace toeplitz {

enum class IsometryRegime {
  MleN,  ///< m <= n
  NltM,  ///< n < m
};

std::string_view to_string(IsometryRegime r);

/// Diagnostics shared by accepted and rejected candidates.
struct IsometryDiagnostics {
  IsometryRegime regime;
  CVector w;                          ///< a_hat, plus conj(a0) at index n when n < m
  std::optional<RankOneOutcome> match;  ///< alpha (x) alpha against w (x) w
  double residual_norm;               ///< max-norm of isometry_residual
  double column_norm_sq;              ///< sum of |a_i|^2 over column 0, corner included
};

struct IsometryCertificate : IsometryDiagnostics {};
struct NotIsometry : IsometryDiagnostics {};

using IsometryVerdict = std::variant<IsometryCertificate, NotIsometry>;

inline bool accepted(const IsometryVerdict& v) {
  return std::holds_alternative<IsometryCertificate>(v);
}

inline const IsometryDiagnostics& diagnostics(const IsometryVerdict& v) {
  return std::visit([](const auto& d) -> const IsometryDiagnostics& { return d; }, v);
}

/// S_m A_0^* eps_{n-1} in C^m: (0, conj a_{n-1}, ..., conj a_{n-m+1}) when
/// m <= n, (0, conj a_{n-1}, ..., conj a_1, 0, alpha_1, ..., alpha_{m-n-1})
/// when n < m. Equals alpha_hat of the adjoint.
CVector a_hat(const AsymToeplitz& a);

/// The vector w matched against alpha in the self rank-one test.
CVector isometry_comparison_vector(const AsymToeplitz& a);

/// r = A_0^* a + conj(a0) a#_(n,m) + a0 alpha + ((|a0|^2 - ||a||^2 - 1) / 2) eps_0,
/// with ||a||^2 taken over a_1..a_{n-1}. Column 0 of Delta(A^*A - I_m) is r
/// below the corner and 2 r_0 at the corner.
CVector isometry_residual(const AsymToeplitz& a);

/// Sum of |a_i|^2 for i = 0..n-1 (corner plus column tail).
double unit_column_check(const AsymToeplitz& a);

/// A^*A == I_m decided without forming A^*A. Accepts when alpha (x) alpha
/// equals w (x) w (both vanish, or alpha = lambda w with ||lambda| - 1| <=
/// tol.atol), the residual max-norm is <= tol.atol and the column norm is 1
/// within tol.atol. The rank-one test itself uses the full policy.
IsometryVerdict is_isometry(const AsymToeplitz& a, const Tolerance& tol = {});

/// H is an isometry iff the Toeplitz matrix P_n H is.
IsometryVerdict hankel_is_isometry(const AsymHankel& h, const Tolerance& tol = {});

}  // namespace toeplitz
