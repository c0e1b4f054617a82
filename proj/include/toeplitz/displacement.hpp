#pragma once

#include <cstddef>

#include "toeplitz/core.hpp"
#include "toeplitz/dense.hpp"

namespace toeplitz {

/// Delta A = u (x) eps_0 + e_0 (x) v for a Toeplitz A. The corner lives in
/// u[0]; v[0] is always 0, which makes the split unique.
struct DisplacementPair {
  CVector u;
  CVector v;

  /// Dense n x m matrix u (x) eps_0 + e_0 (x) v.
  DenseMatrix assemble() const;
};

/// M - S_n M S_m^*, computed by index shifting: entry (i, j) becomes
/// M(i, j) - M(i-1, j-1) for i, j >= 1; row 0 and column 0 are kept.
DenseMatrix displacement_dense(const DenseMatrix& m);

/// u = a0 e_0 + a, v = alpha.
DisplacementPair displacement_structured(const AsymToeplitz& a);

/// Sum over i < min(n, m) of S_n^i D S_m^{*i}: each entry is the sum of D
/// along its diagonal back to row 0 or column 0. Inverts displacement_dense
/// for every matrix, Toeplitz or not.
DenseMatrix reconstruct(const DenseMatrix& d);

/// True iff the displacement vanishes, within tol, outside row 0 and
/// column 0. The scale is the largest modulus in m, so this agrees with
/// dense_is_toeplitz under the same policy.
bool is_toeplitz_by_displacement(const DenseMatrix& m, const Tolerance& tol = {});

}  // namespace toeplitz
