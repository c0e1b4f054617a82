#include "toeplitz/displacement.hpp"

#include <algorithm>

namespace toeplitz {

DenseMatrix DisplacementPair::assemble() const {
  // u (x) eps_0 fills column 0 with u; e_0 (x) v fills row 0 with conj(v).
  DenseMatrix d(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) d(i, 0) += u[i];
  for (std::size_t j = 0; j < v.size(); ++j) d(0, j) += std::conj(v[j]);
  return d;
}

DenseMatrix displacement_dense(const DenseMatrix& m) {
  DenseMatrix d = m;
  for (std::size_t i = 1; i < m.rows(); ++i)
    for (std::size_t j = 1; j < m.cols(); ++j) d(i, j) = m(i, j) - m(i - 1, j - 1);
  return d;
}

DisplacementPair displacement_structured(const AsymToeplitz& a) {
  DisplacementPair p{a.col_tail(), a.row_params()};
  p.u[0] = a.corner();
  return p;
}

DenseMatrix reconstruct(const DenseMatrix& d) {
  DenseMatrix r = d;
  for (std::size_t i = 1; i < d.rows(); ++i)
    for (std::size_t j = 1; j < d.cols(); ++j) r(i, j) = d(i, j) + r(i - 1, j - 1);
  return r;
}

bool is_toeplitz_by_displacement(const DenseMatrix& m, const Tolerance& tol) {
  const DenseMatrix d = displacement_dense(m);
  const double bound = tol.bound(max_abs(m));
  for (std::size_t i = 1; i < d.rows(); ++i)
    for (std::size_t j = 1; j < d.cols(); ++j)
      if (std::abs(d(i, j)) > bound) return false;
  return true;
}

}  // namespace toeplitz
