#include "toeplitz/types.hpp"

#include <algorithm>
#include <cmath>

namespace toeplitz {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

double max_abs(std::span<const Complex> v) {
  double best = 0.0;
  for (const Complex& z : v) best = std::max(best, std::abs(z));
  return best;
}

bool is_zero_vector(std::span<const Complex> v, const Tolerance& tol) {
  return std::all_of(v.begin(), v.end(), [&](Complex z) { return tol.is_zero(z); });
}

CVector basis(std::size_t n, std::size_t k) {
  if (k >= n) throw DimensionError("basis index out of range");
  CVector e(n);
  e[k] = 1.0;
  return e;
}

}  // namespace toeplitz
