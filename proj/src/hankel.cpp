#include "toeplitz/hankel.hpp"

namespace toeplitz {

ProductVerdict hankel_product_is_toeplitz(const AsymHankel& h1, const AsymHankel& h2,
                                          const Tolerance& tol) {
  return product_is_toeplitz(h1.column_core(), h2.row_core(), tol);
}

ProductVerdict hankel_times_toeplitz_is_hankel(const AsymHankel& h, const AsymToeplitz& b,
                                               const Tolerance& tol) {
  return product_is_toeplitz(h.row_core(), b, tol);
}

ProductVerdict toeplitz_times_hankel_is_hankel(const AsymToeplitz& a, const AsymHankel& h,
                                               const Tolerance& tol) {
  return product_is_toeplitz(a, h.column_core(), tol);
}

}  // namespace toeplitz
