#pragma once

#include "toeplitz/core.hpp"
#include "toeplitz/product.hpp"

namespace toeplitz {

/// H1 H2 for H1 = A P_m (n x m) and H2 = P_m B (m x l). Since P_m^2 = I_m the
/// product is AB, so the verdict is product_is_toeplitz(A, B). A is H1's
/// column core and B is H2's row core. Throws DimensionError on a mismatch.
ProductVerdict hankel_product_is_toeplitz(const AsymHankel& h1, const AsymHankel& h2,
                                          const Tolerance& tol = {});

/// H B for H = P_n A: HB = P_n (AB) is Hankel iff AB is Toeplitz. A is H's
/// row core. Throws DimensionError on a mismatch.
ProductVerdict hankel_times_toeplitz_is_hankel(const AsymHankel& h, const AsymToeplitz& b,
                                               const Tolerance& tol = {});

/// A H for H = C P_l: AH = (AC) P_l is Hankel iff AC is Toeplitz. C is H's
/// column core. Throws DimensionError on a mismatch.
ProductVerdict toeplitz_times_hankel_is_hankel(const AsymToeplitz& a, const AsymHankel& h,
                                               const Tolerance& tol = {});

}  // namespace toeplitz
