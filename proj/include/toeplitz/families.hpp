#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "toeplitz/core.hpp"
#include "toeplitz/product.hpp"

namespace toeplitz {

using ToeplitzPair = std::pair<AsymToeplitz, AsymToeplitz>;

/// Parameters of a product-Toeplitz pair in one size regime.
///
/// The A side is free in alpha_1..alpha_{m-1} for R1/R3 and in a_1..a_{m-1}
/// for R2/R4 (the other half is derived). The B side is free in
/// b_1..b_{m-1}. Both free vectors have length m - 1, without the
/// structural zero.
struct FamilySpec {
  Regime regime = Regime::R1;
  std::size_t n = 1;
  std::size_t m = 1;
  std::size_t l = 1;
  Complex a0{};
  Complex b0{};
  Complex lambda{1.0, 0.0};
  CVector a_free;
  CVector b_free;

  /// Fills a0, b0 and both free vectors with Gaussian integers in [-5, 5]^2
  /// drawn from a generator seeded with seed.
  static FamilySpec random(Regime regime, std::size_t n, std::size_t m, std::size_t l,
                           Complex lambda, std::uint64_t seed);
};

/// Builds (A, B) whose product is Toeplitz, with certificate lambda in the
/// product-module convention (a = lambda u, v = conj(lambda) beta). Throws
/// SpecError when the regime does not match (n, m, l), lambda is 0 or a free
/// vector has the wrong length.
ToeplitzPair gen_pair(const FamilySpec& spec);

enum class DegenerateForm {
  RowBandA,        ///< a = 0 and alpha_hat = 0; needs n <= m
  ColBandB,        ///< beta = 0 and b_hat = 0; needs l <= m
  LambdaZero,      ///< a = 0 and v = 0
  LambdaInfinity,  ///< u = 0 and beta = 0
};

std::string_view to_string(DegenerateForm f);

/// Pair whose product is Toeplitz through a vanishing side of the rank-one
/// equation. Every entry that the form leaves free is a Gaussian integer in
/// [-5, 5]^2 drawn from seed. Throws SpecError for a band form whose size
/// condition fails.
ToeplitzPair gen_degenerate(DegenerateForm form, std::size_t n, std::size_t m, std::size_t l,
                            std::uint64_t seed);

/// Adds 1 to one entry that feeds u but neither a, beta nor v: alpha_{m-1}
/// when m >= 2, otherwise a0 (then m < n and u_m = a0). The interior of
/// Delta(AB) then gains -e_p (x) v with v != 0, so AB is not Toeplitz.
/// Throws PreconditionError if a = 0 or beta = 0 exactly, DimensionError on
/// incompatible sizes.
ToeplitzPair perturb_to_break(const ToeplitzPair& pair);

}  // namespace toeplitz
