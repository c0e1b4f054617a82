#include "toeplitz/families.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace toeplitz {

namespace {

class GaussianIntegers {
 public:
  explicit GaussianIntegers(std::uint64_t seed) : rng_(seed) {}

  Complex next() {
    const double re = dist_(rng_);
    return {re, static_cast<double>(dist_(rng_))};
  }

  CVector tail(std::size_t len) {
    CVector v(len);
    for (std::size_t i = 1; i < len; ++i) v[i] = next();
    return v;
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<int> dist_{-5, 5};
};

bool all_exact_zero(const CVector& v) {
  for (const Complex& z : v)
    if (z != Complex{}) return false;
  return true;
}

}  // namespace

FamilySpec FamilySpec::random(Regime regime, std::size_t n, std::size_t m, std::size_t l,
                              Complex lambda, std::uint64_t seed) {
  GaussianIntegers g(seed);
  FamilySpec s{regime, n, m, l, g.next(), g.next(), lambda, {}, {}};
  if (m >= 1) {
    s.a_free.resize(m - 1);
    s.b_free.resize(m - 1);
  }
  for (Complex& z : s.a_free) z = g.next();
  for (Complex& z : s.b_free) z = g.next();
  return s;
}

ToeplitzPair gen_pair(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  const std::size_t m = spec.m;
  const std::size_t l = spec.l;
  if (n == 0 || m == 0 || l == 0) throw SpecError("sizes must be positive");
  if (classify_regime(n, m, l) != spec.regime) {
    throw SpecError("sizes " + std::to_string(n) + "," + std::to_string(m) + "," +
                    std::to_string(l) + " do not satisfy regime " +
                    std::string(to_string(spec.regime)));
  }
  if (spec.lambda == Complex{}) throw SpecError("lambda must be nonzero");
  if (spec.a_free.size() != m - 1 || spec.b_free.size() != m - 1) {
    throw SpecError("free parameter vectors must have length m - 1");
  }

  const Complex lambda = spec.lambda;
  // 1/lambda and 1/conj(lambda) without complex division, so that dyadic
  // lambdas (|lambda|^2 a power of two) stay exact.
  const double norm = std::norm(lambda);
  const Complex inv_lambda = std::conj(lambda) / norm;
  const Complex inv_conj_lambda = lambda / norm;

  CVector alpha(m);
  if (n <= m) {
    for (std::size_t j = 1; j < m; ++j) alpha[j] = spec.a_free[j - 1];
  } else {
    // a_i = lambda conj(alpha_{m-i})  =>  alpha_{m-i} = conj(a_i / lambda)
    for (std::size_t i = 1; i < m; ++i) alpha[m - i] = std::conj(spec.a_free[i - 1] * inv_lambda);
  }
  CVector a(n);
  for (std::size_t i = 1; i < n; ++i) {
    Complex u;
    if (i < m) {
      u = std::conj(alpha[m - i]);
    } else if (i == m) {
      u = spec.a0;
    } else {
      u = a[i - m];
    }
    a[i] = lambda * u;
  }

  CVector b(m);
  for (std::size_t i = 1; i < m; ++i) b[i] = spec.b_free[i - 1];
  CVector beta(l);
  for (std::size_t j = 1; j < l; ++j) {
    Complex v;
    if (j < m) {
      v = std::conj(b[m - j]);
    } else if (j == m) {
      v = std::conj(spec.b0);
    } else {
      v = beta[j - m];
    }
    beta[j] = inv_conj_lambda * v;
  }

  return {AsymToeplitz(spec.a0, std::move(a), std::move(alpha)),
          AsymToeplitz(spec.b0, std::move(b), std::move(beta))};
}

std::string_view to_string(DegenerateForm f) {
  switch (f) {
    case DegenerateForm::RowBandA: return "form-a";
    case DegenerateForm::ColBandB: return "form-b";
    case DegenerateForm::LambdaZero: return "lambda-zero";
    case DegenerateForm::LambdaInfinity: return "lambda-inf";
  }
  return "?";
}

ToeplitzPair gen_degenerate(DegenerateForm form, std::size_t n, std::size_t m, std::size_t l,
                            std::uint64_t seed) {
  if (n == 0 || m == 0 || l == 0) throw SpecError("sizes must be positive");
  GaussianIntegers g(seed);
  Complex a0 = g.next();
  Complex b0 = g.next();
  CVector a = g.tail(n);
  CVector alpha = g.tail(m);
  CVector b = g.tail(m);
  CVector beta = g.tail(l);

  // Entries of alpha that reach alpha_hat, and of b that reach b_hat.
  auto clear_alpha_hat = [&] {
    for (std::size_t i = 1; i < std::min(n, m); ++i) alpha[m - i] = 0.0;
  };
  auto clear_b_hat = [&] {
    for (std::size_t j = 1; j < std::min(l, m); ++j) b[m - j] = 0.0;
  };

  switch (form) {
    case DegenerateForm::RowBandA:
      if (n > m) throw SpecError("form-a needs n <= m");
      a.assign(n, 0.0);
      clear_alpha_hat();
      break;
    case DegenerateForm::ColBandB:
      if (l > m) throw SpecError("form-b needs l <= m");
      beta.assign(l, 0.0);
      clear_b_hat();
      break;
    case DegenerateForm::LambdaZero:
      // a = 0 and v = b_hat (+ conj(b0) zeta_m) = 0
      a.assign(n, 0.0);
      clear_b_hat();
      if (m < l) {
        b0 = 0.0;
        for (std::size_t j = 1; j + m < l; ++j) beta[j] = 0.0;
      }
      break;
    case DegenerateForm::LambdaInfinity:
      // beta = 0 and u = alpha_hat (+ a0 e_m) = 0
      beta.assign(l, 0.0);
      clear_alpha_hat();
      if (m < n) {
        a0 = 0.0;
        for (std::size_t i = 1; i + m < n; ++i) a[i] = 0.0;
      }
      break;
  }
  return {AsymToeplitz(a0, std::move(a), std::move(alpha)),
          AsymToeplitz(b0, std::move(b), std::move(beta))};
}

ToeplitzPair perturb_to_break(const ToeplitzPair& pair) {
  const auto& [a, b] = pair;
  if (a.cols() != b.rows()) throw DimensionError("inner dimensions differ");
  if (all_exact_zero(a.col_tail()) || all_exact_zero(b.row_params())) {
    throw PreconditionError("perturb_to_break needs a != 0 and beta != 0");
  }
  const std::size_t m = a.cols();
  if (m >= 2) {
    CVector alpha = a.row_params();
    alpha[m - 1] += 1.0;
    return {AsymToeplitz(a.corner(), a.col_tail(), std::move(alpha)), b};
  }
  return {AsymToeplitz(a.corner() + 1.0, a.col_tail(), a.row_params()), b};
}

}  // namespace toeplitz
