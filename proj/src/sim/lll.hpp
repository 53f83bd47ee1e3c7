#pragma once
// Exact LLL reduction with rational Gram-Schmidt data.

#include "dlab/exact/rational.hpp"

namespace dlab::detail {

inline Integer round_nearest(const Rational& q) {
  // floor(q + 1/2)
  Rational shifted = q + Rational(1, 2);
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  return out;
}

inline Rational dot(const IntegerVector& a, const RationalVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

/// Reduces the rows of b in place (delta = 3/4). Rows must be independent.
inline void lll_reduce(IntegerMatrix& b) {
  const std::size_t n = b.size();
  if (n < 2) return;
  const std::size_t dim = b[0].size();
  const Rational delta(3, 4);
  RationalMatrix star(n, RationalVector(dim));
  RationalMatrix mu(n, RationalVector(n, Rational(0)));
  RationalVector norms(n);

  auto gram_schmidt = [&] {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < dim; ++c) star[i][c] = b[i][c];
      for (std::size_t j = 0; j < i; ++j) {
        mu[i][j] = dot(b[i], star[j]) / norms[j];
        for (std::size_t c = 0; c < dim; ++c) star[i][c] -= mu[i][j] * star[j][c];
      }
      norms[i] = 0;
      for (const auto& x : star[i]) norms[i] += x * x;
    }
  };

  gram_schmidt();
  std::size_t k = 1;
  while (k < n) {
    for (std::size_t jj = k; jj-- > 0;) {
      const Integer q = round_nearest(mu[k][jj]);
      if (q == 0) continue;
      for (std::size_t c = 0; c < dim; ++c) b[k][c] -= q * b[jj][c];
      for (std::size_t i = 0; i < jj; ++i) mu[k][i] -= Rational(q) * mu[jj][i];
      mu[k][jj] -= q;
    }
    if (norms[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1]) {
      ++k;
    } else {
      std::swap(b[k], b[k - 1]);
      gram_schmidt();
      k = k > 1 ? k - 1 : 1;
    }
  }
}

}  // namespace dlab::detail
