#pragma once
// Random (a, j, k) triples for the splice property. a is a matrix Lie algebra
// of upper-triangular rational matrices written in a random basis, and j, k
// are picked from series terms so the hypotheses hold often enough.

#include <random>
#include <vector>

#include "dlab/lie/algebra.hpp"

namespace dlab::fixtures {

struct SpliceInstance {
  LieAlgebraSC a;
  Subspace j;
  Subspace k;
};

inline Rational small_rational(std::mt19937_64& rng, long span = 3) {
  std::uniform_int_distribution<long> num(-span, span), den(1, 3);
  const long p = num(rng);
  Rational q(p, den(rng));
  q.canonicalize();
  return q;
}

inline RationalMatrix random_upper_triangular(std::mt19937_64& rng, std::size_t n, int diagonal_mode) {
  RationalMatrix m(n, RationalVector(n, Rational(0)));
  std::bernoulli_distribution keep(0.6);
  const Rational scalar = small_rational(rng);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r + 1; c < n; ++c)
      if (keep(rng)) m[r][c] = small_rational(rng);
    // 0: strictly upper, 1: scalar diagonal, 2: arbitrary diagonal
    if (diagonal_mode == 1) m[r][r] = scalar;
    if (diagonal_mode == 2) m[r][r] = small_rational(rng);
  }
  return m;
}

inline RationalMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    RationalMatrix p(n, RationalVector(n));
    for (auto& row : p)
      for (auto& x : row) x = small_rational(rng, 2);
    if (Subspace::span(n, p).dim() == n) return p;
  }
}

inline SpliceInstance random_splice_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size(3, 5), count(2, 3);
  std::uniform_int_distribution<int> mode(0, 2), pick(0, 4);
  std::bernoulli_distribution nilpotent_bias(0.6);
  const std::size_t n = size(rng);
  std::vector<RationalMatrix> gens;
  const std::size_t g = count(rng);
  for (std::size_t t = 0; t < g; ++t)
    gens.push_back(random_upper_triangular(rng, n, nilpotent_bias(rng) ? 0 : mode(rng)));
  LieAlgebraSC a = matrix_lie_algebra(gens);
  a = change_basis(a, random_invertible(rng, a.dim()));

  const auto derived = derived_series(a);
  const auto lcs = lower_central_series(a);
  auto term = [](const std::vector<Subspace>& s, std::size_t i) { return s[std::min(i, s.size() - 1)]; };
  const Subspace all = whole(a);
  const Subspace zero = Subspace::zero(a.dim());
  switch (pick(rng)) {
    case 0:
      return {a, all, product_space(a, all, all)};
    case 1:
      return {a, term(derived, 1), product_space(a, term(derived, 1), term(derived, 1))};
    case 2:
      return {a, term(derived, 1), zero};
    case 3:
      return {a, term(lcs, 1), term(lcs, 2)};
    default:
      return {a, zero, zero};
  }
}

}  // namespace dlab::fixtures
