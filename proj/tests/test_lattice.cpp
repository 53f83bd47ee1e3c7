#include <gtest/gtest.h>

#include <random>

#include "dlab/error.hpp"
#include "dlab/lattice/chain.hpp"
#include "dlab/lattice/hnf.hpp"

using namespace dlab;

namespace {

RationalVector qv(std::initializer_list<long> v) {
  RationalVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

IntegerMatrix im(std::initializer_list<std::initializer_list<long>> rows) {
  IntegerMatrix out;
  for (auto r : rows) {
    IntegerVector row;
    for (long x : r) row.emplace_back(x);
    out.push_back(row);
  }
  return out;
}

// Oracle: for integer generators spanning Z^2 fully, the lattice determinant
// is the gcd of all 2x2 minors.
Integer minor_gcd_2d(const RationalMatrix& rows) {
  Integer g = 0;
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      Rational m = rows[a][0] * rows[b][1] - rows[a][1] * rows[b][0];
      g = gcd(g, m.get_num());
    }
  return g;
}

GaussianRational pythagorean(long m, long n) {
  long a = m * m - n * n, b = 2 * m * n, c = m * m + n * n;
  return {Rational(a, c), Rational(b, c)};
}

AlgebraicScalar sixth_root() {
  IntegerVector c{Integer(1), Integer(-1), Integer(1)};
  return AlgebraicScalar::from_minpoly(IntPolynomial(c), {0, 1, 0, 2});
}

AlgebraicScalar unit_non_integer() {
  IntegerVector c{Integer(2), Integer(-3), Integer(2)};
  return AlgebraicScalar::from_minpoly(IntPolynomial(c), {0, 1, 0, 1});
}

}  // namespace

TEST(Hnf, TwoGeneratorExample) {
  LatticeForm l = hnf({2, {qv({1, -1}), qv({1, 1})}});
  EXPECT_EQ(l.basis, im({{1, -1}, {0, 2}}));
  EXPECT_EQ(l.denominator, 1);
  EXPECT_EQ(l.rank(), 2u);
  EXPECT_EQ(l.covolume(), 2);
}

TEST(Hnf, IdentityAndEmpty) {
  LatticeForm id = hnf({2, {qv({1, 0}), qv({0, 1})}});
  EXPECT_EQ(id.basis, im({{1, 0}, {0, 1}}));
  EXPECT_EQ(id.covolume(), 1);

  LatticeForm empty = hnf({3, {}});
  EXPECT_EQ(empty.rank(), 0u);
  EXPECT_EQ(empty.covolume(), 1);
  EXPECT_TRUE(contains(empty, qv({0, 0, 0})));
  EXPECT_FALSE(contains(empty, qv({0, 1, 0})));
}

TEST(Hnf, RationalGeneratorsUseMinimalDenominator) {
  LatticeForm l = hnf({2, {{Rational(1, 2), Rational(0)}, {Rational(0), Rational(1, 3)}}});
  EXPECT_EQ(l.denominator, 6);
  EXPECT_EQ(l.basis, im({{3, 0}, {0, 2}}));
  EXPECT_EQ(l.covolume(), Rational(1, 6));
  // {1/2, 1} generates (1/2)Z.
  LatticeForm even = hnf({1, {{Rational(1, 2)}, {Rational(1)}}});
  EXPECT_EQ(even.denominator, 2);
  EXPECT_EQ(even.basis, im({{1}}));
}

TEST(Hnf, RejectsMismatchedDimensions) { EXPECT_THROW(hnf({2, {qv({1, 2, 3})}}), Error); }

TEST(Hnf, RandomGeneratorsPreserveSpanAndMatchMinorOracle) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> entry(-9, 9), count(1, 5), den(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 3;
    GenSet gens{n, {}};
    const long k = count(rng);
    for (long g = 0; g < k; ++g) {
      RationalVector v;
      for (std::size_t c = 0; c < n; ++c) v.emplace_back(entry(rng), den(rng));
      for (auto& x : v) x.canonicalize();
      gens.generators.push_back(v);
    }
    LatticeForm l = hnf(gens);
    // Span preservation, both directions.
    for (const auto& g : gens.generators) EXPECT_TRUE(contains(l, g));
    LatticeForm from_gens = hnf(gens);
    for (const auto& row : l.basis) {
      RationalVector v;
      for (const auto& x : row) v.emplace_back(Rational(x, l.denominator));
      for (auto& x : v) x.canonicalize();
      // Every basis vector is an integer combination of the generators:
      // adding it to the generators must not change the lattice.
      GenSet extended = gens;
      extended.generators.push_back(v);
      EXPECT_EQ(hnf(extended), from_gens);
    }
    // Idempotence: HNF of the basis reproduces it.
    GenSet basis_set{n, {}};
    for (const auto& row : l.basis) {
      RationalVector v;
      for (const auto& x : row) v.emplace_back(Rational(x, l.denominator));
      for (auto& x : v) x.canonicalize();
      basis_set.generators.push_back(v);
    }
    EXPECT_EQ(hnf(basis_set), l);
    // Centred reduction above pivots.
    const auto pivots = l.pivot_columns();
    for (std::size_t i = 0; i < l.rank(); ++i) {
      const Integer& p = l.basis[i][pivots[i]];
      EXPECT_GT(p, 0);
      for (std::size_t above = 0; above < i; ++above) {
        const Integer& x = l.basis[above][pivots[i]];
        EXPECT_TRUE(2 * x >= -p && 2 * x < p);
      }
    }
    if (n == 2 && l.rank() == 2) {
      RationalMatrix scaled;
      for (const auto& g : gens.generators) {
        RationalVector v;
        for (const auto& x : g) v.push_back(x * l.denominator);
        scaled.push_back(v);
      }
      Rational oracle(minor_gcd_2d(scaled));
      oracle /= l.denominator * l.denominator;
      EXPECT_EQ(l.covolume(), oracle);
    }
  }
}

TEST(Smith, InvariantFactors) {
  EXPECT_EQ(smith_invariants(im({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})),
            (IntegerVector{Integer(2), Integer(6), Integer(12)}));
  EXPECT_EQ(smith_invariants(im({{1, 1}})), (IntegerVector{Integer(1)}));
  EXPECT_EQ(smith_invariants(im({{0, 0}, {0, 0}})), IntegerVector{});
}

TEST(IntegerKernel, SaturatedBasis) {
  // x + y = 0 and 2x + 2y = 0: kernel spanned by (1, -1).
  IntegerMatrix k = integer_kernel(im({{1, 1}, {2, 2}}), 2);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE((k[0] == IntegerVector{Integer(1), Integer(-1)}) || (k[0] == IntegerVector{Integer(-1), Integer(1)}));
  // 2x - 4y = 0 has kernel generated by (2, 1), not by (4, 2).
  IntegerMatrix k2 = integer_kernel(im({{2, -4}}), 2);
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_EQ(k2[0], (IntegerVector{Integer(2), Integer(1)}));
  EXPECT_TRUE(integer_kernel(im({{1, 0}, {0, 1}}), 2).empty());
}

TEST(Chain, GaussianUnitStabilizes) {
  ChainReport r = derived_module_chain(GaussianRational::i(), 4);
  ASSERT_EQ(r.verdict, ChainVerdict::Stabilized);
  EXPECT_EQ(*r.stabilized_at, 2u);
  // Oracle: 1 - i^n over n = +-1, +-2 is {1 - i, 1 + i, 2, 2}.
  LatticeForm oracle = hnf({2, {qv({1, -1}), qv({1, 1}), qv({2, 0})}});
  EXPECT_EQ(r.levels[1], oracle);
  EXPECT_EQ(r.levels[1].basis, im({{1, -1}, {0, 2}}));
  EXPECT_EQ(r.levels[1].covolume(), 2);
  for (const auto& l : r.levels) EXPECT_EQ(l, oracle);
}

TEST(Chain, PythagoreanScalarNeverStabilizes) {
  ChainReport r = derived_module_chain(GaussianRational(Rational(3, 5), Rational(4, 5)), 10);
  EXPECT_EQ(r.verdict, ChainVerdict::NotStabilizedByBound);
  EXPECT_FALSE(r.stabilized_at.has_value());
  const auto ranks = r.ranks();
  const auto cov = r.covolumes();
  for (std::size_t k = 0; k < ranks.size(); ++k) EXPECT_EQ(ranks[k], 2u);
  for (std::size_t k = 1; k < cov.size(); ++k) EXPECT_LT(cov[k], cov[k - 1]);
}

TEST(Chain, SixthRootOfUnityStabilizes) {
  const auto z = sixth_root();
  ChainReport r = derived_module_chain(z, 8);
  ASSERT_EQ(r.verdict, ChainVerdict::Stabilized);
  // Orbit oracle: z^n takes only the six values z^0..z^5, so M_3 already
  // contains every generator 1 - z^n.
  GenSet all{2, {}};
  for (long n = 1; n <= 6; ++n) {
    RationalVector p = field_coordinates_of_power(z, n);
    all.generators.push_back({Rational(1) - p[0], -p[1]});
  }
  EXPECT_EQ(r.levels.back(), hnf(all));
  EXPECT_LE(*r.stabilized_at, 4u);
}

TEST(Chain, PowerBasisCoordinates) {
  const auto z = sixth_root();
  // z^2 = z - 1, z^3 = -1, z^-1 = 1 - z.
  EXPECT_EQ(field_coordinates_of_power(z, 2), (RationalVector{Rational(-1), Rational(1)}));
  EXPECT_EQ(field_coordinates_of_power(z, 3), (RationalVector{Rational(-1), Rational(0)}));
  EXPECT_EQ(field_coordinates_of_power(z, -1), (RationalVector{Rational(1), Rational(-1)}));
  EXPECT_EQ(field_coordinates_of_power(z, 6), (RationalVector{Rational(1), Rational(0)}));
}

TEST(Chain, LevelsAreNestedAndCovolumesDivide) {
  std::vector<AlgebraicScalar> zs{GaussianRational(Rational(3, 5), Rational(4, 5)), GaussianRational::i(),
                                  GaussianRational(Rational(5, 13), Rational(-12, 13)), sixth_root(),
                                  unit_non_integer()};
  for (const auto& z : zs) {
    ChainReport r = derived_module_chain(z, 8);
    for (std::size_t k = 1; k < r.levels.size(); ++k) {
      const auto& prev = r.levels[k - 1];
      const auto& next = r.levels[k];
      EXPECT_LE(prev.rank(), next.rank());
      for (const auto& row : prev.basis) {
        RationalVector v;
        for (const auto& x : row) v.emplace_back(Rational(x, prev.denominator));
        for (auto& x : v) x.canonicalize();
        EXPECT_TRUE(contains(next, v)) << describe(z);
      }
      if (prev.rank() == next.rank() && next.rank() == next.ambient_dim) {
        Rational ratio = prev.covolume() / next.covolume();
        EXPECT_EQ(ratio.get_den(), 1) << describe(z);
      }
    }
    if (r.stabilized_at) {
      const std::size_t s = *r.stabilized_at - 1;
      for (std::size_t k = s; k < r.levels.size(); ++k) EXPECT_EQ(r.levels[k], r.levels[s - 1]);
    }
  }
}

TEST(Chain, RejectsDegenerateScalars) {
  EXPECT_THROW(derived_module_chain(GaussianRational(1, 1), 4), Error);
  EXPECT_THROW(derived_module_chain(GaussianRational(1), 4), Error);
  try {
    derived_module_chain(GaussianRational(2), 4);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotUnitModulus);
  }
}

TEST(Criterion, Examples) {
  EXPECT_FALSE(fg_derived_criterion(GaussianRational(Rational(3, 5), Rational(4, 5))));
  EXPECT_TRUE(fg_derived_criterion(GaussianRational::i()));
  EXPECT_FALSE(fg_derived_criterion(unit_non_integer()));
  EXPECT_EQ(derived_module_chain(unit_non_integer(), kDefaultChainBound).verdict, ChainVerdict::NotStabilizedByBound);
  EXPECT_THROW(fg_derived_criterion(GaussianRational(1, 1)), Error);
}

TEST(Criterion, AgreesWithChainOracleAtAuditBound) {
  std::vector<AlgebraicScalar> zs{GaussianRational::i(), -GaussianRational::i(), GaussianRational(-1), sixth_root(),
                                  unit_non_integer()};
  for (long m = 2; m <= 7; ++m)
    for (long n = 1; n < m; ++n)
      if (std::gcd(m, n) == 1 && (m - n) % 2 == 1) {
        zs.emplace_back(pythagorean(m, n));
        zs.emplace_back(pythagorean(m, n).conj());
      }
  // Third roots of unity and another non-integral unit: 3x^2 - 2x + 3.
  zs.push_back(AlgebraicScalar::from_minpoly(IntPolynomial({Integer(1), Integer(1), Integer(1)}), {-1, 0, 0, 1}));
  zs.push_back(AlgebraicScalar::from_minpoly(IntPolynomial({Integer(3), Integer(-2), Integer(3)}), {0, 1, -1, 0}));
  for (const auto& z : zs) {
    const bool stabilizes = derived_module_chain(z, kDefaultChainBound).verdict == ChainVerdict::Stabilized;
    EXPECT_EQ(fg_derived_criterion(z), stabilizes) << describe(z);
  }
}

TEST(SubgroupOfQ, Examples) {
  EXPECT_EQ(subgroup_of_Q_generator({Rational(1, 2), Rational(1, 3)}), Rational(1, 6));
  EXPECT_EQ(subgroup_of_Q_generator({Rational(0)}), 0);
  EXPECT_EQ(subgroup_of_Q_generator({Rational(2), Rational(4)}), 2);
  EXPECT_EQ(subgroup_of_Q_generator({}), 0);
}

TEST(SubgroupOfQ, GeneratorDividesAndIsGenerated) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 40), count(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> gens;
    GenSet set{1, {}};
    for (long k = count(rng); k > 0; --k) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      gens.push_back(q);
      set.generators.push_back({q});
    }
    Rational g = subgroup_of_Q_generator(gens);
    EXPECT_GE(g, 0);
    if (g == 0) {
      for (const auto& q : gens) EXPECT_EQ(q, 0);
      continue;
    }
    for (const auto& q : gens) EXPECT_EQ(Rational(q / g).get_den(), 1);
    EXPECT_EQ(hnf(set), hnf({1, {{g}}}));
  }
}

TEST(ChainJson, ExactRationalStrings) {
  auto j = to_json(derived_module_chain(GaussianRational(Rational(3, 5), Rational(4, 5)), 2));
  EXPECT_EQ(j["verdict"], "not_stabilized_by_bound");
  EXPECT_TRUE(j["stabilized_at"].is_null());
  // det [[2/5, -4/5], [2/5, 4/5]] = 16/25
  EXPECT_EQ(j["covolumes"][0], "16/25");
}
