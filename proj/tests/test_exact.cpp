#include <gtest/gtest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "dlab/error.hpp"
#include "dlab/exact/algebraic.hpp"
#include "dlab/exact/literal.hpp"

using namespace dlab;

namespace {

IntegerVector ints(std::initializer_list<long> v) {
  IntegerVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// Oracle: (x - z)(x - conj z) expanded, scaled to a primitive integer
// polynomial by hand (lcm of denominators, then content).
IntegerVector conjugate_product(const GaussianRational& z) {
  std::vector<Rational> c{z.re * z.re + z.im * z.im, Rational(-2 * z.re), Rational(1)};
  mpz_class l = 1;
  for (auto& q : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  IntegerVector out;
  mpz_class g = 0;
  for (auto& q : c) {
    out.push_back(mpz_class(q * l));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  for (auto& x : out) x /= g;
  return out;
}

// Oracle for x^k mod f with f monic: plain integer long division.
IntegerVector reduce_power(unsigned k, const IntegerVector& monic) {
  IntegerVector r(k + 1, 0);
  r[k] = 1;
  const std::size_t d = monic.size() - 1;
  for (std::size_t top = k; top >= d && top <= k; --top) {
    mpz_class lead = r[top];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= d; ++j) r[top - d + j] -= lead * monic[j];
    if (top == d) break;
  }
  r.resize(d);
  return r;
}

// Pythagorean unit (a + b i) / c from Euclid's parametrisation.
GaussianRational pythagorean(long m, long n) {
  long a = m * m - n * n, b = 2 * m * n, c = m * m + n * n;
  return {Rational(a, c), Rational(b, c)};
}

std::vector<std::complex<double>> companion_roots(const IntegerVector& c) {
  const int d = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) m(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) m(i, d - 1) = -c[i].get_d() / c[d].get_d();
  Eigen::EigenSolver<Eigen::MatrixXd> es(m);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < d; ++i) out.push_back(es.eigenvalues()[i]);
  return out;
}

}  // namespace

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-3/5"), Rational(-3, 5));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(parse_rational(" 7 "), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational("1/-2"), Error);
}

TEST(Gaussian, ParsesLiteralForms) {
  EXPECT_EQ(parse_gaussian("3/5+4/5*i"), GaussianRational(Rational(3, 5), Rational(4, 5)));
  EXPECT_EQ(parse_gaussian("3/5-4/5*i"), GaussianRational(Rational(3, 5), Rational(-4, 5)));
  EXPECT_EQ(parse_gaussian("i"), GaussianRational::i());
  EXPECT_EQ(parse_gaussian("-i"), -GaussianRational::i());
  EXPECT_EQ(parse_gaussian("1+i"), GaussianRational(1, 1));
  EXPECT_EQ(parse_gaussian("-1/2*i"), GaussianRational(0, Rational(-1, 2)));
  EXPECT_EQ(parse_gaussian("2"), GaussianRational(2));
  for (const char* s : {"3/5+4/5*i", "-i", "7", "-1/3-2/7*i", "i"})
    EXPECT_EQ(parse_gaussian(to_string(parse_gaussian(s))), parse_gaussian(s)) << s;
}

TEST(Gaussian, FieldArithmetic) {
  GaussianRational z = pythagorean(2, 1);
  EXPECT_EQ(z * z.conj(), GaussianRational(1));
  EXPECT_EQ(pow(z, -3) * pow(z, 3), GaussianRational(1));
  EXPECT_EQ(pow(GaussianRational::i(), 4), GaussianRational(1));
  EXPECT_THROW(GaussianRational(1) / GaussianRational(0), Error);
}

TEST(CanonicalForm, NormalizingIsIdempotent) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coeff(-40, 40);
  for (int trial = 0; trial < 200; ++trial) {
    long den = coeff(rng);
    if (den == 0) den = 1;
    Rational q(coeff(rng), den);
    q.canonicalize();
    Rational again = q;
    canonicalize(again);
    EXPECT_TRUE(is_canonical(q));
    EXPECT_EQ(again.get_num(), q.get_num());
    EXPECT_EQ(again.get_den(), q.get_den());

    IntegerVector c;
    for (int k = 0; k < 4; ++k) c.emplace_back(coeff(rng));
    IntPolynomial p(c);
    EXPECT_TRUE(IntPolynomial::is_normalized(p.coefficients()));
    EXPECT_EQ(IntPolynomial(p.coefficients()), p);
  }
}

TEST(MinimalPolynomial, PythagoreanScalar) {
  GaussianRational z(Rational(3, 5), Rational(4, 5));
  IntPolynomial p = minimal_polynomial(z);
  EXPECT_EQ(p.coefficients(), conjugate_product(z));
  EXPECT_EQ(p.coefficients(), ints({5, -6, 5}));
  EXPECT_EQ(to_string(p), "5x^2-6x+5");
}

TEST(MinimalPolynomial, UnitAndRationalCases) {
  EXPECT_EQ(minimal_polynomial(GaussianRational::i()).coefficients(), ints({1, 0, 1}));
  EXPECT_EQ(minimal_polynomial(GaussianRational(2)).coefficients(), ints({-2, 1}));
  EXPECT_EQ(minimal_polynomial(GaussianRational(Rational(-3, 4))).coefficients(), ints({3, 4}));
  EXPECT_EQ(minimal_polynomial(GaussianRational(1, 1)).coefficients(), ints({2, -2, 1}));
}

TEST(MinimalPolynomial, VanishesAtScalarForRandomInputs) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> part(-30, 30), den(1, 30);
  for (int trial = 0; trial < 300; ++trial) {
    GaussianRational z(Rational(part(rng), den(rng)), Rational(part(rng), den(rng)));
    z.re.canonicalize();
    z.im.canonicalize();
    IntPolynomial p = minimal_polynomial(z);
    EXPECT_TRUE(p.evaluate(z).is_zero()) << to_string(z);
    EXPECT_TRUE(IntPolynomial::is_normalized(p.coefficients()));
    EXPECT_EQ(p.degree(), z.is_real() ? 1 : 2);
    if (!z.is_real()) {
      EXPECT_EQ(p.coefficients(), conjugate_product(z));
    }
    AlgebraicScalar s(z);
    EXPECT_EQ(is_algebraic_integer(s), p.leading() == 1);
  }
}

TEST(AlgebraicInteger, Examples) {
  EXPECT_FALSE(is_algebraic_integer(GaussianRational(Rational(3, 5), Rational(4, 5))));
  EXPECT_TRUE(is_algebraic_integer(GaussianRational::i()));
  EXPECT_TRUE(is_algebraic_integer(GaussianRational(1, 1)));
}

TEST(UnitModulus, GaussianCases) {
  EXPECT_TRUE(unit_modulus(GaussianRational(Rational(3, 5), Rational(4, 5))));
  EXPECT_FALSE(unit_modulus(GaussianRational(1, 1)));
  EXPECT_TRUE(unit_modulus(GaussianRational(-1)));
}

TEST(UnitModulus, AbstractConjugatePairWithUnitProduct) {
  // Roots (3 +- i sqrt 7)/4: product 2/2 = 1 and a conjugate pair, so |z| = 1.
  auto z = AlgebraicScalar::from_minpoly(IntPolynomial(ints({2, -3, 2})), {0, 1, 0, 1});
  EXPECT_TRUE(unit_modulus(z));
  EXPECT_NEAR(std::abs(z.approximate()), 1.0, 1e-12);
  EXPECT_FALSE(is_algebraic_integer(z));
  EXPECT_FALSE(is_root_of_unity(z));
}

TEST(UnitModulus, AbstractOffCircleRoots) {
  // Self-reciprocal but with real roots (3 +- sqrt 5)/2.
  auto big = AlgebraicScalar::from_minpoly(IntPolynomial(ints({1, -3, 1})), {2, 3, -1, 1});
  EXPECT_FALSE(unit_modulus(big));
  // Not self-reciprocal.
  auto z = AlgebraicScalar::from_minpoly(IntPolynomial(ints({2, 1, 1})), {-1, 0, 0, 2});
  EXPECT_FALSE(unit_modulus(z));
}

TEST(UnitModulus, SalemPolynomialSeparatesCircleAndRealRoots) {
  // x^4 - x^3 - x^2 - x + 1: one real root > 1, its inverse, and a pair on the circle.
  const IntegerVector c = ints({1, -1, -1, -1, 1});
  const IntPolynomial f(c);
  int on_circle = 0, off_circle = 0;
  for (const auto& r : companion_roots(c)) {
    Rational re(r.real()), im(r.imag());
    Rational eps(1, 1000);
    auto z = AlgebraicScalar::from_minpoly(f, {re - eps, re + eps, im - eps, im + eps});
    const bool oracle = std::fabs(std::abs(r) - 1.0) < 1e-9;
    EXPECT_EQ(unit_modulus(z), oracle) << r;
    (oracle ? on_circle : off_circle)++;
  }
  EXPECT_EQ(on_circle, 2);
  EXPECT_EQ(off_circle, 2);
}

TEST(RootOfUnity, Examples) {
  EXPECT_TRUE(is_root_of_unity(GaussianRational::i()));
  EXPECT_FALSE(is_root_of_unity(GaussianRational(Rational(3, 5), Rational(4, 5))));
  EXPECT_THROW(is_root_of_unity(GaussianRational(1, 1)), Error);

  // Sixth cyclotomic polynomial, root in the upper half plane.
  auto z = AlgebraicScalar::from_minpoly(IntPolynomial(ints({1, -1, 1})), {0, 1, 0, 2});
  EXPECT_TRUE(is_root_of_unity(z));
  EXPECT_EQ(reduce_power(6, ints({1, -1, 1})), ints({1, 0}));  // x^6 == 1 mod Phi_6
  EXPECT_NE(reduce_power(3, ints({1, -1, 1})), ints({1, 0}));
}

TEST(RootOfUnity, CyclotomicOfHigherDegree) {
  // Phi_5 = x^4 + x^3 + x^2 + x + 1, root near exp(2 pi i / 5).
  auto z = AlgebraicScalar::from_minpoly(IntPolynomial(ints({1, 1, 1, 1, 1})),
                                         {Rational(1, 5), Rational(2, 5), Rational(9, 10), 1});
  EXPECT_TRUE(unit_modulus(z));
  EXPECT_TRUE(is_root_of_unity(z));
  EXPECT_EQ(reduce_power(5, ints({1, 1, 1, 1, 1})), ints({1, 0, 0, 0}));
}

TEST(RootOfUnity, ImpliesAlgebraicInteger) {
  std::vector<AlgebraicScalar> scalars{GaussianRational(1), GaussianRational(-1), GaussianRational::i(),
                                       -GaussianRational::i()};
  for (long m = 2; m < 9; ++m)
    for (long n = 1; n < m; ++n) scalars.emplace_back(pythagorean(m, n));
  scalars.push_back(AlgebraicScalar::from_minpoly(IntPolynomial(ints({1, 1, 1})), {-1, 0, 0, 1}));
  scalars.push_back(AlgebraicScalar::from_minpoly(IntPolynomial(ints({3, -2, 3})), {0, 1, 0, 1}));
  for (const auto& z : scalars)
    if (is_root_of_unity(z)) {
      EXPECT_TRUE(is_algebraic_integer(z)) << describe(z);
    }
}

TEST(AbstractScalar, ValidationRejectsBadInput) {
  // Reducible: (x^2 + 1)(x^2 + x + 1).
  EXPECT_THROW(AlgebraicScalar::from_minpoly(IntPolynomial(ints({1, 1, 2, 1, 1})), {-1, 1, 0, 2}), Error);
  // Linear factor: (x - 2)(x^2 + 1).
  EXPECT_THROW(AlgebraicScalar::from_minpoly(IntPolynomial(ints({-2, 1, -2, 1})), {-1, 1, 0, 2}), Error);
  // Box holding both roots of x^2 + 1.
  EXPECT_THROW(AlgebraicScalar::from_minpoly(IntPolynomial(ints({1, 0, 1})), {-1, 1, -2, 2}), Error);
  // Box holding no root.
  EXPECT_THROW(AlgebraicScalar::from_minpoly(IntPolynomial(ints({1, 0, 1})), {3, 4, 3, 4}), Error);
  // Repeated root.
  EXPECT_THROW(AlgebraicScalar::from_minpoly(IntPolynomial(ints({1, 2, 1})), {-2, 0, -1, 1}), Error);
}

TEST(CertifiedRoots, DiscsContainCompanionRoots) {
  const IntegerVector c = ints({3, -1, 4, 1, -5, 2});
  CertifiedRoots roots{IntPolynomial(c)};
  auto oracle = companion_roots(c);
  ASSERT_EQ(roots.size(), oracle.size());
  for (const auto& r : oracle) {
    int hits = 0;
    for (const auto& d : roots.discs()) {
      double dist = std::abs(d.center.to_complex() - r);
      if (dist <= d.radius.get_d() + 1e-9) ++hits;
    }
    EXPECT_EQ(hits, 1) << r;
  }
  const Rational before = roots.discs()[0].radius;
  roots.refine();
  EXPECT_LE(roots.discs()[0].radius, before);
}

TEST(Literal, ParsesStringAndObjectForms) {
  auto z = parse_scalar("3/5+4/5*i");
  ASSERT_TRUE(z.is_gaussian());
  EXPECT_EQ(z.gaussian(), GaussianRational(Rational(3, 5), Rational(4, 5)));

  auto w = parse_scalar(R"({"minpoly": [1, -1, 1], "root_box": ["0", "1", "0", "2"]})");
  ASSERT_FALSE(w.is_gaussian());
  EXPECT_EQ(w.abstract_form().minpoly.coefficients(), ints({1, -1, 1}));
  EXPECT_EQ(scalar_from_json(to_json(w)).abstract_form().minpoly, w.abstract_form().minpoly);
  EXPECT_THROW(parse_scalar(R"({"minpoly": [1, 0, 1]})"), Error);
  EXPECT_THROW(parse_scalar("{not json"), Error);
}

TEST(IntPolynomial, RendersAndParses) {
  for (const char* s : {"5x^2-6x+5", "x^2+1", "x-2", "x^4+x^3+x^2+x+1", "2x^3-x"})
    EXPECT_EQ(to_string(parse_int_polynomial(s)), s);
}
