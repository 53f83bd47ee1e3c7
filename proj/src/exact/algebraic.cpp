#include "dlab/exact/algebraic.hpp"

#include <cmath>

#include "dlab/error.hpp"

namespace dlab {

namespace {

constexpr unsigned kMaxRefineBits = 4096;

std::vector<Integer> small_divisors(const Integer& n) {
  Integer m = abs(n);
  std::vector<Integer> out;
  if (m > Integer(1000000000)) return {Integer(1), m};
  unsigned long v = m.get_ui();
  for (unsigned long a = 1; a * a <= v; ++a) {
    if (v % a != 0) continue;
    out.emplace_back(a);
    if (a * a != v) out.emplace_back(v / a);
  }
  return out;
}

Integer round_to_integer(long double x) {
  return Integer(static_cast<double>(std::llround(x)));
}

bool divides(const IntPolynomial& factor, const IntPolynomial& f) {
  return qpoly::remainder(f.to_rational(), factor.to_rational()).empty();
}

// Looks for factors of degree 1 and 2 among products of approximate roots.
void probe_small_factors(const IntPolynomial& f) {
  const int d = f.degree();
  if (d < 2) return;
  const auto roots = approximate_roots(f);
  const auto leads = small_divisors(f.leading());
  auto reject = [&f](const IntPolynomial& g) {
    throw Error(ErrorKind::InvalidSpec, "minimal polynomial " + to_string(f) + " has factor " + to_string(g));
  };
  for (const auto& z : roots) {
    if (std::fabs(z.imag()) > 1e-6L) continue;
    for (const auto& q : leads) {
      long double scaled = z.real() * static_cast<long double>(q.get_d());
      if (std::fabs(scaled) > 9e15L) continue;
      IntPolynomial g(IntegerVector{Integer(-round_to_integer(scaled)), q});
      if (g.degree() == 1 && divides(g, f)) reject(g);
    }
  }
  if (d < 4) return;  // a quadratic factor of a cubic forces a linear one
  for (std::size_t a = 0; a < roots.size(); ++a) {
    for (std::size_t b = a + 1; b < roots.size(); ++b) {
      auto s = roots[a] + roots[b];
      auto p = roots[a] * roots[b];
      if (std::fabs(s.imag()) > 1e-6L || std::fabs(p.imag()) > 1e-6L) continue;
      for (const auto& q : leads) {
        long double qd = static_cast<long double>(q.get_d());
        if (std::fabs(s.real() * qd) > 9e15L || std::fabs(p.real() * qd) > 9e15L) continue;
        IntPolynomial g(IntegerVector{round_to_integer(p.real() * qd), Integer(-round_to_integer(s.real() * qd)), q});
        if (g.degree() == 2 && divides(g, f)) reject(g);
      }
    }
  }
}

// Index of the unique root inside the box; refines until every disc is
// decided. Throws if the box holds zero or several roots.
std::size_t selected_root(CertifiedRoots& roots, const RootBox& box, const IntPolynomial& f) {
  while (true) {
    bool undecided = false;
    std::size_t inside = 0, index = 0;
    for (std::size_t k = 0; k < roots.size(); ++k) {
      switch (locate(roots.discs()[k], box)) {
        case Containment::Inside:
          ++inside;
          index = k;
          break;
        case Containment::Undecided:
          undecided = true;
          break;
        case Containment::Outside:
          break;
      }
    }
    if (!undecided) {
      if (inside != 1)
        throw Error(ErrorKind::InvalidSpec, "root box holds " + std::to_string(inside) + " roots of " + to_string(f));
      return index;
    }
    if (roots.precision_bits() >= kMaxRefineBits)
      throw Error(ErrorKind::InvalidSpec, "a root of " + to_string(f) + " lies on the root box boundary");
    roots.refine();
  }
}

}  // namespace

AlgebraicScalar AlgebraicScalar::from_minpoly(IntPolynomial minpoly, RootBox box) {
  if (minpoly.degree() < 1) throw Error(ErrorKind::InvalidSpec, "minimal polynomial must have degree >= 1");
  if (box.re_lo > box.re_hi || box.im_lo > box.im_hi) throw Error(ErrorKind::InvalidSpec, "empty root box");
  probe_small_factors(minpoly);
  CertifiedRoots roots(minpoly);
  selected_root(roots, box, minpoly);
  return AlgebraicScalar(AbstractAlgebraic{std::move(minpoly), std::move(box)});
}

int AlgebraicScalar::degree() const {
  if (is_gaussian()) return gaussian().is_real() ? 1 : 2;
  return abstract_form().minpoly.degree();
}

RootDisc AlgebraicScalar::root_disc(unsigned min_bits) const {
  const auto& a = abstract_form();
  CertifiedRoots roots(a.minpoly);
  while (roots.precision_bits() < min_bits) roots.refine();
  std::size_t k = selected_root(roots, a.root_box, a.minpoly);
  return roots.discs()[k];
}

std::complex<double> AlgebraicScalar::approximate() const {
  if (is_gaussian()) return gaussian().to_complex();
  return root_disc().center.to_complex();
}

IntPolynomial minimal_polynomial(const GaussianRational& z) {
  if (z.is_real()) return IntPolynomial(IntegerVector{Integer(-z.re.get_num()), z.re.get_den()});
  // (x - z)(x - conj z) = x^2 - 2 Re(z) x + |z|^2; its discriminant -4 Im(z)^2
  // is negative, so there is no rational root and the quadratic is irreducible.
  RationalPolynomial p{z.norm(), Rational(-2 * z.re), Rational(1)};
  return IntPolynomial::from_rational(p);
}

IntPolynomial minimal_polynomial(const AlgebraicScalar& z) {
  if (z.is_gaussian()) return minimal_polynomial(z.gaussian());
  return z.abstract_form().minpoly;
}

bool is_algebraic_integer(const AlgebraicScalar& z) { return minimal_polynomial(z).is_monic(); }

bool unit_modulus(const AlgebraicScalar& z) {
  if (z.is_gaussian()) return z.gaussian().norm() == 1;

  const auto& a = z.abstract_form();
  const IntPolynomial& f = a.minpoly;
  // |z| = 1 means 1/conj(z) = z is a root, forcing f to be self-reciprocal.
  if (!f.is_self_reciprocal_up_to_sign()) return false;
  if (f.degree() == 1) return abs(f.coefficients()[0]) == f.coefficients()[1];

  // f self-reciprocal with real coefficients: 1/conj(z) is again a root.
  // |z| = 1 iff that root is z itself, decided once the image of z's disc
  // under w -> 1/conj(w) meets exactly one disc.
  CertifiedRoots roots(f);
  while (true) {
    std::size_t k = selected_root(roots, a.root_box, f);
    const RootDisc& disc = roots.discs()[k];
    const unsigned bits = roots.precision_bits() + 8;
    Rational norm = disc.center.norm();
    Rational modulus_lo = sqrt_lower(norm, bits);
    if (modulus_lo > disc.radius) {
      GaussianRational image_center = disc.center.conj();
      image_center = GaussianRational(1) / image_center;
      Rational image_radius = disc.radius / (modulus_lo * (modulus_lo - disc.radius));
      if (discs_disjoint(image_center, image_radius, disc.center, disc.radius)) return false;
      bool meets_other = false;
      for (std::size_t j = 0; j < roots.size(); ++j)
        if (j != k && !discs_disjoint(image_center, image_radius, roots.discs()[j].center, roots.discs()[j].radius))
          meets_other = true;
      if (!meets_other) return true;
    }
    if (roots.precision_bits() >= kMaxRefineBits)
      throw Error(ErrorKind::InvariantFailure, "unit-modulus test did not resolve for " + to_string(f));
    roots.refine();
  }
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

bool is_root_of_unity(const AlgebraicScalar& z) {
  if (!unit_modulus(z)) throw Error(ErrorKind::NotUnitModulus, describe(z));
  if (z.is_gaussian()) {
    // The only roots of unity in Q(i) are the four units.
    const auto& g = z.gaussian();
    return (g.im == 0 && abs(g.re) == 1) || (g.re == 0 && abs(g.im) == 1);
  }
  const IntPolynomial& f = z.abstract_form().minpoly;
  if (!f.is_monic()) return false;
  const auto d = static_cast<unsigned long>(f.degree());
  // phi(k) >= sqrt(k/2), so a primitive k-th root of degree d has k <= 2 d^2.
  const RationalPolynomial fr = f.to_rational();
  for (unsigned long k = 1; k <= 2 * d * d; ++k) {
    if (euler_phi(k) != d) continue;
    if (qpoly::remainder(qpoly::x_power_minus_one(static_cast<unsigned>(k)), fr).empty()) return true;
  }
  return false;
}

std::string describe(const AlgebraicScalar& z) {
  if (z.is_gaussian()) return to_string(z.gaussian());
  const auto& a = z.abstract_form();
  const auto& b = a.root_box;
  return "root of " + to_string(a.minpoly) + " in [" + to_string(b.re_lo) + "," + to_string(b.re_hi) + "]x[" +
         to_string(b.im_lo) + "," + to_string(b.im_hi) + "]";
}

}  // namespace dlab
