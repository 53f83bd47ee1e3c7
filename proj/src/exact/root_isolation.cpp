#include "dlab/exact/root_isolation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dlab/error.hpp"

namespace dlab {

namespace {

constexpr unsigned kMaxBits = 4096;

using cld = std::complex<long double>;

cld eval(const IntPolynomial& f, cld z) {
  cld acc = 0;
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + static_cast<long double>(it->get_d());
  return acc;
}

}  // namespace

std::vector<cld> approximate_roots(const IntPolynomial& f) {
  const int d = f.degree();
  if (d < 1) return {};
  const auto& c = f.coefficients();
  const long double lead = c.back().get_d();
  if (d == 1) return {cld(-c[0].get_d() / lead, 0.0L)};

  // Cauchy bound for the starting circle.
  long double bound = 0;
  for (int k = 0; k < d; ++k) bound = std::max(bound, std::fabs(static_cast<long double>(c[k].get_d()) / lead));
  bound += 1;

  std::vector<cld> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    long double angle = 2 * std::numbers::pi_v<long double> * k / d + 0.4L;
    z[k] = std::polar(bound * 0.9L, angle);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (int k = 0; k < d; ++k) {
      cld denom = lead;
      for (int j = 0; j < d; ++j)
        if (j != k) denom *= (z[k] - z[j]);
      if (std::abs(denom) == 0) denom = cld(1e-30L, 0);
      cld step = eval(f, z[k]) / denom;
      z[k] -= step;
      change = std::max(change, std::abs(step) / (1 + std::abs(z[k])));
    }
    if (change < 1e-18L) break;
  }
  return z;
}

Rational sqrt_lower(const Rational& x, unsigned bits) {
  if (x <= 0) return 0;
  Integer scaled = x.get_num() * x.get_den();
  scaled <<= 2 * bits;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  Rational r(root, Integer(x.get_den() << bits));
  r.canonicalize();
  return r;
}

Rational sqrt_upper(const Rational& x, unsigned bits) {
  if (x <= 0) return 0;
  Integer scaled = x.get_num() * x.get_den();
  scaled <<= 2 * bits;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  root += 1;
  Rational r(root, Integer(x.get_den() << bits));
  r.canonicalize();
  return r;
}

bool discs_disjoint(const GaussianRational& c1, const Rational& r1, const GaussianRational& c2, const Rational& r2) {
  Rational reach = r1 + r2;
  return (c1 - c2).norm() > reach * reach;
}

Containment locate(const RootDisc& d, const RootBox& b) {
  const Rational& x = d.center.re;
  const Rational& y = d.center.im;
  const Rational& r = d.radius;
  if (x - r >= b.re_lo && x + r <= b.re_hi && y - r >= b.im_lo && y + r <= b.im_hi) return Containment::Inside;
  // Squared distance from the centre to the rectangle.
  Rational dx = 0, dy = 0;
  if (x < b.re_lo) dx = b.re_lo - x;
  if (x > b.re_hi) dx = x - b.re_hi;
  if (y < b.im_lo) dy = b.im_lo - y;
  if (y > b.im_hi) dy = y - b.im_hi;
  if (dx * dx + dy * dy > r * r) return Containment::Outside;
  return Containment::Undecided;
}

CertifiedRoots::CertifiedRoots(const IntPolynomial& f) : poly_(f) {
  if (f.degree() < 1) throw Error(ErrorKind::DegenerateInput, "root isolation needs degree >= 1");
  RationalPolynomial g = qpoly::gcd(f.to_rational(), qpoly::derivative(f.to_rational()));
  if (qpoly::degree(g) > 0) throw Error(ErrorKind::InvalidSpec, "polynomial " + to_string(f) + " is not squarefree");

  for (const auto& z : approximate_roots(f))
    approx_.push_back(from_complex(std::complex<double>(static_cast<double>(z.real()), static_cast<double>(z.imag())),
                                   bits_));
  certify();
  while (!pairwise_disjoint()) {
    if (bits_ >= kMaxBits)
      throw Error(ErrorKind::InvariantFailure, "could not separate the roots of " + to_string(f));
    refine();
  }
}

void CertifiedRoots::certify() {
  const std::size_t d = approx_.size();
  const GaussianRational lead{Rational(poly_.leading())};
  discs_.clear();
  for (std::size_t k = 0; k < d; ++k) {
    GaussianRational denom = lead;
    for (std::size_t j = 0; j < d; ++j)
      if (j != k) denom *= (approx_[k] - approx_[j]);
    Rational radius;
    if (denom.is_zero()) {
      radius = Rational(Integer(1) << 20);  // coincident approximations: effectively unbounded
    } else {
      GaussianRational w = poly_.evaluate(approx_[k]) / denom;
      Rational r2 = w.norm() * static_cast<long>(d * d);
      radius = sqrt_upper(r2, bits_ + 8);
    }
    discs_.push_back({approx_[k], radius});
  }
}

bool CertifiedRoots::pairwise_disjoint() const {
  for (std::size_t a = 0; a < discs_.size(); ++a)
    for (std::size_t b = a + 1; b < discs_.size(); ++b)
      if (!discs_disjoint(discs_[a].center, discs_[a].radius, discs_[b].center, discs_[b].radius)) return false;
  return true;
}

void CertifiedRoots::refine() {
  bits_ = std::min(kMaxBits, bits_ * 2);
  IntPolynomial deriv = poly_.derivative_raw();
  for (auto& z : approx_) {
    GaussianRational value = poly_.evaluate(z);
    if (value.is_zero()) continue;
    GaussianRational slope = deriv.evaluate(z);
    if (slope.is_zero()) continue;
    z = round_dyadic(z - value / slope, bits_);
  }
  certify();
}

}  // namespace dlab
