#pragma once

#include <complex>
#include <span>
#include <vector>

#include "dlab/exact/gaussian.hpp"
#include "dlab/exact/int_poly.hpp"

namespace dlab {

/// Closed disc |w - center| <= radius that provably contains one root.
struct RootDisc {
  GaussianRational center;
  Rational radius;  // rational upper bound on the certified radius
};

/// Axis-parallel rectangle with rational corners.
struct RootBox {
  Rational re_lo, re_hi, im_lo, im_hi;
};

enum class Containment { Inside, Outside, Undecided };

/// Pairwise-disjoint inclusion discs for every complex root of a squarefree
/// integer polynomial.
///
/// Approximations come from a long-double Durand-Kerner run; each disc is then
/// certified exactly from the Weierstrass corrections W_k = f(z_k) /
/// (lc * prod_{j != k}(z_k - z_j)): the discs D(z_k, d*|W_k|) cover the roots
/// and, when pairwise disjoint, each holds exactly one. refine() applies exact
/// Newton steps on dyadic Gaussian rationals, doubling the working precision.
class CertifiedRoots {
 public:
  explicit CertifiedRoots(const IntPolynomial& f);

  std::span<const RootDisc> discs() const { return discs_; }
  std::size_t size() const { return discs_.size(); }
  unsigned precision_bits() const { return bits_; }
  const IntPolynomial& polynomial() const { return poly_; }

  void refine();

  std::complex<double> approximate(std::size_t k) const { return discs_[k].center.to_complex(); }

 private:
  void certify();
  bool pairwise_disjoint() const;

  IntPolynomial poly_;
  std::vector<GaussianRational> approx_;
  std::vector<RootDisc> discs_;
  unsigned bits_ = 60;
};

/// Long-double Durand-Kerner approximations of all roots.
std::vector<std::complex<long double>> approximate_roots(const IntPolynomial& f);

/// Where disc d lies relative to box b (exact comparisons).
Containment locate(const RootDisc& d, const RootBox& b);

/// Rational bracket for sqrt(x) with absolute error below 2^-bits.
Rational sqrt_lower(const Rational& x, unsigned bits);
Rational sqrt_upper(const Rational& x, unsigned bits);

/// Exact test that the closed discs are disjoint.
bool discs_disjoint(const GaussianRational& c1, const Rational& r1, const GaussianRational& c2, const Rational& r2);

}  // namespace dlab
