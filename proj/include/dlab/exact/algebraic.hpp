#pragma once

#include <complex>
#include <string>
#include <variant>

#include "dlab/exact/gaussian.hpp"
#include "dlab/exact/int_poly.hpp"
#include "dlab/exact/root_isolation.hpp"

namespace dlab {

/// A root of an irreducible integer polynomial, pinned down by a rectangle
/// that contains no other root.
struct AbstractAlgebraic {
  IntPolynomial minpoly;
  RootBox root_box;
};

/// Exact algebraic scalar: either an element of Q(i) or an abstract root.
class AlgebraicScalar {
 public:
  AlgebraicScalar(GaussianRational z) : value_(std::move(z)) {}

  /// Validates the minimal polynomial (squarefree, no factor of degree 1 or 2
  /// found by the factor probe) and that the box isolates exactly one root.
  /// Throws Error(InvalidSpec) otherwise.
  static AlgebraicScalar from_minpoly(IntPolynomial minpoly, RootBox box);

  bool is_gaussian() const { return std::holds_alternative<GaussianRational>(value_); }
  const GaussianRational& gaussian() const { return std::get<GaussianRational>(value_); }
  const AbstractAlgebraic& abstract_form() const { return std::get<AbstractAlgebraic>(value_); }

  /// Degree of the minimal polynomial over Q.
  int degree() const;
  std::complex<double> approximate() const;

  /// Inclusion disc of the selected root (abstract form only).
  RootDisc root_disc(unsigned min_bits = 0) const;

 private:
  explicit AlgebraicScalar(AbstractAlgebraic a) : value_(std::move(a)) {}

  std::variant<GaussianRational, AbstractAlgebraic> value_;
};

/// Primitive minimal polynomial with positive leading coefficient.
/// Degree 1 for rational z, degree 2 otherwise.
IntPolynomial minimal_polynomial(const GaussianRational& z);
IntPolynomial minimal_polynomial(const AlgebraicScalar& z);

bool is_algebraic_integer(const AlgebraicScalar& z);

/// |z| == 1, decided exactly.
bool unit_modulus(const AlgebraicScalar& z);

/// z^k == 1 for some k >= 1. Throws Error(NotUnitModulus) when |z| != 1.
bool is_root_of_unity(const AlgebraicScalar& z);

/// Euler's totient.
unsigned long euler_phi(unsigned long n);

/// Rendering used in reports: Gaussian literal or {minpoly, box}.
std::string describe(const AlgebraicScalar& z);

}  // namespace dlab
