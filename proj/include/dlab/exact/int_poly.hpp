#pragma once

#include <complex>
#include <string>
#include <vector>

#include "dlab/exact/gaussian.hpp"
#include "dlab/exact/rational.hpp"

namespace dlab {

/// Univariate polynomial with rational coefficients, lowest degree first.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
using RationalPolynomial = std::vector<Rational>;

namespace qpoly {

void trim(RationalPolynomial& p);
int degree(const RationalPolynomial& p);  // -1 for zero
RationalPolynomial multiply(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial subtract(const RationalPolynomial& a, const RationalPolynomial& b);
/// Remainder of a modulo b (b nonzero).
RationalPolynomial remainder(const RationalPolynomial& a, const RationalPolynomial& b);
/// Quotient and remainder; returns the quotient.
RationalPolynomial divide(const RationalPolynomial& a, const RationalPolynomial& b, RationalPolynomial& rem);
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);
RationalPolynomial derivative(const RationalPolynomial& p);
/// x^k - 1.
RationalPolynomial x_power_minus_one(unsigned k);

}  // namespace qpoly

/// Primitive integer polynomial: content 1, positive leading coefficient.
/// Coefficients lowest degree first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  /// Normalizes: clears content and fixes the sign of the leading coefficient.
  explicit IntPolynomial(IntegerVector coefficients);
  /// Scales to a primitive integer polynomial with the same roots.
  static IntPolynomial from_rational(const RationalPolynomial& p);

  const IntegerVector& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Integer& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  GaussianRational evaluate(const GaussianRational& z) const;
  std::complex<double> evaluate(std::complex<double> z) const;
  IntPolynomial derivative_raw() const;  // not renormalized
  RationalPolynomial to_rational() const;

  /// x^d p(1/x) == +p or -p.
  bool is_self_reciprocal_up_to_sign() const;

  /// True iff the stored coefficients already satisfy the normal-form
  /// invariants (used to check idempotence).
  static bool is_normalized(const IntegerVector& coefficients);

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

 private:
  struct Raw {};
  IntPolynomial(Raw, IntegerVector c) : coeffs_(std::move(c)) {}

  IntegerVector coeffs_;
};

/// "5x^2-6x+5" style rendering (descending powers).
std::string to_string(const IntPolynomial& p);

/// Parses the rendering produced by to_string, e.g. "x^2-x+1".
IntPolynomial parse_int_polynomial(const std::string& text);

}  // namespace dlab
