#pragma once

// Arbitrary-precision integers and rationals.
//
// GMP's mpq_class already keeps values canonical (coprime parts, positive
// denominator) after every arithmetic operation, so Rational is an alias
// rather than a wrapper. Values parsed from text go through canonicalize().

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace dlab {

using Integer = mpz_class;
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;
using IntegerVector = std::vector<Integer>;
using IntegerMatrix = std::vector<IntegerVector>;

/// Parses "p", "-p", "p/q" or a terminating decimal such as "0.25".
/// Throws Error(ParseError) on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Reduces q in place; returns it for chaining.
Rational& canonicalize(Rational& q);

/// True iff num/den is already in lowest terms with a positive denominator.
bool is_canonical(const Rational& q);

Integer abs(const Integer& z);
Rational abs(const Rational& q);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Exact power with integer exponent (negative allowed for nonzero base).
Rational pow(const Rational& base, long exponent);

/// Floor and the centred residue helpers used by the lattice code.
Integer floor_div(const Integer& a, const Integer& b);

}  // namespace dlab
