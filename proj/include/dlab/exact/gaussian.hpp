#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "dlab/exact/rational.hpp"

namespace dlab {

/// Element re + im*i of Q(i).
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(Rational real) : re(std::move(real)) {}
  GaussianRational(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
  GaussianRational(long real) : re(real) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }
  /// |z|^2, exact.
  Rational norm() const { return re * re + im * im; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re, -im}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

GaussianRational pow(const GaussianRational& z, long exponent);

/// Accepts "p/q", "p/q+r/s*i", "r/s*i", "i", "-i", "1+i", "3/5-4/5*i".
GaussianRational parse_gaussian(std::string_view text);

/// Renders in the same syntax parse_gaussian accepts.
std::string to_string(const GaussianRational& z);

/// Dyadic rounding of both parts to multiples of 2^-bits.
GaussianRational round_dyadic(const GaussianRational& z, unsigned bits);

GaussianRational from_complex(std::complex<double> z, unsigned bits = 60);

using GaussianVector = std::vector<GaussianRational>;
using GaussianMatrix = std::vector<GaussianVector>;

GaussianMatrix identity_matrix(std::size_t n);
GaussianMatrix multiply(const GaussianMatrix& a, const GaussianMatrix& b);
/// Exact determinant by elimination over Q(i).
GaussianRational determinant(GaussianMatrix m);
/// Throws DegenerateInput when m is singular.
GaussianMatrix inverse(const GaussianMatrix& m);

}  // namespace dlab
