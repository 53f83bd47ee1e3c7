#include "dlab/exact/gaussian.hpp"

#include <cctype>
#include <cmath>

#include "dlab/error.hpp"

namespace dlab {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm();
  if (n == 0) throw Error(ErrorKind::DegenerateScalar, "division by zero Gaussian rational");
  *this *= o.conj();
  re /= n;
  im /= n;
  return *this;
}

GaussianRational pow(const GaussianRational& z, long exponent) {
  if (exponent < 0) return pow(GaussianRational(1) / z, -exponent);
  GaussianRational result(1), base = z;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

namespace {

// Coefficient text preceding "*i" or a bare "i": "", "+", "-", or a rational.
Rational imaginary_coefficient(std::string_view coeff, std::string_view whole) {
  if (coeff.empty() || coeff == "+") return 1;
  if (coeff == "-") return -1;
  if (coeff.back() == '*') coeff.remove_suffix(1);
  if (coeff.empty()) throw Error(ErrorKind::ParseError, "dangling '*' in '" + std::string(whole) + "'");
  return parse_rational(coeff);
}

}  // namespace

GaussianRational parse_gaussian(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty scalar literal");

  if (s.back() != 'i') return {parse_rational(s), Rational(0)};

  std::string_view body(s);
  body.remove_suffix(1);
  // Split at the last sign that is not at position 0 and not following '/'.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/' && body[k - 1] != '*') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {Rational(0), imaginary_coefficient(body, text)};
  return {parse_rational(body.substr(0, split)), imaginary_coefficient(body.substr(split), text)};
}

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  std::string out;
  if (z.re != 0) out = to_string(z.re);
  Rational a = abs(z.im);
  if (z.im < 0)
    out += "-";
  else if (!out.empty())
    out += "+";
  if (a == 1)
    out += "i";
  else
    out += to_string(a) + "*i";
  return out;
}

namespace {

Rational round_dyadic(const Rational& q, unsigned bits) {
  Integer scale = Integer(1) << bits;
  Integer scaled_num = q.get_num() * scale;
  Integer rounded;
  // nearest multiple of 2^-bits, ties upward
  mpz_fdiv_q(rounded.get_mpz_t(), Integer(2 * scaled_num + q.get_den()).get_mpz_t(),
             Integer(2 * q.get_den()).get_mpz_t());
  Rational r(rounded, scale);
  r.canonicalize();
  return r;
}

}  // namespace

GaussianRational round_dyadic(const GaussianRational& z, unsigned bits) {
  return {round_dyadic(z.re, bits), round_dyadic(z.im, bits)};
}

GaussianRational from_complex(std::complex<double> z, unsigned bits) {
  auto convert = [bits](double x) {
    if (!std::isfinite(x)) throw Error(ErrorKind::DegenerateInput, "non-finite value");
    Rational q(x);
    return round_dyadic(q, bits);
  };
  return {convert(z.real()), convert(z.imag())};
}

GaussianMatrix identity_matrix(std::size_t n) {
  GaussianMatrix m(n, GaussianVector(n));
  for (std::size_t k = 0; k < n; ++k) m[k][k] = 1;
  return m;
}

GaussianMatrix multiply(const GaussianMatrix& a, const GaussianMatrix& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  GaussianMatrix out(a.size(), GaussianVector(cols));
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != inner) throw Error(ErrorKind::DimensionMismatch, "matrix product shapes");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[r][k].is_zero()) continue;
      for (std::size_t c = 0; c < cols; ++c) out[r][c] += a[r][k] * b[k][c];
    }
  }
  return out;
}

GaussianRational determinant(GaussianMatrix m) {
  const std::size_t n = m.size();
  GaussianRational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pick = col;
    while (pick < n && m[pick][col].is_zero()) ++pick;
    if (pick == n) return GaussianRational(0);
    if (pick != col) {
      std::swap(m[pick], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const GaussianRational inv = GaussianRational(1) / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const GaussianRational f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

GaussianMatrix inverse(const GaussianMatrix& m) {
  const std::size_t n = m.size();
  GaussianMatrix a = m, inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pick = col;
    while (pick < n && a[pick][col].is_zero()) ++pick;
    if (pick == n) throw Error(ErrorKind::DegenerateInput, "singular matrix");
    std::swap(a[pick], a[col]);
    std::swap(inv[pick], inv[col]);
    const GaussianRational p = GaussianRational(1) / a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] *= p;
      inv[col][c] *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const GaussianRational f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace dlab
