#include "dlab/exact/int_poly.hpp"

#include <algorithm>
#include <cctype>

#include "dlab/error.hpp"

namespace dlab {

namespace qpoly {

void trim(RationalPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const RationalPolynomial& p) {
  RationalPolynomial q = p;
  trim(q);
  return static_cast<int>(q.size()) - 1;
}

RationalPolynomial multiply(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  RationalPolynomial out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

RationalPolynomial subtract(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

RationalPolynomial divide(const RationalPolynomial& a, const RationalPolynomial& b, RationalPolynomial& rem) {
  RationalPolynomial divisor = b;
  trim(divisor);
  if (divisor.empty()) throw Error(ErrorKind::DegenerateInput, "polynomial division by zero");
  rem = a;
  trim(rem);
  const std::size_t db = divisor.size() - 1;
  if (rem.size() < divisor.size()) return {};
  RationalPolynomial quotient(rem.size() - db, Rational(0));
  while (!rem.empty() && rem.size() >= divisor.size()) {
    const std::size_t shift = rem.size() - divisor.size();
    Rational factor = rem.back() / divisor.back();
    quotient[shift] = factor;
    for (std::size_t k = 0; k < divisor.size(); ++k) rem[shift + k] -= factor * divisor[k];
    trim(rem);
  }
  trim(quotient);
  return quotient;
}

RationalPolynomial remainder(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial rem;
  divide(a, b, rem);
  return rem;
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RationalPolynomial r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

RationalPolynomial derivative(const RationalPolynomial& p) {
  if (p.size() <= 1) return {};
  RationalPolynomial out(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) out[k - 1] = p[k] * static_cast<long>(k);
  trim(out);
  return out;
}

RationalPolynomial x_power_minus_one(unsigned k) {
  RationalPolynomial out(k + 1, Rational(0));
  out[0] = -1;
  out[k] += 1;
  trim(out);
  return out;
}

}  // namespace qpoly

IntPolynomial::IntPolynomial(IntegerVector coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) return;
  Integer content = 0;
  for (const auto& c : coeffs_) content = dlab::gcd(content, c);
  if (coeffs_.back() < 0) content = -content;
  for (auto& c : coeffs_) c /= content;
}

IntPolynomial IntPolynomial::from_rational(const RationalPolynomial& p) {
  Integer common = 1;
  for (const auto& c : p) common = dlab::lcm(common, c.get_den());
  IntegerVector out;
  out.reserve(p.size());
  for (const auto& c : p) out.push_back(Integer(c.get_num() * (common / c.get_den())));
  return IntPolynomial(std::move(out));
}

GaussianRational IntPolynomial::evaluate(const GaussianRational& z) const {
  GaussianRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= z;
    acc += GaussianRational(Rational(*it));
  }
  return acc;
}

std::complex<double> IntPolynomial::evaluate(std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + it->get_d();
  return acc;
}

IntPolynomial IntPolynomial::derivative_raw() const {
  IntegerVector out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(Integer(coeffs_[k] * static_cast<long>(k)));
  return IntPolynomial(Raw{}, std::move(out));
}

RationalPolynomial IntPolynomial::to_rational() const {
  RationalPolynomial out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(c);
  return out;
}

bool IntPolynomial::is_self_reciprocal_up_to_sign() const {
  if (coeffs_.empty()) return true;
  if (coeffs_.front() == 0) return false;
  const std::size_t n = coeffs_.size();
  bool plus = true, minus = true;
  for (std::size_t k = 0; k < n; ++k) {
    if (coeffs_[k] != coeffs_[n - 1 - k]) plus = false;
    if (coeffs_[k] != -coeffs_[n - 1 - k]) minus = false;
  }
  return plus || minus;
}

bool IntPolynomial::is_normalized(const IntegerVector& c) {
  if (c.empty()) return true;
  if (c.back() <= 0) return false;
  Integer content = 0;
  for (const auto& x : c) content = dlab::gcd(content, x);
  return content == 1;
}

std::string to_string(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  if (c.empty()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Integer& a = c[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    Integer mag = abs(a);
    if (a < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (k == 0 || mag != 1) out += mag.get_str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

IntPolynomial parse_int_polynomial(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty polynomial");
  IntegerVector coeffs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    Integer coeff = start == pos ? Integer(1) : Integer(s.substr(start, pos - start), 10);
    if (pos < s.size() && s[pos] == '*') ++pos;
    std::size_t power = 0;
    if (pos < s.size() && s[pos] == 'x') {
      ++pos;
      power = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t pstart = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pstart == pos) throw Error(ErrorKind::ParseError, "missing exponent in '" + text + "'");
        power = std::stoul(s.substr(pstart, pos - pstart));
      }
    } else if (start == pos) {
      throw Error(ErrorKind::ParseError, "bad term in '" + text + "'");
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1, Integer(0));
    coeffs[power] += sign * coeff;
    if (pos < s.size() && s[pos] != '+' && s[pos] != '-')
      throw Error(ErrorKind::ParseError, "unexpected '" + std::string(1, s[pos]) + "' in '" + text + "'");
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace dlab
