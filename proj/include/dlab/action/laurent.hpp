#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dlab/exact/gaussian.hpp"

namespace dlab {

using Exponent = std::vector<long>;

/// Laurent polynomial in a fixed number of variables with Q(i) coefficients.
/// Zero coefficients are never stored; terms are ordered by exponent.
class LaurentPoly {
 public:
  explicit LaurentPoly(std::size_t variables = 0) : vars_(variables) {}
  static LaurentPoly constant(std::size_t variables, const GaussianRational& c);
  static LaurentPoly monomial(const Exponent& e, const GaussianRational& c);

  std::size_t variables() const { return vars_; }
  const std::map<Exponent, GaussianRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const GaussianRational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  /// Exact value at a point; coordinates must be nonzero where exponents are negative.
  GaussianRational evaluate(const std::vector<GaussianRational>& point) const;
  std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t vars_;
  std::map<Exponent, GaussianRational> terms_;
};

/// Variables default to t (one variable) or t1, t2, ...; highest exponent first.
std::string to_string(const LaurentPoly& p, const std::vector<std::string>& names = {});
/// [{"exponent": [...], "coeff": "..."}, ...] in ascending exponent order.
nlohmann::json to_json(const LaurentPoly& p);

}  // namespace dlab
