#include "dlab/action/laurent.hpp"

#include <nlohmann/json.hpp>

#include "dlab/error.hpp"

namespace dlab {

namespace {

void check_arity(std::size_t expected, std::size_t got) {
  if (expected != got)
    throw Error(ErrorKind::DimensionMismatch,
                "expected " + std::to_string(expected) + " variables, got " + std::to_string(got));
}

std::string coefficient_text(const GaussianRational& c) {
  if (c.re == 0 || c.im == 0) return to_string(c);
  return "(" + to_string(c) + ")";
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t variables, const GaussianRational& c) {
  LaurentPoly p(variables);
  p.add_term(Exponent(variables, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const GaussianRational& c) {
  LaurentPoly p(e.size());
  p.add_term(e, c);
  return p;
}

void LaurentPoly::add_term(const Exponent& e, const GaussianRational& c) {
  check_arity(vars_, e.size());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_arity(vars_, o.vars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_arity(vars_, o.vars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  check_arity(a.vars_, b.vars_);
  LaurentPoly out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(a.vars_);
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

GaussianRational LaurentPoly::evaluate(const std::vector<GaussianRational>& point) const {
  check_arity(vars_, point.size());
  GaussianRational sum;
  for (const auto& [e, c] : terms_) {
    GaussianRational term = c;
    for (std::size_t k = 0; k < vars_; ++k) {
      if (e[k] < 0 && point[k].is_zero()) throw Error(ErrorKind::DegenerateScalar, "negative power of zero");
      term *= pow(point[k], e[k]);
    }
    sum += term;
  }
  return sum;
}

std::complex<double> LaurentPoly::evaluate(const std::vector<std::complex<double>>& point) const {
  check_arity(vars_, point.size());
  std::complex<double> sum = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> term = c.to_complex();
    for (std::size_t k = 0; k < vars_; ++k) term *= std::pow(point[k], static_cast<double>(e[k]));
    sum += term;
  }
  return sum;
}

std::string to_string(const LaurentPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::vector<std::string> vars = names;
  if (vars.empty()) {
    if (p.variables() == 1) {
      vars = {"t"};
    } else {
      for (std::size_t k = 0; k < p.variables(); ++k) vars.push_back("t" + std::to_string(k + 1));
    }
  }
  check_arity(p.variables(), vars.size());
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[k];
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    std::string term;
    if (mono.empty()) {
      term = to_string(c);
    } else if (c == GaussianRational(1)) {
      term = mono;
    } else if (c == GaussianRational(-1)) {
      term = "-" + mono;
    } else {
      term = coefficient_text(c) + "*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

nlohmann::json to_json(const LaurentPoly& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exponent", e}, {"coeff", to_string(c)}});
  return out;
}

}  // namespace dlab
