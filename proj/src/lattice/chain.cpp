#include "dlab/lattice/chain.hpp"

#include "dlab/error.hpp"

namespace dlab {

namespace {

bool is_one(const AlgebraicScalar& z) {
  if (z.is_gaussian()) return z.gaussian() == GaussianRational(1);
  const auto& c = z.abstract_form().minpoly.coefficients();
  return c.size() == 2 && c[0] == -1 && c[1] == 1;
}

// Reduces x^n (n may be negative) modulo the minimal polynomial.
RationalPolynomial power_mod(const RationalPolynomial& f, long n) {
  RationalPolynomial base;
  if (n >= 0) {
    base = {Rational(0), Rational(1)};
  } else {
    // f = a0 + x h(x) with a0 != 0, so x^-1 = -h(x) / a0.
    base.assign(f.begin() + 1, f.end());
    for (auto& c : base) c = -c / f[0];
    qpoly::trim(base);
    n = -n;
  }
  base = qpoly::remainder(base, f);
  RationalPolynomial result{Rational(1)};
  result = qpoly::remainder(result, f);
  while (n > 0) {
    if (n & 1L) result = qpoly::remainder(qpoly::multiply(result, base), f);
    n >>= 1;
    if (n > 0) base = qpoly::remainder(qpoly::multiply(base, base), f);
  }
  return result;
}

}  // namespace

std::vector<std::size_t> ChainReport::ranks() const {
  std::vector<std::size_t> out;
  for (const auto& l : levels) out.push_back(l.rank());
  return out;
}

std::vector<Rational> ChainReport::covolumes() const {
  std::vector<Rational> out;
  for (const auto& l : levels) out.push_back(l.covolume());
  return out;
}

RationalVector field_coordinates_of_power(const AlgebraicScalar& z, long n) {
  if (z.is_gaussian()) {
    GaussianRational p = pow(z.gaussian(), n);
    return {p.re, p.im};
  }
  const RationalPolynomial f = z.abstract_form().minpoly.to_rational();
  const std::size_t d = f.size() - 1;
  RationalPolynomial r = power_mod(f, n);
  RationalVector out(d, Rational(0));
  for (std::size_t k = 0; k < r.size() && k < d; ++k) out[k] = r[k];
  return out;
}

ChainReport derived_module_chain(const AlgebraicScalar& z, unsigned bound) {
  if (bound == 0) throw Error(ErrorKind::DegenerateInput, "chain bound must be positive");
  if (!unit_modulus(z)) throw Error(ErrorKind::NotUnitModulus, describe(z));
  if (is_one(z)) throw Error(ErrorKind::DegenerateScalar, "z = 1 gives the zero chain");

  const RationalVector one = field_coordinates_of_power(z, 0);
  GenSet gens{one.size(), {}};
  ChainReport report;
  for (unsigned level = 1; level <= bound; ++level) {
    for (long n : {static_cast<long>(level), -static_cast<long>(level)}) {
      RationalVector power = field_coordinates_of_power(z, n);
      RationalVector g(one.size());
      for (std::size_t k = 0; k < g.size(); ++k) g[k] = one[k] - power[k];
      gens.generators.push_back(std::move(g));
    }
    report.levels.push_back(hnf(gens));
  }

  // Start of the final run of equal levels, if that run has length >= 2.
  std::size_t start = report.levels.size() - 1;
  while (start > 0 && report.levels[start - 1] == report.levels[start]) --start;
  if (start + 1 < report.levels.size()) {
    report.stabilized_at = static_cast<unsigned>(start + 2);  // levels are 1-based
    report.verdict = ChainVerdict::Stabilized;
  }
  return report;
}

bool fg_derived_criterion(const AlgebraicScalar& z) {
  if (!unit_modulus(z)) throw Error(ErrorKind::NotUnitModulus, describe(z));
  return is_algebraic_integer(z);
}

Rational subgroup_of_Q_generator(const std::vector<Rational>& gens) {
  Integer common = 1;
  for (const auto& q : gens) common = lcm(common, q.get_den());
  Integer g = 0;
  for (const auto& q : gens) g = gcd(g, Integer(q.get_num() * (common / q.get_den())));
  Rational out(g, common);
  out.canonicalize();
  return out;
}

nlohmann::json to_json(const LatticeForm& lattice) {
  nlohmann::json basis = nlohmann::json::array();
  for (const auto& row : lattice.basis) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(x.get_str());
    basis.push_back(std::move(r));
  }
  return {{"ambient_dim", lattice.ambient_dim},
          {"basis", std::move(basis)},
          {"denominator", lattice.denominator.get_str()},
          {"rank", lattice.rank()},
          {"covolume", to_string(lattice.covolume())}};
}

nlohmann::json to_json(const ChainReport& report) {
  nlohmann::json ranks = nlohmann::json::array();
  nlohmann::json covolumes = nlohmann::json::array();
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& l : report.levels) {
    ranks.push_back(l.rank());
    covolumes.push_back(to_string(l.covolume()));
    levels.push_back(to_json(l));
  }
  nlohmann::json out{{"ranks", ranks},
                     {"covolumes", covolumes},
                     {"levels", levels},
                     {"verdict", report.verdict == ChainVerdict::Stabilized ? "stabilized" : "not_stabilized_by_bound"}};
  out["stabilized_at"] = report.stabilized_at ? nlohmann::json(*report.stabilized_at) : nlohmann::json(nullptr);
  return out;
}

}  // namespace dlab
