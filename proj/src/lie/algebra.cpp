#include "dlab/lie/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "dlab/exact/literal.hpp"

namespace dlab {

namespace {

bool is_zero_vector(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

void check_parent(const LieAlgebraSC& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim())
    throw Error(ErrorKind::DimensionMismatch,
                "subspace of dimension " + std::to_string(s.ambient_dim()) + " given for algebra of dimension " +
                    std::to_string(a.dim()));
}

// Iterates next(term) from start, stopping at a zero term or a repeat.
template <typename Step>
std::vector<Subspace> iterate_series(const Subspace& start, Step next) {
  std::vector<Subspace> out{start};
  while (!out.back().is_zero()) {
    if (out.size() > start.ambient_dim() + 1) throw Error(ErrorKind::InvariantFailure, "series did not stabilize");
    Subspace t = next(out.back());
    const bool repeat = t == out.back();
    out.push_back(std::move(t));
    if (repeat) break;
  }
  return out;
}

// Coefficients x with sum_r x[r] rows[r] = w, or nullopt. rows must be independent.
std::optional<RationalVector> coordinates_in(const RationalMatrix& rows, const RationalVector& w) {
  const std::size_t n = rows.size();
  const std::size_t len = w.size();
  RationalMatrix aug(len, RationalVector(n + 1));
  for (std::size_t p = 0; p < len; ++p) {
    for (std::size_t r = 0; r < n; ++r) aug[p][r] = rows[r][p];
    aug[p][n] = w[p];
  }
  const auto piv = rref(aug, n + 1);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  RationalVector x(n, Rational(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][n];
  return x;
}

RationalMatrix invert(const RationalMatrix& p) {
  const std::size_t n = p.size();
  RationalMatrix aug(n, RationalVector(2 * n, Rational(0)));
  for (std::size_t r = 0; r < n; ++r) {
    if (p[r].size() != n) throw Error(ErrorKind::DimensionMismatch, "change of basis must be square");
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = p[r][c];
    aug[r][n + r] = 1;
  }
  const auto piv = rref(aug, 2 * n);
  if (piv.size() < n || (n > 0 && piv[n - 1] >= n)) throw Error(ErrorKind::DegenerateInput, "change of basis is singular");
  RationalMatrix inv(n, RationalVector(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv[r][c] = aug[r][n + c];
  return inv;
}

RationalVector flatten(const RationalMatrix& m) {
  RationalVector out;
  for (const auto& row : m) out.insert(out.end(), row.begin(), row.end());
  return out;
}

RationalMatrix commutator(const RationalMatrix& x, const RationalMatrix& y) {
  const std::size_t n = x.size();
  RationalMatrix out(n, RationalVector(n, Rational(0)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = 0; t < n; ++t) out[r][t] += x[r][s] * y[s][t] - y[r][s] * x[s][t];
  return out;
}

std::size_t index_from_json(const LieAlgebraSC& a, const nlohmann::json& v) {
  if (v.is_number_unsigned() || v.is_number_integer()) {
    const long long i = v.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= a.dim())
      throw Error(ErrorKind::InvalidSpec, "basis index out of range: " + v.dump());
    return static_cast<std::size_t>(i);
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (auto i = a.index_of(s)) return *i;
    try {
      std::size_t used = 0;
      const unsigned long i = std::stoul(s, &used);
      if (used == s.size() && i < a.dim()) return i;
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorKind::InvalidSpec, "unknown basis element: " + v.dump());
}

}  // namespace

LieAlgebraSC::LieAlgebraSC(std::vector<std::string> basis_names)
    : names_(std::move(basis_names)), c_(names_.size() * names_.size() * names_.size(), Rational(0)) {}

LieAlgebraSC LieAlgebraSC::with_dim(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < dim; ++k) names.push_back("e" + std::to_string(k));
  return LieAlgebraSC(std::move(names));
}

void LieAlgebraSC::set_bracket(std::size_t i, std::size_t j, const RationalVector& v) {
  if (i >= dim() || j >= dim() || v.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "bracket out of range");
  for (std::size_t k = 0; k < dim(); ++k) {
    c(i, j, k) = v[k];
    c(j, i, k) = -v[k];
  }
}

RationalVector LieAlgebraSC::bracket(std::size_t i, std::size_t j) const {
  RationalVector out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = c(i, j, k);
  return out;
}

RationalVector LieAlgebraSC::bracket(const RationalVector& u, const RationalVector& w) const {
  if (u.size() != dim() || w.size() != dim()) throw Error(ErrorKind::DimensionMismatch, "bracket argument length");
  RationalVector out(dim(), Rational(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (w[j] == 0) continue;
      const Rational f = u[i] * w[j];
      for (std::size_t k = 0; k < dim(); ++k) out[k] += f * c(i, j, k);
    }
  }
  return out;
}

std::optional<std::size_t> LieAlgebraSC::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

ValidationReport validate(const LieAlgebraSC& a) {
  const std::size_t n = a.dim();
  ValidationReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (a.c(i, j, k) + a.c(j, i, k) != 0) {
          report.ok = false;
          report.violation = ErrorKind::AntisymmetryViolation;
          report.indices = {i, j};
          report.message = "[" + a.basis_names()[i] + "," + a.basis_names()[j] + "] is not antisymmetric";
          return report;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        RationalVector ei(n, Rational(0)), ej(n, Rational(0)), ek(n, Rational(0));
        ei[i] = ej[j] = ek[k] = 1;
        RationalVector sum = a.bracket(ei, a.bracket(j, k));
        const RationalVector t2 = a.bracket(ej, a.bracket(k, i));
        const RationalVector t3 = a.bracket(ek, a.bracket(i, j));
        for (std::size_t m = 0; m < n; ++m) sum[m] += t2[m] + t3[m];
        if (!is_zero_vector(sum)) {
          report.ok = false;
          report.violation = ErrorKind::JacobiViolation;
          report.indices = {i, j, k};
          report.message = "Jacobi fails on (" + a.basis_names()[i] + "," + a.basis_names()[j] + "," +
                           a.basis_names()[k] + ")";
          return report;
        }
      }
    }
  }
  return report;
}

void require_valid(const LieAlgebraSC& a) {
  const auto r = validate(a);
  if (!r.ok) throw Error(*r.violation, r.message);
}

Subspace whole(const LieAlgebraSC& a) { return Subspace::whole(a.dim()); }

Subspace product_space(const LieAlgebraSC& a, const Subspace& u, const Subspace& w) {
  check_parent(a, u);
  check_parent(a, w);
  RationalMatrix spans;
  for (const auto& x : u.basis())
    for (const auto& y : w.basis()) spans.push_back(a.bracket(x, y));
  return Subspace::span(a.dim(), spans);
}

std::vector<Subspace> derived_series(const LieAlgebraSC& a) {
  return iterate_series(whole(a), [&a](const Subspace& t) { return product_space(a, t, t); });
}

std::vector<Subspace> lower_central_series(const LieAlgebraSC& a) { return lower_central_series(a, whole(a)); }

std::vector<Subspace> lower_central_series(const LieAlgebraSC& a, const Subspace& s) {
  check_parent(a, s);
  return iterate_series(s, [&a, &s](const Subspace& t) { return product_space(a, s, t); });
}

bool is_solvable(const LieAlgebraSC& a) { return derived_series(a).back().is_zero(); }

bool is_nilpotent(const LieAlgebraSC& a) { return lower_central_series(a).back().is_zero(); }

bool is_nilpotent_subalgebra(const LieAlgebraSC& a, const Subspace& s) {
  return lower_central_series(a, s).back().is_zero();
}

bool is_subalgebra(const LieAlgebraSC& a, const Subspace& s) { return s.contains(product_space(a, s, s)); }

bool is_ideal(const LieAlgebraSC& a, const Subspace& s) { return s.contains(product_space(a, whole(a), s)); }

LieAlgebraSC quotient(const LieAlgebraSC& a, const Subspace& ideal) {
  check_parent(a, ideal);
  if (!is_ideal(a, ideal)) throw Error(ErrorKind::NotAnIdeal, "subspace is not an ideal");
  const auto& piv = ideal.pivots();
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (std::find(piv.begin(), piv.end(), k) == piv.end()) keep.push_back(k);
  std::vector<std::string> names;
  for (auto k : keep) names.push_back(a.basis_names()[k]);
  LieAlgebraSC q(names);
  for (std::size_t p = 0; p < keep.size(); ++p) {
    for (std::size_t r = 0; r < keep.size(); ++r) {
      const RationalVector w = ideal.reduce(a.bracket(keep[p], keep[r]));
      for (std::size_t s = 0; s < keep.size(); ++s) q.c(p, r, s) = w[keep[s]];
    }
  }
  return q;
}

ClassifierResult theorem_A_classifier(const LieAlgebraSC& a) {
  ClassifierResult out;
  out.perfect_core = derived_series(a).back();
  out.quotient_nilpotent = is_nilpotent(quotient(a, out.perfect_core));
  const bool perfect = a.dim() > 0 && out.perfect_core.dim() == a.dim();
  out.verdict = perfect || !out.quotient_nilpotent;
  return out;
}

SpliceResult splice_check(const LieAlgebraSC& a, const Subspace& j, const Subspace& k) {
  check_parent(a, j);
  check_parent(a, k);
  SpliceResult r;
  r.j_ideal = is_ideal(a, j);
  r.k_ideal = is_ideal(a, k);
  const Subspace j1 = product_space(a, j, j);
  r.nested = j1.contains(k) && j.contains(j1);
  r.j_nilpotent = is_nilpotent_subalgebra(a, j);
  r.k_nilpotent = is_nilpotent_subalgebra(a, k);
  r.quotient_nilpotent = r.k_ideal && is_nilpotent(quotient(a, k));
  r.hypotheses_hold = r.j_ideal && r.k_ideal && r.nested && r.j_nilpotent && r.k_nilpotent && r.quotient_nilpotent;
  r.conclusion_holds = is_nilpotent(a);
  return r;
}

LieAlgebraSC matrix_lie_algebra(const std::vector<RationalMatrix>& generators) {
  if (generators.empty()) return LieAlgebraSC::with_dim(0);
  const std::size_t n = generators.front().size();
  auto unflatten = [n](const RationalVector& v) {
    RationalMatrix m(n, RationalVector(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m[r][c] = v[r * n + c];
    return m;
  };
  // Closure under commutators; new elements are reduced against the current span.
  Subspace span = Subspace::zero(n * n);
  std::vector<RationalMatrix> basis;
  auto try_add = [&](const RationalMatrix& m) {
    RationalVector v = flatten(m);
    if (v.size() != n * n) throw Error(ErrorKind::DimensionMismatch, "generators of different sizes");
    v = span.reduce(v);
    if (is_zero_vector(v)) return;
    RationalMatrix rows = span.basis();
    rows.push_back(v);
    span = Subspace::span(n * n, rows);
    basis.push_back(unflatten(v));
  };
  for (const auto& g : generators) try_add(g);
  for (std::size_t p = 0; p < basis.size(); ++p)
    for (std::size_t q = 0; q < p; ++q) try_add(commutator(basis[p], basis[q]));

  // Structure constants in the echelon basis of the span.
  const RationalMatrix& flat = span.basis();
  std::vector<RationalMatrix> echelon;
  for (const auto& v : flat) echelon.push_back(unflatten(v));
  LieAlgebraSC a = LieAlgebraSC::with_dim(echelon.size());
  for (std::size_t p = 0; p < echelon.size(); ++p) {
    for (std::size_t q = p + 1; q < echelon.size(); ++q) {
      auto x = coordinates_in(flat, flatten(commutator(echelon[p], echelon[q])));
      if (!x) throw Error(ErrorKind::InvariantFailure, "commutator closure incomplete");
      a.set_bracket(p, q, *x);
    }
  }
  return a;
}

LieAlgebraSC change_basis(const LieAlgebraSC& a, const RationalMatrix& p) {
  const std::size_t n = a.dim();
  if (p.size() != n) throw Error(ErrorKind::DimensionMismatch, "change of basis must be square");
  const RationalMatrix inv = invert(p);
  LieAlgebraSC out(a.basis_names());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = r + 1; s < n; ++s) {
      const RationalVector w = a.bracket(p[r], p[s]);
      RationalVector x(n, Rational(0));
      for (std::size_t t = 0; t < n; ++t) {
        if (w[t] == 0) continue;
        for (std::size_t u = 0; u < n; ++u) x[u] += w[t] * inv[t][u];
      }
      out.set_bracket(r, s, x);
    }
  }
  return out;
}

LieAlgebraSC algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidSpec, "algebra must be a JSON object");
  std::vector<std::string> names;
  if (j.contains("basis")) {
    for (const auto& n : j.at("basis")) {
      if (!n.is_string()) throw Error(ErrorKind::InvalidSpec, "basis names must be strings");
      names.push_back(n.get<std::string>());
    }
  }
  if (j.contains("dim")) {
    const auto d = j.at("dim").get<std::size_t>();
    if (names.empty()) {
      names = LieAlgebraSC::with_dim(d).basis_names();
    } else if (names.size() != d) {
      throw Error(ErrorKind::InvalidSpec, "dim does not match basis length");
    }
  }
  if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
    throw Error(ErrorKind::InvalidSpec, "duplicate basis names");
  LieAlgebraSC a(names);
  std::set<std::pair<std::size_t, std::size_t>> given;
  if (j.contains("brackets")) {
    for (const auto& b : j.at("brackets")) {
      const std::size_t i = index_from_json(a, b.at("i"));
      const std::size_t k = index_from_json(a, b.at("j"));
      if (!given.insert({i, k}).second) throw Error(ErrorKind::InvalidSpec, "bracket given twice");
      if (b.contains("coeffs")) {
        for (const auto& [key, value] : b.at("coeffs").items())
          a.c(i, k, index_from_json(a, nlohmann::json(key))) = rational_from_json(value);
      }
    }
  }
  // Missing mirror entries follow from antisymmetry; explicit ones are kept so validate can see them.
  for (const auto& [i, k] : given) {
    if (i == k || given.count({k, i})) continue;
    for (std::size_t m = 0; m < a.dim(); ++m) a.c(k, i, m) = -a.c(i, k, m);
  }
  return a;
}

nlohmann::json to_json(const LieAlgebraSC& a) {
  nlohmann::json brackets = nlohmann::json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (i == k) continue;
      bool mirror = true, zero = true;
      for (std::size_t m = 0; m < a.dim(); ++m) {
        mirror = mirror && a.c(i, k, m) == -a.c(k, i, m);
        zero = zero && a.c(i, k, m) == 0;
      }
      if (zero || (i > k && mirror)) continue;
      nlohmann::json coeffs = nlohmann::json::object();
      for (std::size_t m = 0; m < a.dim(); ++m)
        if (a.c(i, k, m) != 0) coeffs[a.basis_names()[m]] = to_string(a.c(i, k, m));
      brackets.push_back({{"i", a.basis_names()[i]}, {"j", a.basis_names()[k]}, {"coeffs", coeffs}});
    }
  }
  return {{"dim", a.dim()}, {"basis", a.basis_names()}, {"brackets", brackets}};
}

Subspace subspace_from_json(const LieAlgebraSC& a, const nlohmann::json& j) {
  const nlohmann::json& list = j.is_object() ? j.at("basis") : j;
  if (!list.is_array()) throw Error(ErrorKind::InvalidSpec, "subspace must be a list of vectors or basis names");
  RationalMatrix rows;
  for (const auto& item : list) {
    if (item.is_array()) {
      RationalVector v;
      for (const auto& x : item) v.push_back(rational_from_json(x));
      if (v.size() != a.dim())
        throw Error(ErrorKind::DimensionMismatch, "vector of length " + std::to_string(v.size()) +
                                                      " for algebra of dimension " + std::to_string(a.dim()));
      rows.push_back(std::move(v));
    } else {
      RationalVector v(a.dim(), Rational(0));
      v[index_from_json(a, item)] = 1;
      rows.push_back(std::move(v));
    }
  }
  return Subspace::span(a.dim(), rows);
}

nlohmann::json to_json(const Subspace& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : s.basis()) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : r) row.push_back(to_string(x));
    rows.push_back(std::move(row));
  }
  return {{"dim", s.dim()}, {"basis", rows}};
}

}  // namespace dlab
