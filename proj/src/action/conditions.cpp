#include "dlab/action/conditions.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "dlab/error.hpp"
#include "dlab/lattice/hnf.hpp"

namespace dlab {

namespace {

void check_component(const CompactGroupSpec& spec, std::size_t component) {
  if (component >= spec.components.size())
    throw Error(ErrorKind::InvalidComponent, "component index " + std::to_string(component) + " out of range");
}

// Exponent B^T l of the weight l restricted to the subtorus with basis columns B.
Exponent restricted_weight(const LongMatrix& b, const LongVector& weight, std::size_t cols) {
  Exponent e(cols, 0);
  for (std::size_t k = 0; k < cols; ++k)
    for (std::size_t j = 0; j < weight.size(); ++j) e[k] += b[j][k] * weight[j];
  return e;
}

}  // namespace

LongMatrix fixed_subtorus(const LongMatrix& a) {
  const std::size_t r = a.size();
  IntegerMatrix m(r, IntegerVector(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m[i][j] = a[i][j] - (i == j ? 1 : 0);
  const IntegerMatrix kernel = integer_kernel(m, r);
  LongMatrix b(r, LongVector(kernel.size(), 0));
  for (std::size_t k = 0; k < kernel.size(); ++k) {
    for (std::size_t i = 0; i < r; ++i) {
      if (!kernel[k][i].fits_slong_p()) throw Error(ErrorKind::InvariantFailure, "fixed subtorus basis overflow");
      b[i][k] = kernel[k][i].get_si();
    }
  }
  return b;
}

LaurentPoly generic_det(const CompactGroupSpec& spec, std::size_t component, const LongMatrix& b) {
  check_component(spec, component);
  const std::size_t r = spec.weights.torus_rank;
  const std::size_t m = spec.weights.size();
  if (b.size() != r) throw Error(ErrorKind::DimensionMismatch, "subtorus basis must have " + std::to_string(r) + " rows");
  const std::size_t cols = r ? b[0].size() : 0;
  for (const auto& row : b)
    if (row.size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged subtorus basis");
  if (m > 16) throw Error(ErrorKind::DegenerateInput, "symbolic expansion limited to 16 weight lines");
  const auto& rho = spec.components[component].rep_matrix;

  std::vector<Exponent> exps;
  for (const auto& w : spec.weights.weights) exps.push_back(restricted_weight(b, w, cols));

  LaurentPoly out(cols);
  for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1UL << i)) s.push_back(i);
    GaussianMatrix minor(s.size(), GaussianVector(s.size()));
    for (std::size_t p = 0; p < s.size(); ++p)
      for (std::size_t q = 0; q < s.size(); ++q) minor[p][q] = rho[s[p]][s[q]];
    GaussianRational d = determinant(minor);
    if (d.is_zero()) continue;
    if (s.size() % 2) d = -d;
    Exponent e(cols, 0);
    for (auto i : s)
      for (std::size_t k = 0; k < cols; ++k) e[k] += exps[i][k];
    out.add_term(e, d);
  }
  return out;
}

GaussianRational det_at_point(const CompactGroupSpec& spec, std::size_t component,
                              const std::vector<GaussianRational>& t) {
  check_component(spec, component);
  const std::size_t m = spec.weights.size();
  if (t.size() != spec.weights.torus_rank) throw Error(ErrorKind::DimensionMismatch, "torus point has wrong rank");
  const auto& rho = spec.components[component].rep_matrix;
  GaussianMatrix a = identity_matrix(m);
  for (std::size_t i = 0; i < m; ++i) {
    GaussianRational d(1);
    for (std::size_t k = 0; k < t.size(); ++k) d *= pow(t[k], spec.weights.weights[i][k]);
    for (std::size_t j = 0; j < m; ++j) a[i][j] -= d * rho[i][j];
  }
  return determinant(a);
}

ComponentVerdicts cond_c_check(const CompactGroupSpec& spec) {
  ComponentVerdicts out;
  const LongMatrix id = identity_long(spec.weights.torus_rank);
  for (std::size_t k = 0; k < spec.components.size(); ++k)
    out.emplace_back(spec.components[k].label, !generic_det(spec, k, id).is_zero());
  return out;
}

ComponentVerdicts cond_d_check(const CompactGroupSpec& spec) {
  ComponentVerdicts out;
  for (std::size_t k = 0; k < spec.components.size(); ++k) {
    const LongMatrix b = fixed_subtorus(spec.components[k].torus_aut);
    out.emplace_back(spec.components[k].label, !generic_det(spec, k, b).is_zero());
  }
  return out;
}

bool almost_elliptic(const CompactGroupSpec& spec) {
  const auto c = cond_c_check(spec);
  return std::all_of(c.begin(), c.end(), [](const auto& p) { return p.second; });
}

AuditReport equivalence_audit(const CompactGroupSpec& spec) {
  AuditReport report;
  const LongMatrix id = identity_long(spec.weights.torus_rank);
  for (std::size_t k = 0; k < spec.components.size(); ++k) {
    AuditEntry e;
    e.label = spec.components[k].label;
    const LongMatrix b = fixed_subtorus(spec.components[k].torus_aut);
    e.fixed_rank = spec.weights.torus_rank ? b[0].size() : 0;
    e.full_det = generic_det(spec, k, id);
    e.fixed_det = generic_det(spec, k, b);
    e.cond_c = !e.full_det.is_zero();
    e.cond_d = !e.fixed_det.is_zero();
    if (e.cond_c != e.cond_d) report.disagreements.push_back(e.label);
    report.entries.push_back(std::move(e));
  }
  return report;
}

CompactGroupSpec monothetic_reduction(const CompactGroupSpec& spec, const std::string& label) {
  const std::size_t s = spec.index_of(label);
  const std::size_t e = spec.identity_index();
  std::vector<bool> member(spec.components.size(), false);
  std::size_t x = e;
  do {
    member[x] = true;
    x = spec.component_table[x][s];
  } while (x != e);

  std::vector<std::size_t> keep, slot(spec.components.size(), 0);
  for (std::size_t k = 0; k < member.size(); ++k) {
    if (!member[k]) continue;
    slot[k] = keep.size();
    keep.push_back(k);
  }
  CompactGroupSpec out;
  out.weights = spec.weights;
  for (auto k : keep) out.components.push_back(spec.components[k]);
  for (auto a : keep) {
    std::vector<std::size_t> row;
    for (auto b : keep) row.push_back(slot[spec.component_table[a][b]]);
    out.component_table.push_back(std::move(row));
  }
  return out;
}

nlohmann::json to_json(const ComponentVerdicts& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [label, ok] : v) out.push_back({{"component", label}, {"holds", ok}});
  return out;
}

nlohmann::json to_json(const AuditReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    entries.push_back({{"component", e.label},
                       {"cond_c", e.cond_c},
                       {"cond_d", e.cond_d},
                       {"fixed_rank", e.fixed_rank},
                       {"full_det", to_string(e.full_det)},
                       {"fixed_det", to_string(e.fixed_det)}});
  }
  return {{"agree", report.agree()}, {"disagreements", report.disagreements}, {"components", entries}};
}

}  // namespace dlab
