#include "dlab/action/spec.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "dlab/error.hpp"
#include "dlab/exact/literal.hpp"

namespace dlab {

namespace {

std::string weight_text(const LongVector& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s + ")";
}

bool is_identity(const GaussianMatrix& m) { return m == identity_matrix(m.size()); }

void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) throw Error(kind, what);
}

LongMatrix long_matrix_from_json(const nlohmann::json& j, const std::string& what) {
  require(j.is_array(), ErrorKind::InvalidSpec, what + " must be an array of rows");
  LongMatrix out;
  for (const auto& row : j) {
    require(row.is_array(), ErrorKind::InvalidSpec, what + " rows must be arrays");
    LongVector r;
    for (const auto& x : row) {
      require(x.is_number_integer(), ErrorKind::InvalidSpec, what + " entries must be integers");
      r.push_back(x.get<long>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::size_t CompactGroupSpec::index_of(const std::string& label) const {
  for (std::size_t k = 0; k < components.size(); ++k)
    if (components[k].label == label) return k;
  throw Error(ErrorKind::UnknownComponent, "no component labelled '" + label + "'");
}

std::size_t CompactGroupSpec::identity_index() const {
  const std::size_t n = components.size();
  for (std::size_t e = 0; e < n && e < component_table.size(); ++e) {
    bool ok = component_table[e].size() == n;
    for (std::size_t a = 0; ok && a < n; ++a)
      ok = component_table[e][a] == a && component_table[a].size() == n && component_table[a][e] == a;
    if (ok) return e;
  }
  throw Error(ErrorKind::InvalidSpec, "component table has no identity element");
}

LongVector transpose_apply(const LongMatrix& a, const LongVector& weight) {
  LongVector out(weight.size(), 0);
  for (std::size_t c = 0; c < weight.size(); ++c)
    for (std::size_t r = 0; r < weight.size(); ++r) out[c] += a[r][c] * weight[r];
  return out;
}

long integer_determinant(const LongMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix m(n, RationalVector(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m[r][c] = a[r][c];
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pick = col;
    while (pick < n && m[pick][col] == 0) ++pick;
    if (pick == n) return 0;
    if (pick != col) {
      std::swap(m[pick], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det.get_num().get_si();
}

LongMatrix multiply(const LongMatrix& a, const LongMatrix& b) {
  const std::size_t n = a.size();
  LongMatrix out(n, LongVector(n, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c = 0; c < n; ++c) out[r][c] += a[r][k] * b[k][c];
  return out;
}

LongMatrix identity_long(std::size_t n) {
  LongMatrix m(n, LongVector(n, 0));
  for (std::size_t k = 0; k < n; ++k) m[k][k] = 1;
  return m;
}

void validate_component(const TorusWeights& weights, const ComponentDatum& c) {
  const std::size_t r = weights.torus_rank;
  const std::size_t m = weights.size();
  const std::string who = "component '" + c.label + "': ";
  require(c.torus_aut.size() == r, ErrorKind::InvalidComponent, who + "torus_aut must be " + std::to_string(r) + "x" + std::to_string(r));
  for (const auto& row : c.torus_aut)
    require(row.size() == r, ErrorKind::InvalidComponent, who + "torus_aut must be square");
  const long det = integer_determinant(c.torus_aut);
  require(det == 1 || det == -1, ErrorKind::InvalidComponent, who + "torus_aut must have determinant +-1");
  require(c.rep_matrix.size() == m, ErrorKind::InvalidComponent, who + "rep_matrix must be " + std::to_string(m) + "x" + std::to_string(m));
  for (const auto& row : c.rep_matrix)
    require(row.size() == m, ErrorKind::InvalidComponent, who + "rep_matrix must be square");

  std::vector<LongVector> moved, original = weights.weights;
  for (const auto& w : weights.weights) moved.push_back(transpose_apply(c.torus_aut, w));
  std::sort(moved.begin(), moved.end());
  std::sort(original.begin(), original.end());
  require(moved == original, ErrorKind::InvalidComponent, who + "weight multiset is not invariant under the torus automorphism");

  // rho D(t) rho^-1 = D(A t) forces rho to send the line of weight l_i into
  // lines of weight l_j with A^T l_j = l_i.
  for (std::size_t j = 0; j < m; ++j) {
    const LongVector pulled = transpose_apply(c.torus_aut, weights.weights[j]);
    for (std::size_t i = 0; i < m; ++i) {
      if (c.rep_matrix[j][i].is_zero()) continue;
      require(pulled == weights.weights[i], ErrorKind::InvalidComponent,
              who + "rep_matrix sends weight " + weight_text(weights.weights[i]) + " to weight " +
                  weight_text(weights.weights[j]));
    }
  }
  require(!determinant(c.rep_matrix).is_zero(), ErrorKind::InvalidComponent, who + "rep_matrix is singular");
}

SpecValidation validate(const CompactGroupSpec& spec) {
  SpecValidation out;
  const std::size_t r = spec.weights.torus_rank;
  const std::size_t m = spec.weights.size();
  for (const auto& w : spec.weights.weights)
    require(w.size() == r, ErrorKind::InvalidSpec, "weight " + weight_text(w) + " does not have length " + std::to_string(r));
  const std::size_t n = spec.components.size();
  require(n > 0, ErrorKind::InvalidSpec, "at least the identity component is required");
  std::set<std::string> labels;
  for (const auto& c : spec.components) {
    require(!c.label.empty(), ErrorKind::InvalidSpec, "component labels must be nonempty");
    require(labels.insert(c.label).second, ErrorKind::InvalidSpec, "duplicate component label '" + c.label + "'");
    validate_component(spec.weights, c);
  }

  const auto& table = spec.component_table;
  require(table.size() == n, ErrorKind::InvalidSpec, "component_table must be " + std::to_string(n) + "x" + std::to_string(n));
  for (const auto& row : table) {
    require(row.size() == n, ErrorKind::InvalidSpec, "component_table must be square");
    std::set<std::size_t> seen(row.begin(), row.end());
    require(seen.size() == n && *seen.rbegin() < n, ErrorKind::InvalidSpec, "component_table rows must be permutations");
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::set<std::size_t> seen;
    for (std::size_t a = 0; a < n; ++a) seen.insert(table[a][b]);
    require(seen.size() == n, ErrorKind::InvalidSpec, "component_table columns must be permutations");
  }
  const std::size_t e = spec.identity_index();
  require(spec.components[e].torus_aut == identity_long(r) && is_identity(spec.components[e].rep_matrix),
          ErrorKind::InvalidSpec, "identity component must have A = I and rep_matrix = I");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        require(table[table[a][b]][c] == table[a][table[b][c]], ErrorKind::InvalidSpec, "component_table is not associative");

  // Products of representatives must agree with the table up to an element of T.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto& ca = spec.components[a];
      const auto& cb = spec.components[b];
      const auto& cab = spec.components[table[a][b]];
      const std::string who = "(" + ca.label + ")(" + cb.label + ") = " + cab.label + ": ";
      require(multiply(ca.torus_aut, cb.torus_aut) == cab.torus_aut, ErrorKind::InvalidSpec,
              who + "torus automorphisms do not compose");
      const GaussianMatrix t = multiply(multiply(ca.rep_matrix, cb.rep_matrix), inverse(cab.rep_matrix));
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          const auto& wi = spec.weights.weights[i];
          const auto& wj = spec.weights.weights[j];
          if (i != j) {
            require(t[i][j].is_zero(), ErrorKind::InvalidSpec, who + "representation products leave the torus");
          } else {
            require(t[i][i].norm() == 1, ErrorKind::InvalidSpec, who + "representation products leave the torus");
          }
          if (wi == wj)
            require(t[i][i] == t[j][j], ErrorKind::InvalidSpec, who + "representation products leave the torus");
        }
        if (std::all_of(spec.weights.weights[i].begin(), spec.weights.weights[i].end(), [](long x) { return x == 0; }))
          require(t[i][i] == GaussianRational(1), ErrorKind::InvalidSpec, who + "representation products leave the torus");
      }
    }
  }

  std::vector<LongVector> ws = spec.weights.weights, neg;
  for (const auto& w : ws) {
    LongVector v = w;
    for (auto& x : v) x = -x;
    neg.push_back(v);
  }
  std::sort(ws.begin(), ws.end());
  std::sort(neg.begin(), neg.end());
  if (ws != neg) out.warnings.push_back("weight multiset is not closed under negation; V is not the complexification of a real representation");
  return out;
}

CompactGroupSpec spec_from_json(const nlohmann::json& j) {
  require(j.is_object(), ErrorKind::InvalidSpec, "group spec must be a JSON object");
  CompactGroupSpec spec;
  try {
    const long r = j.at("torus_rank").get<long>();
    require(r >= 0, ErrorKind::InvalidSpec, "torus_rank must be non-negative");
    spec.weights.torus_rank = static_cast<std::size_t>(r);
    spec.weights.weights = long_matrix_from_json(j.at("weights"), "weights");
    for (const auto& c : j.at("components")) {
      ComponentDatum d;
      d.label = c.at("label").get<std::string>();
      d.torus_aut = long_matrix_from_json(c.at("torus_aut"), "torus_aut");
      for (const auto& row : c.at("rep_matrix")) {
        GaussianVector v;
        for (const auto& x : row) v.push_back(gaussian_from_json(x));
        d.rep_matrix.push_back(std::move(v));
      }
      spec.components.push_back(std::move(d));
    }
    if (spec.weights.torus_rank == 0) {
      // An empty torus_aut reads as zero rows; r = 0 needs exactly that.
      for (auto& c : spec.components) c.torus_aut.clear();
    }
    for (const auto& row : j.at("component_table")) {
      std::vector<std::size_t> out;
      for (const auto& x : row) {
        if (x.is_string()) {
          out.push_back(spec.index_of(x.get<std::string>()));
        } else {
          const long k = x.get<long>();
          require(k >= 0 && static_cast<std::size_t>(k) < spec.components.size(), ErrorKind::InvalidSpec,
                  "component_table index out of range");
          out.push_back(static_cast<std::size_t>(k));
        }
      }
      spec.component_table.push_back(std::move(out));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidSpec, e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnknownComponent) throw Error(ErrorKind::InvalidSpec, e.what());
    throw;
  }
  validate(spec);
  return spec;
}

nlohmann::json to_json(const CompactGroupSpec& spec) {
  nlohmann::json comps = nlohmann::json::array();
  for (const auto& c : spec.components) {
    nlohmann::json rep = nlohmann::json::array();
    for (const auto& row : c.rep_matrix) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& x : row) r.push_back(to_string(x));
      rep.push_back(std::move(r));
    }
    comps.push_back({{"label", c.label}, {"torus_aut", c.torus_aut}, {"rep_matrix", rep}});
  }
  nlohmann::json table = nlohmann::json::array();
  for (const auto& row : spec.component_table) {
    nlohmann::json r = nlohmann::json::array();
    for (auto k : row) r.push_back(spec.components[k].label);
    table.push_back(std::move(r));
  }
  return {{"torus_rank", spec.weights.torus_rank},
          {"weights", spec.weights.weights},
          {"components", comps},
          {"component_table", table}};
}

}  // namespace dlab
