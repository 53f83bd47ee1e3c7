#pragma once

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dlab/action/laurent.hpp"
#include "dlab/action/spec.hpp"

namespace dlab {

/// Columns form a basis of ker(A - I) in Z^r, so the matrix is r x r'.
/// Rows are always r long-vectors of length r'.
LongMatrix fixed_subtorus(const LongMatrix& a);

/// u -> det(I - D(B u) rho(sigma)) as a Laurent polynomial in r' variables.
/// Expanded over principal minors:
///   sum over S of (-1)^|S| u^(sum_{i in S} B^T l_i) det(rho_{S,S}).
LaurentPoly generic_det(const CompactGroupSpec& spec, std::size_t component, const LongMatrix& b);

/// Direct exact determinant det(I - D(t) rho(sigma)) at a torus point.
GaussianRational det_at_point(const CompactGroupSpec& spec, std::size_t component,
                              const std::vector<GaussianRational>& t);

using ComponentVerdicts = std::vector<std::pair<std::string, bool>>;

/// Per component: the full-torus determinant is not identically zero.
ComponentVerdicts cond_c_check(const CompactGroupSpec& spec);
/// Per component: the determinant restricted to the fixed subtorus is not identically zero.
ComponentVerdicts cond_d_check(const CompactGroupSpec& spec);
bool almost_elliptic(const CompactGroupSpec& spec);

struct AuditEntry {
  std::string label;
  bool cond_c = false;
  bool cond_d = false;
  std::size_t fixed_rank = 0;
  LaurentPoly full_det;
  LaurentPoly fixed_det;
};

struct AuditReport {
  std::vector<AuditEntry> entries;
  std::vector<std::string> disagreements;
  bool agree() const { return disagreements.empty(); }
};

AuditReport equivalence_audit(const CompactGroupSpec& spec);

/// Sub-spec on the cyclic subgroup generated by the given component.
CompactGroupSpec monothetic_reduction(const CompactGroupSpec& spec, const std::string& label);

nlohmann::json to_json(const ComponentVerdicts& v);
nlohmann::json to_json(const AuditReport& report);

}  // namespace dlab
