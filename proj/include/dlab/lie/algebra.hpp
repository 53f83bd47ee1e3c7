#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dlab/error.hpp"
#include "dlab/exact/rational.hpp"
#include "dlab/lie/subspace.hpp"

namespace dlab {

/// Finite-dimensional Lie algebra over Q given by structure constants
/// [e_i, e_j] = sum_k c(i,j,k) e_k.
class LieAlgebraSC {
 public:
  LieAlgebraSC() = default;
  explicit LieAlgebraSC(std::vector<std::string> basis_names);
  static LieAlgebraSC with_dim(std::size_t dim);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }

  Rational& c(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim() + j) * dim() + k]; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim() + j) * dim() + k]; }

  /// Sets [e_i, e_j] = v and [e_j, e_i] = -v.
  void set_bracket(std::size_t i, std::size_t j, const RationalVector& v);
  RationalVector bracket(std::size_t i, std::size_t j) const;
  RationalVector bracket(const RationalVector& u, const RationalVector& w) const;

  std::optional<std::size_t> index_of(const std::string& name) const;

  friend bool operator==(const LieAlgebraSC& a, const LieAlgebraSC& b) { return a.names_ == b.names_ && a.c_ == b.c_; }

 private:
  std::vector<std::string> names_;
  std::vector<Rational> c_;
};

struct ValidationReport {
  bool ok = true;
  std::optional<ErrorKind> violation;
  std::vector<std::size_t> indices;  // (i,j) or (i,j,k)
  std::string message;
};

ValidationReport validate(const LieAlgebraSC& a);
/// Throws the violation from validate, if any.
void require_valid(const LieAlgebraSC& a);

Subspace whole(const LieAlgebraSC& a);
Subspace product_space(const LieAlgebraSC& a, const Subspace& u, const Subspace& w);

/// Iterates until a term is zero or equals its predecessor; that term is kept.
std::vector<Subspace> derived_series(const LieAlgebraSC& a);
std::vector<Subspace> lower_central_series(const LieAlgebraSC& a);
/// Lower central series of a subalgebra s: s, [s,s], [s,[s,s]], ...
std::vector<Subspace> lower_central_series(const LieAlgebraSC& a, const Subspace& s);

bool is_solvable(const LieAlgebraSC& a);
bool is_nilpotent(const LieAlgebraSC& a);
bool is_nilpotent_subalgebra(const LieAlgebraSC& a, const Subspace& s);
bool is_subalgebra(const LieAlgebraSC& a, const Subspace& s);
bool is_ideal(const LieAlgebraSC& a, const Subspace& s);

/// a / ideal in the basis of standard vectors at the non-pivot coordinates.
LieAlgebraSC quotient(const LieAlgebraSC& a, const Subspace& ideal);

struct ClassifierResult {
  bool verdict = false;
  Subspace perfect_core;
  bool quotient_nilpotent = false;
};

/// True iff the perfect core is the whole nonzero algebra, or the quotient by
/// the perfect core is not nilpotent.
ClassifierResult theorem_A_classifier(const LieAlgebraSC& a);

struct SpliceResult {
  bool hypotheses_hold = false;
  bool conclusion_holds = false;
  bool j_ideal = false;
  bool k_ideal = false;
  bool nested = false;  // k in [j,j] in j
  bool j_nilpotent = false;
  bool k_nilpotent = false;
  bool quotient_nilpotent = false;
};

SpliceResult splice_check(const LieAlgebraSC& a, const Subspace& j, const Subspace& k);

/// Matrix Lie algebra generated by the given square matrices under commutators.
LieAlgebraSC matrix_lie_algebra(const std::vector<RationalMatrix>& generators);
/// Same algebra written in the basis f_r = sum_s p[r][s] e_s (p invertible).
LieAlgebraSC change_basis(const LieAlgebraSC& a, const RationalMatrix& p);

LieAlgebraSC algebra_from_json(const nlohmann::json& j);
nlohmann::json to_json(const LieAlgebraSC& a);
/// Accepts a list of coordinate vectors, a list of basis names, or {"basis": ...}.
Subspace subspace_from_json(const LieAlgebraSC& a, const nlohmann::json& j);
nlohmann::json to_json(const Subspace& s);

}  // namespace dlab
