#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dlab/exact/gaussian.hpp"

namespace dlab {

using LongVector = std::vector<long>;
using LongMatrix = std::vector<LongVector>;

/// Weights of the torus T = R^r / Z^r on the weight lines of V = C^m.
struct TorusWeights {
  std::size_t torus_rank = 0;
  LongMatrix weights;  // m rows of length torus_rank

  std::size_t size() const { return weights.size(); }
};

/// One coset sigma*T of K: sigma acts on T by t -> A t (cocharacter
/// coordinates) and on V by rep_matrix in the weight basis.
struct ComponentDatum {
  std::string label;
  LongMatrix torus_aut;
  GaussianMatrix rep_matrix;
};

/// K = T . F acting linearly on V; component_table[a][b] is the index of the
/// product of components a and b.
struct CompactGroupSpec {
  TorusWeights weights;
  std::vector<ComponentDatum> components;
  std::vector<std::vector<std::size_t>> component_table;

  std::size_t index_of(const std::string& label) const;  // throws UnknownComponent
  std::size_t identity_index() const;
};

struct SpecValidation {
  std::vector<std::string> warnings;
};

/// Checks every invariant of a group spec. Throws InvalidSpec or InvalidComponent
/// on the first violation; non-fatal findings come back as warnings.
SpecValidation validate(const CompactGroupSpec& spec);

/// Weight-line compatibility and conjugation law for a single component.
void validate_component(const TorusWeights& weights, const ComponentDatum& c);

/// Transpose of A applied to a weight.
LongVector transpose_apply(const LongMatrix& a, const LongVector& weight);
long integer_determinant(const LongMatrix& a);
LongMatrix multiply(const LongMatrix& a, const LongMatrix& b);
LongMatrix identity_long(std::size_t n);

/// Parses and validates.
CompactGroupSpec spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CompactGroupSpec& spec);

}  // namespace dlab
