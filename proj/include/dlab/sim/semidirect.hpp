#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "dlab/action/spec.hpp"

namespace dlab {

using ComplexVector = std::vector<std::complex<double>>;

/// (v, t sigma) in V x| K: v in C^m (2m real coordinates), t = exp(2 pi i angles).
struct SemidirectElement {
  ComplexVector v;
  std::string component;
  std::vector<double> angles;  // turns, reduced into [0, 1)
};

struct SimConfig {
  double tolerance = 1e-9;        // rank cut-off for singular values
  double delta = 0.1;             // perturbation radius in turns, sup norm
  double report_threshold = 1e-3;  // distance above which a sample is a witness
  std::size_t samples = 400;
  std::uint64_t seed = 1;
};

/// Validates config invariants (positive values, tolerance < delta).
void check_config(const SimConfig& config);

/// Group law on V x| K for a spec whose representatives multiply exactly
/// (rho(a) rho(b) = rho(ab)); other specs raise SpecMismatch.
class SemidirectGroup {
 public:
  explicit SemidirectGroup(CompactGroupSpec spec);

  const CompactGroupSpec& spec() const { return spec_; }
  std::size_t vector_dim() const { return spec_.weights.size(); }

  SemidirectElement identity() const;
  SemidirectElement element(ComplexVector v, const std::string& component, std::vector<double> angles) const;
  SemidirectElement multiply(const SemidirectElement& g, const SemidirectElement& h) const;
  SemidirectElement invert(const SemidirectElement& g) const;
  SemidirectElement commutator(const SemidirectElement& g, const SemidirectElement& h) const;

  /// rho(t sigma) = D(t) rho(sigma) as a dense row-major m x m matrix.
  std::vector<ComplexVector> rep(const std::string& component, const std::vector<double>& angles) const;
  /// Euclidean distance between elements: |v - w| plus circular angle distance; inf for different components.
  double distance(const SemidirectElement& g, const SemidirectElement& h) const;

 private:
  void check(const SemidirectElement& g) const;
  CompactGroupSpec spec_;
  std::vector<std::vector<ComplexVector>> rho_;  // numeric rep matrices per component
};

/// Min over |phi|_inf <= delta of the distance from v to im(1 - rho(exp(2 pi i phi) k)).
double elliptic_distance(const SemidirectGroup& group, const SemidirectElement& g, double delta,
                         double tolerance = 1e-9);

struct EllipticityReport {
  bool verdict = false;
  std::optional<SemidirectElement> witness;
  double witness_distance = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> max_distance_by_component;
};

/// Samples |v| <= 1, uniform angles (exact zeros rejected), components in
/// rotation. Sample i is drawn from its own stream seeded by (seed, i).
EllipticityReport empirical_ellipticity(const CompactGroupSpec& spec, const SimConfig& config);

/// Largest circular gap between the points n theta mod 1, 1 <= n <= count.
double orbit_gap(double theta, std::size_t count);
Rational orbit_gap(const Rational& theta, std::size_t count);

struct FgWitness {
  long q_rank_estimate = 0;
  bool discrete = false;
  bool invariant_line = false;
  std::vector<std::vector<long>> relations;  // integer relations found among the generators
  bool exact = false;
};

/// Rank of the Z-span of {v - z^n v : n in exponents} in R^2, by integer
/// relation search (LLL, tolerance 1e-9, coefficients up to 1e6).
FgWitness fg_dense_witness(std::complex<double> z, std::complex<double> v, const std::vector<long>& exponents);
/// Exact version for z in Q(i), through the lattice engine.
FgWitness fg_dense_witness(const GaussianRational& z, const GaussianRational& v, const std::vector<long>& exponents);

nlohmann::json to_json(const SemidirectElement& g);
nlohmann::json to_json(const EllipticityReport& r);
nlohmann::json to_json(const FgWitness& w);

}  // namespace dlab
