#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "dlab/exact/algebraic.hpp"
#include "dlab/lattice/hnf.hpp"

namespace dlab {

inline constexpr unsigned kDefaultChainBound = 12;

enum class ChainVerdict { Stabilized, NotStabilizedByBound };

/// Truncations M_N = span_Z{1 - z^n : 0 < |n| <= N} of the derived module,
/// N = 1..bound, in Q(z) coordinates.
struct ChainReport {
  std::vector<LatticeForm> levels;  // levels[N-1] is M_N
  std::optional<unsigned> stabilized_at;
  ChainVerdict verdict = ChainVerdict::NotStabilizedByBound;

  std::vector<std::size_t> ranks() const;
  std::vector<Rational> covolumes() const;
};

/// Coordinates of z^n in Q(z): (re, im) for Gaussian z, power basis
/// 1, z, ..., z^(d-1) otherwise. Negative n allowed.
RationalVector field_coordinates_of_power(const AlgebraicScalar& z, long n);

/// Builds the chain up to `bound`. stabilized_at is the first N >= 2 from
/// which M_{N-1} = M_N = ... = M_bound.
/// Throws NotUnitModulus if |z| != 1 and DegenerateScalar if z == 1.
ChainReport derived_module_chain(const AlgebraicScalar& z, unsigned bound = kDefaultChainBound);

/// The derived module is finitely generated iff z is an algebraic integer.
/// Throws NotUnitModulus if |z| != 1.
bool fg_derived_criterion(const AlgebraicScalar& z);

/// g >= 0 with span_Z(gens) = gZ.
Rational subgroup_of_Q_generator(const std::vector<Rational>& gens);

nlohmann::json to_json(const LatticeForm& lattice);
nlohmann::json to_json(const ChainReport& report);

}  // namespace dlab
