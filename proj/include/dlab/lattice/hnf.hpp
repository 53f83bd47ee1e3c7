#pragma once

#include <cstddef>
#include <vector>

#include "dlab/exact/rational.hpp"

namespace dlab {

/// Finite generating set of a subgroup of Q^n.
struct GenSet {
  std::size_t ambient_dim = 0;
  RationalMatrix generators;  // each of length ambient_dim
};

/// Canonical form of a finitely generated subgroup of Q^n: the Z-span of the
/// rows of `basis` divided by `denominator`.
///
/// Rows are in Hermite normal form: pivots positive and strictly moving right,
/// entries above a pivot p reduced into the centred range [-p/2, p/2).
/// `denominator` is minimal, so equal subgroups have identical forms.
struct LatticeForm {
  std::size_t ambient_dim = 0;
  IntegerMatrix basis;
  Integer denominator{1};

  std::size_t rank() const { return basis.size(); }
  /// Product of pivots over denominator^rank; 1 for the zero subgroup.
  Rational covolume() const;
  std::vector<std::size_t> pivot_columns() const;

  friend bool operator==(const LatticeForm& a, const LatticeForm& b) {
    return a.ambient_dim == b.ambient_dim && a.denominator == b.denominator && a.basis == b.basis;
  }
  friend bool operator!=(const LatticeForm& a, const LatticeForm& b) { return !(a == b); }
};

LatticeForm hnf(const GenSet& gens);

/// Exact membership of w in the subgroup.
bool contains(const LatticeForm& lattice, const RationalVector& w);

/// Integer coordinates c with sum c_i * (row_i / d) == w, if w is a member.
bool solve_membership(const LatticeForm& lattice, const RationalVector& w, IntegerVector& coords);

/// Row-style HNF of an integer matrix (zero rows dropped), same residue
/// convention as LatticeForm.
IntegerMatrix integer_hnf(IntegerMatrix rows, std::size_t cols);

/// Diagonal of the Smith normal form (nonzero invariant factors only, each
/// dividing the next).
IntegerVector smith_invariants(IntegerMatrix m);

/// Basis of {x in Z^cols : M x = 0}, one kernel vector per entry. The basis is
/// saturated: it spans ker(M) over Q intersected with Z^cols.
IntegerMatrix integer_kernel(const IntegerMatrix& m, std::size_t cols);

}  // namespace dlab
