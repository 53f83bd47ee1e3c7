#pragma once

#include <cstddef>

#include "dlab/exact/rational.hpp"

namespace dlab {

/// Subspace of Q^n kept in reduced row echelon form, so equal subspaces have
/// identical rows.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(std::size_t ambient, const RationalMatrix& vectors);
  static Subspace zero(std::size_t ambient) { return span(ambient, {}); }
  static Subspace whole(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  const RationalMatrix& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its component along the pivot coordinates; zero iff v is in the span.
  RationalVector reduce(const RationalVector& v) const;
  bool contains(const RationalVector& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_ = 0;
  RationalMatrix rows_;
  std::vector<std::size_t> pivots_;
};

/// Reduced row echelon form over Q; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols);

}  // namespace dlab
