#include "dlab/lie/subspace.hpp"

#include <algorithm>

#include "dlab/error.hpp"

namespace dlab {

std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pick = row;
    while (pick < m.size() && m[pick][col] == 0) ++pick;
    if (pick == m.size()) continue;
    std::swap(m[row], m[pick]);
    const Rational inv = 1 / m[row][col];
    for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

Subspace Subspace::span(std::size_t ambient, const RationalMatrix& vectors) {
  Subspace s;
  s.ambient_ = ambient;
  s.rows_ = vectors;
  for (const auto& v : s.rows_)
    if (v.size() != ambient) throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  s.pivots_ = rref(s.rows_, ambient);
  return s;
}

Subspace Subspace::whole(std::size_t ambient) {
  RationalMatrix id(ambient, RationalVector(ambient, Rational(0)));
  for (std::size_t k = 0; k < ambient; ++k) id[k][k] = 1;
  return span(ambient, id);
}

RationalVector Subspace::reduce(const RationalVector& v) const {
  if (v.size() != ambient_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
  RationalVector out = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = out[pivots_[r]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c) out[c] -= f * rows_[r][c];
  }
  return out;
}

bool Subspace::contains(const RationalVector& v) const {
  const auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error(ErrorKind::DimensionMismatch, "subspaces of different spaces");
  return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const RationalVector& v) { return contains(v); });
}

}  // namespace dlab
