#include "dlab/lattice/hnf.hpp"

#include <algorithm>
#include <utility>

#include "dlab/error.hpp"

namespace dlab {

namespace {

// Extended gcd: g = s*a + t*b with g >= 0.
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// Unimodular row operation on rows p and r so that afterwards rows[r][col] == 0
// and rows[p][col] == gcd of the previous two entries.
void combine_rows(IntegerMatrix& rows, std::size_t p, std::size_t r, std::size_t col) {
  const Integer a = rows[p][col];
  const Integer b = rows[r][col];
  if (b == 0) return;
  Integer g, s, t;
  extended_gcd(a, b, g, s, t);
  const Integer a_g = a / g;
  const Integer b_g = b / g;
  for (std::size_t c = 0; c < rows[p].size(); ++c) {
    Integer top = s * rows[p][c] + t * rows[r][c];
    Integer bottom = a_g * rows[r][c] - b_g * rows[p][c];
    rows[p][c] = std::move(top);
    rows[r][c] = std::move(bottom);
  }
}

// Echelonizes the first `cols` columns with unimodular row operations,
// returning the pivot count. Rows beyond the pivots are zero in those columns.
std::size_t echelonize(IntegerMatrix& rows, std::size_t cols) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t first = pivot_row;
    while (first < rows.size() && rows[first][col] == 0) ++first;
    if (first == rows.size()) continue;
    std::swap(rows[pivot_row], rows[first]);
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) combine_rows(rows, pivot_row, r, col);
    if (rows[pivot_row][col] < 0)
      for (auto& x : rows[pivot_row]) x = -x;
    ++pivot_row;
  }
  return pivot_row;
}

// x - q*p lands in [-p/2, p/2) for q = floor((2x + p) / 2p).
Integer centred_quotient(const Integer& x, const Integer& p) { return floor_div(Integer(2 * x + p), Integer(2 * p)); }

}  // namespace

IntegerMatrix integer_hnf(IntegerMatrix rows, std::size_t cols) {
  for (const auto& r : rows)
    if (r.size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");
  const std::size_t rank = echelonize(rows, cols);
  rows.resize(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t col = 0;
    while (rows[i][col] == 0) ++col;
    const Integer pivot = rows[i][col];
    for (std::size_t above = 0; above < i; ++above) {
      Integer q = centred_quotient(rows[above][col], pivot);
      if (q == 0) continue;
      for (std::size_t c = col; c < cols; ++c) rows[above][c] -= q * rows[i][c];
    }
  }
  return rows;
}

Rational LatticeForm::covolume() const {
  Integer product = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& row = basis[i];
    auto it = std::find_if(row.begin(), row.end(), [](const Integer& x) { return x != 0; });
    product *= *it;
  }
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), denominator.get_mpz_t(), basis.size());
  Rational c(product, scale);
  c.canonicalize();
  return c;
}

std::vector<std::size_t> LatticeForm::pivot_columns() const {
  std::vector<std::size_t> out;
  for (const auto& row : basis) {
    std::size_t col = 0;
    while (row[col] == 0) ++col;
    out.push_back(col);
  }
  return out;
}

LatticeForm hnf(const GenSet& gens) {
  Integer common = 1;
  for (const auto& g : gens.generators) {
    if (g.size() != gens.ambient_dim)
      throw Error(ErrorKind::DimensionMismatch, "generator length differs from ambient dimension");
    for (const auto& x : g) common = lcm(common, x.get_den());
  }
  IntegerMatrix rows;
  rows.reserve(gens.generators.size());
  for (const auto& g : gens.generators) {
    IntegerVector row;
    row.reserve(g.size());
    for (const auto& x : g) row.push_back(Integer(x.get_num() * (common / x.get_den())));
    rows.push_back(std::move(row));
  }
  LatticeForm out;
  out.ambient_dim = gens.ambient_dim;
  out.basis = integer_hnf(std::move(rows), gens.ambient_dim);

  Integer content = common;
  for (const auto& row : out.basis)
    for (const auto& x : row) content = gcd(content, x);
  if (content != 1) {
    for (auto& row : out.basis)
      for (auto& x : row) x /= content;
  }
  out.denominator = common / content;
  if (out.basis.empty()) out.denominator = 1;
  return out;
}

bool solve_membership(const LatticeForm& lattice, const RationalVector& w, IntegerVector& coords) {
  if (w.size() != lattice.ambient_dim) throw Error(ErrorKind::DimensionMismatch, "vector length mismatch");
  IntegerVector rest;
  rest.reserve(w.size());
  for (const auto& x : w) {
    Rational scaled = x * lattice.denominator;
    if (scaled.get_den() != 1) return false;
    rest.push_back(scaled.get_num());
  }
  coords.assign(lattice.rank(), Integer(0));
  const auto pivots = lattice.pivot_columns();
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    const Integer& p = lattice.basis[i][pivots[i]];
    for (std::size_t c = 0; c < pivots[i]; ++c)
      if (rest[c] != 0) return false;
    if (!mpz_divisible_p(rest[pivots[i]].get_mpz_t(), p.get_mpz_t())) return false;
    coords[i] = rest[pivots[i]] / p;
    for (std::size_t c = pivots[i]; c < rest.size(); ++c) rest[c] -= coords[i] * lattice.basis[i][c];
  }
  return std::all_of(rest.begin(), rest.end(), [](const Integer& x) { return x == 0; });
}

bool contains(const LatticeForm& lattice, const RationalVector& w) {
  IntegerVector coords;
  return solve_membership(lattice, w, coords);
}

IntegerVector smith_invariants(IntegerMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t t = 0;
  for (; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the remaining block becomes the pivot.
    bool found = false;
    std::size_t pr = t, pc = t;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c)
        if (m[r][c] != 0 && (!found || abs(m[r][c]) < abs(m[pr][pc]))) {
          found = true;
          pr = r;
          pc = c;
        }
    if (!found) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (m[r][t] == 0) continue;
        Integer q = floor_div(m[r][t], m[t][t]);
        for (std::size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
        if (m[r][t] != 0) {
          std::swap(m[t], m[r]);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (m[t][c] == 0) continue;
        Integer q = floor_div(m[t][c], m[t][t]);
        for (std::size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
        if (m[t][c] != 0) {
          for (auto& row : m) std::swap(row[t], row[c]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: fold any entry not divisible by the pivot into row t.
      for (std::size_t r = t + 1; r < rows && clean; ++r)
        for (std::size_t c = t + 1; c < cols && clean; ++c)
          if (!mpz_divisible_p(m[r][c].get_mpz_t(), m[t][t].get_mpz_t())) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[r][k];
            clean = false;
          }
    }
  }
  IntegerVector out;
  for (std::size_t k = 0; k < t; ++k) out.push_back(abs(m[k][k]));
  return out;
}

IntegerMatrix integer_kernel(const IntegerMatrix& m, std::size_t cols) {
  // Rows of [M^T | I]; after echelonizing the M^T part, rows whose left block
  // vanished carry kernel vectors in their right block.
  const std::size_t k = m.size();
  IntegerMatrix aug(cols, IntegerVector(k + cols, Integer(0)));
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < k; ++r) {
      if (m[r].size() != cols) throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");
      aug[c][r] = m[r][c];
    }
    aug[c][k + c] = 1;
  }
  const std::size_t rank = echelonize(aug, k);
  IntegerMatrix kernel;
  for (std::size_t r = rank; r < cols; ++r) kernel.emplace_back(aug[r].begin() + static_cast<long>(k), aug[r].end());
  return integer_hnf(std::move(kernel), cols);
}

}  // namespace dlab
