#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <vector>

#include "coxmorse/bigint.hpp"
#include "coxmorse/bits.hpp"
#include "coxmorse/error.hpp"
#include "coxmorse/face_poset.hpp"

namespace coxmorse {

struct Triplet {
  std::uint32_t row, col;
  std::int64_t value;
};

/// Integer matrix as a list of (row, col, value) entries; duplicates add up.
struct SparseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Triplet> entries;

  void add(std::uint32_t r, std::uint32_t c, std::int64_t v) {
    if (v) entries.push_back({r, c, v});
  }

  /// Sums duplicates and drops zeros; entries end up sorted by (col, row).
  void compress() {
    std::sort(entries.begin(), entries.end(),
              [](const Triplet& a, const Triplet& b) { return a.col != b.col ? a.col < b.col : a.row < b.row; });
    std::vector<Triplet> out;
    for (const auto& t : entries) {
      if (!out.empty() && out.back().row == t.row && out.back().col == t.col)
        out.back().value += t.value;
      else
        out.push_back(t);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Triplet& t) { return t.value == 0; }), out.end());
    entries = std::move(out);
  }

  std::vector<std::vector<BigInt>> dense() const {
    std::vector<std::vector<BigInt>> d(rows, std::vector<BigInt>(cols, 0));
    for (const auto& t : entries) d[t.row][t.col] += t.value;
    return d;
  }

  static SparseMatrix from_dense(const std::vector<std::vector<std::int64_t>>& d) {
    SparseMatrix m;
    m.rows = d.size();
    m.cols = d.empty() ? 0 : d[0].size();
    for (std::uint32_t r = 0; r < m.rows; ++r)
      for (std::uint32_t c = 0; c < m.cols; ++c) m.add(r, c, d[r][c]);
    return m;
  }
};

/// A*B is zero (both sparse; A is rows x k, B is k x cols).
inline bool product_is_zero(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw Error(Errc::DimensionMismatch, "matrix shapes do not compose");
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> a_cols(a.cols);
  for (const auto& t : a.entries) a_cols[t.col].push_back({t.row, t.value});
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> b_cols(b.cols);
  for (const auto& t : b.entries) b_cols[t.col].push_back({t.row, t.value});
  std::map<std::uint32_t, BigInt> acc;
  for (std::size_t c = 0; c < b.cols; ++c) {
    acc.clear();
    for (auto [k, v] : b_cols[c])
      for (auto [r, u] : a_cols[k]) acc[r] += BigInt(u) * v;
    for (const auto& [r, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

namespace detail {

/// Smith form of a dense matrix: nonzero invariant factors in divisibility order.
inline std::vector<BigInt> dense_snf(std::vector<std::vector<BigInt>> a) {
  const std::size_t R = a.size(), C = R ? a[0].size() : 0;
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    while (true) {
      // smallest nonzero entry of the remaining block becomes the pivot
      std::size_t pr = R, pc = C;
      for (std::size_t r = t; r < R; ++r)
        for (std::size_t c = t; c < C; ++c)
          if (a[r][c] != 0 && (pr == R || abs(a[r][c]) < abs(a[pr][pc]))) pr = r, pc = c;
      if (pr == R) goto done;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      bool clean = true;
      for (std::size_t r = t + 1; r < R; ++r) {
        if (a[r][t] == 0) continue;
        const BigInt q = a[r][t] / a[t][t];
        for (std::size_t c = t; c < C; ++c) a[r][c] -= q * a[t][c];
        if (a[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < C; ++c) {
        if (a[t][c] == 0) continue;
        const BigInt q = a[t][c] / a[t][t];
        for (std::size_t r = t; r < R; ++r) a[r][c] -= q * a[r][t];
        if (a[t][c] != 0) clean = false;
      }
      if (!clean) continue;
      // pivot must divide the rest; otherwise fold an offending row in
      bool divides = true;
      for (std::size_t r = t + 1; r < R && divides; ++r)
        for (std::size_t c = t + 1; c < C; ++c)
          if (a[r][c] % a[t][t] != 0) {
            for (std::size_t cc = t; cc < C; ++cc) a[t][cc] += a[r][cc];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(a[t][t]));
  }
done:
  // gcd/lcm pass so that d_1 | d_2 | ...
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const BigInt g = gcd(diag[i], diag[j]);
      const BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

}  // namespace detail

/// Nonzero invariant factors d_1 | d_2 | ... of an integer matrix. Unit
/// pivots are eliminated sparsely first; the remainder is reduced densely.
inline std::vector<BigInt> smith_normal_form(const SparseMatrix& m) {
  std::vector<std::map<std::uint32_t, BigInt>> rows(m.rows);
  for (const auto& t : m.entries) {
    auto& e = rows[t.row][t.col];
    e += t.value;
  }
  std::vector<std::set<std::uint32_t>> col_rows(m.cols);
  for (std::uint32_t r = 0; r < m.rows; ++r)
    for (auto it = rows[r].begin(); it != rows[r].end();) {
      if (it->second == 0) {
        it = rows[r].erase(it);
      } else {
        col_rows[it->first].insert(r);
        ++it;
      }
    }
  std::vector<char> row_alive(m.rows, 1), col_alive(m.cols, 1);
  std::size_t units = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    std::vector<std::uint32_t> order(m.cols);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](auto a, auto b) { return col_rows[a].size() < col_rows[b].size(); });
    for (std::uint32_t c : order) {
      if (!col_alive[c] || col_rows[c].empty()) continue;
      std::int64_t best = -1;
      for (std::uint32_t r : col_rows[c]) {
        const auto& v = rows[r].at(c);
        if ((v == 1 || v == -1) && (best < 0 || rows[r].size() < rows[best].size())) best = r;
      }
      if (best < 0) continue;
      const std::uint32_t pr = static_cast<std::uint32_t>(best);
      const BigInt pv = rows[pr].at(c);
      const std::vector<std::uint32_t> others(col_rows[c].begin(), col_rows[c].end());
      for (std::uint32_t r : others) {
        if (r == pr) continue;
        const BigInt f = rows[r].at(c) * pv;  // pv = +-1, so this is a / pv
        for (const auto& [cc, v] : rows[pr]) {
          auto& e = rows[r][cc];
          e -= f * v;
          if (e == 0) {
            rows[r].erase(cc);
            col_rows[cc].erase(r);
          } else {
            col_rows[cc].insert(r);
          }
        }
      }
      for (const auto& [cc, v] : rows[pr]) col_rows[cc].erase(pr);
      rows[pr].clear();
      row_alive[pr] = 0;
      col_alive[c] = 0;
      ++units;
      progress = true;
    }
  }
  std::vector<std::uint32_t> live_rows, live_cols;
  for (std::uint32_t r = 0; r < m.rows; ++r)
    if (row_alive[r] && !rows[r].empty()) live_rows.push_back(r);
  for (std::uint32_t c = 0; c < m.cols; ++c)
    if (col_alive[c] && !col_rows[c].empty()) live_cols.push_back(c);
  std::vector<BigInt> diag(units, 1);
  if (!live_rows.empty()) {
    std::map<std::uint32_t, std::size_t> cpos;
    for (std::size_t i = 0; i < live_cols.size(); ++i) cpos[live_cols[i]] = i;
    std::vector<std::vector<BigInt>> d(live_rows.size(), std::vector<BigInt>(live_cols.size(), 0));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : rows[live_rows[i]]) d[i][cpos.at(c)] = v;
    for (auto& x : detail::dense_snf(std::move(d))) diag.push_back(x);
  }
  // units come first; the dense part is already a divisibility chain
  return diag;
}

inline std::vector<BigInt> smith_normal_form(const std::vector<std::vector<std::int64_t>>& d) {
  return smith_normal_form(SparseMatrix::from_dense(d));
}

/// Cells per dimension and boundary maps d_q : C_q -> C_{q-1} (q >= 1),
/// stored so that boundary[q] has cells[q-1] rows and cells[q] columns.
/// `reduced` adds the augmentation C_0 -> Z.
struct ChainComplex {
  std::vector<std::size_t> cells;
  std::vector<SparseMatrix> boundary;  // boundary[0] unused
  bool reduced = false;

  int top_dim() const { return static_cast<int>(cells.size()) - 1; }

  SparseMatrix augmentation() const {
    SparseMatrix a;
    a.rows = 1;
    a.cols = cells.empty() ? 0 : cells[0];
    for (std::uint32_t c = 0; c < a.cols; ++c) a.add(0, c, 1);
    return a;
  }
};

struct HomologyResult {
  std::vector<std::int64_t> betti;
  std::vector<std::vector<BigInt>> torsion;
  bool reduced = false;

  bool torsion_free() const {
    return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
  }
  /// Dimensions with nonzero rank.
  std::map<int, std::int64_t> nonzero() const {
    std::map<int, std::int64_t> out;
    for (std::size_t i = 0; i < betti.size(); ++i)
      if (betti[i]) out[static_cast<int>(i)] = betti[i];
    return out;
  }
  std::int64_t euler() const {
    std::int64_t e = 0;
    for (std::size_t i = 0; i < betti.size(); ++i) e += (i % 2 ? -betti[i] : betti[i]);
    return e;
  }
};

inline void check_boundaries(const ChainComplex& c) {
  for (int q = 1; q <= c.top_dim(); ++q) {
    const auto& b = c.boundary[q];
    if (b.rows != c.cells[q - 1] || b.cols != c.cells[q])
      throw Error(Errc::DimensionMismatch, "boundary matrix of wrong shape in dimension " + std::to_string(q));
  }
  for (int q = 2; q <= c.top_dim(); ++q)
    if (!product_is_zero(c.boundary[q - 1], c.boundary[q]))
      throw Error(Errc::BoundaryConditionViolated, "boundary squared is nonzero in dimension " + std::to_string(q));
  if (c.reduced && c.top_dim() >= 1 && !product_is_zero(c.augmentation(), c.boundary[1]))
    throw Error(Errc::BoundaryConditionViolated, "augmentation does not vanish on boundaries");
}

inline HomologyResult integral_homology(const ChainComplex& c) {
  check_boundaries(c);
  const int D = c.top_dim();
  HomologyResult h;
  h.reduced = c.reduced;
  if (D < 0) return h;
  std::vector<std::vector<BigInt>> snf(D + 2);
  for (int q = 1; q <= D; ++q) snf[q] = smith_normal_form(c.boundary[q]);
  if (c.reduced && c.cells[0] > 0) snf[0] = {1};
  h.betti.assign(D + 1, 0);
  h.torsion.assign(D + 1, {});
  for (int q = 0; q <= D; ++q) {
    const auto rank_out = static_cast<std::int64_t>(snf[q].size());
    const auto rank_in = static_cast<std::int64_t>(snf[q + 1].size());
    h.betti[q] = static_cast<std::int64_t>(c.cells[q]) - rank_out - rank_in;
    for (const auto& d : snf[q + 1])
      if (d > 1) h.torsion[q].push_back(d);
  }
  return h;
}

/// Simplicial chain complex of a list of nonempty simplices (vertex sets).
/// Faces of listed simplices must be listed too.
inline ChainComplex simplicial_chain_complex(const std::vector<GenSet>& simplices, bool reduced) {
  ChainComplex c;
  c.reduced = reduced;
  int D = -1;
  for (GenSet s : simplices) D = std::max(D, popcount(s) - 1);
  std::vector<std::map<GenSet, std::uint32_t>> index(D + 1);
  c.cells.assign(D + 1, 0);
  std::vector<GenSet> sorted = simplices;
  std::sort(sorted.begin(), sorted.end());
  for (GenSet s : sorted) {
    if (!s) continue;
    const int d = popcount(s) - 1;
    index[d].emplace(s, static_cast<std::uint32_t>(c.cells[d]++));
  }
  c.boundary.assign(D + 1, {});
  for (int d = 1; d <= D; ++d) {
    auto& b = c.boundary[d];
    b.rows = c.cells[d - 1];
    b.cols = c.cells[d];
    for (const auto& [s, col] : index[d]) {
      int pos = 0;
      for_each_bit(s, [&](int v) {
        auto it = index[d - 1].find(s & ~bit(v));
        if (it == index[d - 1].end()) throw Error(Errc::InvalidInput, "simplex list is not closed under faces");
        b.add(it->second, col, pos % 2 ? -1 : 1);
        ++pos;
      });
    }
  }
  return c;
}

/// Chain complex of the order complex (barycentric subdivision) of a face
/// poset: simplices are chains c_0 < c_1 < ... ordered by dimension.
inline ChainComplex order_complex(const FacePoset& p, bool reduced) {
  const std::size_t n = p.size();
  // strict down-sets via the cover relations, processed by dimension
  std::vector<std::uint32_t> by_dim(n);
  std::iota(by_dim.begin(), by_dim.end(), 0);
  std::stable_sort(by_dim.begin(), by_dim.end(), [&](auto a, auto b) { return p.dim[a] < p.dim[b]; });
  std::vector<std::vector<std::uint32_t>> below(n);
  for (std::uint32_t x : by_dim) {
    std::set<std::uint32_t> s;
    for (std::uint32_t f : p.facets[x]) {
      s.insert(f);
      s.insert(below[f].begin(), below[f].end());
    }
    below[x].assign(s.begin(), s.end());
  }
  // chains ending at x, grouped by length
  std::vector<std::map<std::vector<std::uint32_t>, std::uint32_t>> index;
  std::vector<std::vector<std::vector<std::uint32_t>>> chains_at(n);
  for (std::uint32_t x : by_dim) {
    auto& mine = chains_at[x];
    mine.push_back({x});
    for (std::uint32_t y : below[x])
      for (const auto& ch : chains_at[y]) {
        auto ext = ch;
        ext.push_back(x);
        mine.push_back(std::move(ext));
      }
  }
  for (std::uint32_t x = 0; x < n; ++x)
    for (auto& ch : chains_at[x]) {
      const std::size_t d = ch.size() - 1;
      if (index.size() <= d) index.resize(d + 1);
      index[d].emplace(std::move(ch), 0);
    }
  ChainComplex c;
  c.reduced = reduced;
  c.cells.assign(index.size(), 0);
  for (std::size_t d = 0; d < index.size(); ++d)
    for (auto& [ch, id] : index[d]) id = static_cast<std::uint32_t>(c.cells[d]++);
  c.boundary.assign(index.size(), {});
  for (std::size_t d = 1; d < index.size(); ++d) {
    auto& b = c.boundary[d];
    b.rows = c.cells[d - 1];
    b.cols = c.cells[d];
    std::vector<std::uint32_t> face;
    for (const auto& [ch, col] : index[d])
      for (std::size_t i = 0; i < ch.size(); ++i) {
        face = ch;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        b.add(index[d - 1].at(face), col, i % 2 ? -1 : 1);
      }
  }
  return c;
}

/// Writes each boundary matrix in Matrix Market coordinate format.
inline void write_matrix_market(std::ostream& os, const SparseMatrix& m) {
  SparseMatrix c = m;
  c.compress();
  os << "%%MatrixMarket matrix coordinate integer general\n";
  os << c.rows << ' ' << c.cols << ' ' << c.entries.size() << '\n';
  for (const auto& t : c.entries) os << t.row + 1 << ' ' << t.col + 1 << ' ' << t.value << '\n';
}

}  // namespace coxmorse
