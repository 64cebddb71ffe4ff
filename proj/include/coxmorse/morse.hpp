#pragma once

#include <climits>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "coxmorse/homology.hpp"
#include "coxmorse/ind_complex.hpp"
#include "coxmorse/perm_complex.hpp"

namespace coxmorse {

/// Lexicographically least J inside I with |J| = k-2 and J + s connected
/// of size k-1 (so W_{J+s} is standard k-parabolic).
inline std::optional<GenSet> min_parabolic_completion(GenSet I, int s, int k, const CoxeterDiagram& d) {
  const GenSet pool = component_of(d.adjacency(), I | bit(s), s) & ~bit(s);
  std::optional<GenSet> best;
  const int need = k - 2;
  if (need < 0 || popcount(pool) < need) return std::nullopt;
  // subsets of the pool in increasing lexicographic order: try smallest elements first
  const std::vector<int> v = elements(pool);
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (static_cast<int>(pick.size()) == need) {
      GenSet J = 0;
      for (int x : pick) J |= bit(x);
      if (is_connected(d.adjacency(), J | bit(s))) {
        best = J;
        return true;
      }
      return false;
    }
    for (std::size_t i = from; i < v.size(); ++i) {
      pick.push_back(v[i]);
      if (self(self, i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  rec(rec, 0);
  return best;
}

/// Outcome for one coset: the partner's generator set and the generator
/// that was added or removed (moved < 0 when the coset is critical).
struct CosetMatch {
  GenSet gens;
  int moved = -1;

  bool critical() const { return moved < 0; }
  /// m(wW_I), with "infinity" as INT_MAX.
  int threshold() const { return moved < 0 ? INT_MAX : moved; }
};

/// The matching algorithm on a coset wW_I with Des(w) = des.
inline CosetMatch match_coset(GenSet des, GenSet I, int k, const CoxeterDiagram& d) {
  GenSet L = d.all();
  while (L) {
    const int s = lowest(L);
    if (!contains(des, s)) {
      L &= ~bit(s);
    } else if (contains(I, s)) {
      return {I & ~bit(s), s};
    } else if (!admissible(I | bit(s), k, d)) {
      const auto J = min_parabolic_completion(I, s, k, d);
      if (!J) throw Error(Errc::InvalidInput, "no parabolic completion for a blocked generator");
      L &= ~(*J | bit(s));
    } else {
      return {I | bit(s), s};
    }
  }
  return {I, -1};
}

/// Critical cells (w, T) by their combinatorial description.
inline bool critical_predicate(GenSet des, GenSet T, int k, const CoxeterDiagram& d) {
  if (!is_subset(T, des)) return false;
  const auto g = OrderedGraph::induced(d.adjacency(), des);
  return is_spanning_by_predicate(g, T, k - 2);
}

inline Matching morse_matching(const PermComplex& P) {
  Matching m = Matching::empty(P.size());
  const auto& T = P.table();
  parallel_for(P.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t c = b; c < e; ++c) {
      const Cell& cell = P.cell(static_cast<std::uint32_t>(c));
      const auto r = match_coset(T.descents(cell.rep), cell.gens, P.k(), P.diagram());
      if (r.critical()) continue;
      const auto idx = P.index_of(cell.rep, r.gens);
      if (idx < 0) throw Error(Errc::InvalidInput, "matched coset outside the complex");
      m.partner[c] = idx;
    }
  });
  return m;
}

/// Lexicographic shellings of Ind_{k-2}(D[Des(w)]), one per descent set.
class FiberShellings {
 public:
  FiberShellings(const CoxeterDiagram& d, int k) : d_(d), k_(k) {}

  const ShellingOrder& get(GenSet des) const {
    std::lock_guard lock(mu_);
    auto it = cache_.find(des);
    if (it == cache_.end())
      it = cache_.emplace(des, lex_shelling(OrderedGraph::induced(d_.adjacency(), des), k_ - 2)).first;
    return it->second;
  }

 private:
  const CoxeterDiagram& d_;
  int k_;
  mutable std::mutex mu_;
  mutable std::unordered_map<GenSet, ShellingOrder> cache_;
};

/// M': the union of the shelling matchings on the fibers over each w.
inline Matching fiber_matching(const PermComplex& P) {
  Matching m = Matching::empty(P.size());
  FiberShellings shellings(P.diagram(), P.k());
  const auto& T = P.table();
  parallel_for(P.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t c = b; c < e; ++c) {
      const Cell& cell = P.cell(static_cast<std::uint32_t>(c));
      const auto partner = shelling_partner(shellings.get(T.descents(cell.rep)), cell.gens, true);
      if (!partner) continue;
      const auto idx = P.index_of(cell.rep, *partner);
      if (idx < 0) throw Error(Errc::InvalidInput, "fiber partner outside the complex");
      m.partner[c] = idx;
    }
  });
  return m;
}

/// Cells satisfying critical_predicate.
inline std::vector<std::uint32_t> predicted_critical_cells(const PermComplex& P) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < P.size(); ++c)
    if (critical_predicate(P.table().descents(P.cell(c).rep), P.cell(c).gens, P.k(), P.diagram())) out.push_back(c);
  return out;
}

/// Critical counts by dimension without building cover relations.
inline std::vector<std::uint64_t> critical_counts(const PermComplex& P) {
  std::vector<std::uint64_t> c;
  for (const Cell& cell : P.cells())
    if (match_coset(P.table().descents(cell.rep), cell.gens, P.k(), P.diagram()).critical()) {
      if (c.size() <= std::size_t(cell.dim())) c.resize(cell.dim() + 1, 0);
      ++c[cell.dim()];
    }
  return c;
}

/// Critical counts by dimension straight from the element table, without
/// materialising the cells of Perm_k(W).
inline std::vector<std::uint64_t> critical_counts(const ElementTable& T, int k) {
  const auto& d = T.system().diagram();
  detail::check_k(d, k);
  std::vector<GenSet> adm;
  for (GenSet I = 0; I <= d.all(); ++I) {
    if (admissible(I, k, d)) adm.push_back(I);
    if (I == d.all()) break;
  }
  const int workers = std::max(1, thread_count());
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(d.rank() + 1, 0));
  const std::size_t chunk = (T.size() + workers - 1) / workers;
  parallel_for(static_cast<std::size_t>(workers), [&](std::size_t b, std::size_t e) {
    for (std::size_t part = b; part < e; ++part) {
      const std::size_t lo = part * chunk, hi = std::min(T.size(), lo + chunk);
      for (std::size_t w = lo; w < hi; ++w) {
        const GenSet des = T.descents(static_cast<ElementTable::Id>(w));
        for (GenSet I : adm)
          if (is_subset(I, des) && match_coset(des, I, k, d).critical()) ++partial[part][popcount(I)];
      }
    }
  }, workers);
  std::vector<std::uint64_t> total(d.rank() + 1, 0);
  for (const auto& p : partial)
    for (std::size_t i = 0; i < p.size(); ++i) total[i] += p[i];
  while (total.size() > 1 && total.back() == 0) total.pop_back();
  return total;
}

// ---------------------------------------------------------------------------
// Morse boundary

using Incidence = std::function<int(std::uint32_t upper, std::uint32_t lower)>;

/// Calls visit(path, weight) for every alternating path from sigma down to
/// the critical cell tau. A path lists sigma, a_1, u(a_1), ..., a_t, u(a_t), tau.
inline void enumerate_alternating_paths(const FacePoset& p, const Matching& m, const Incidence& inc,
                                        std::uint32_t sigma, std::uint32_t tau,
                                        const std::function<void(const std::vector<std::uint32_t>&, int)>& visit) {
  if (p.dim[sigma] != p.dim[tau] + 1) throw Error(Errc::DimensionMismatch, "cells must be in adjacent dimensions");
  std::vector<std::uint32_t> path{sigma};
  // weight so far excludes the final incidence; sign tracks (-1)^t
  auto rec = [&](auto&& self, std::uint32_t upper, int weight) -> void {
    for (std::uint32_t a : p.facets[upper]) {
      if (path.size() >= 2 && a == path[path.size() - 2]) continue;
      const int w = weight * inc(upper, a);
      if (a == tau) {
        path.push_back(a);
        visit(path, w);
        path.pop_back();
      }
      const auto b = m.partner[a];
      if (b < 0 || p.dim[b] <= p.dim[a]) continue;
      const auto ub = static_cast<std::uint32_t>(b);
      path.push_back(a);
      path.push_back(ub);
      self(self, ub, -w * inc(ub, a));
      path.pop_back();
      path.pop_back();
    }
  };
  rec(rec, sigma, 1);
}

/// [tau : sigma] in the Morse complex, summed over explicit paths.
inline std::int64_t morse_boundary_by_paths(const FacePoset& p, const Matching& m, const Incidence& inc,
                                            std::uint32_t sigma, std::uint32_t tau) {
  if (m.matched(sigma) || m.matched(tau)) throw Error(Errc::InvalidInput, "both cells must be critical");
  std::int64_t total = 0;
  enumerate_alternating_paths(p, m, inc, sigma, tau, [&](const auto&, int w) { total += w; });
  return total;
}

/// Morse boundary matrices for all dimensions, by memoised flow from each
/// cell down to critical cells one dimension lower.
inline ChainComplex morse_chain_complex(const FacePoset& p, const Matching& m, const Incidence& inc, bool reduced) {
  const int D = p.max_dim();
  ChainComplex c;
  c.reduced = reduced;
  c.cells.assign(std::max(0, D + 1), 0);
  std::vector<std::int64_t> crit_index(p.size(), -1);
  for (std::uint32_t x = 0; x < p.size(); ++x)
    if (!m.matched(x)) crit_index[x] = static_cast<std::int64_t>(c.cells[p.dim[x]]++);
  c.boundary.assign(std::max(0, D + 1), {});
  std::unordered_map<std::uint32_t, std::map<std::uint32_t, std::int64_t>> memo;
  std::function<const std::map<std::uint32_t, std::int64_t>&(std::uint32_t)> flow =
      [&](std::uint32_t a) -> const std::map<std::uint32_t, std::int64_t>& {
    if (auto it = memo.find(a); it != memo.end()) return it->second;
    std::map<std::uint32_t, std::int64_t> out;
    if (!m.matched(a)) {
      out[a] = 1;
    } else if (p.dim[m.partner[a]] > p.dim[a]) {
      const auto b = static_cast<std::uint32_t>(m.partner[a]);
      const int ab = inc(b, a);
      for (std::uint32_t a2 : p.facets[b]) {
        if (a2 == a) continue;
        const std::int64_t f = -static_cast<std::int64_t>(ab) * inc(b, a2);
        for (const auto& [t, v] : flow(a2)) out[t] += f * v;
      }
    }
    return memo.emplace(a, std::move(out)).first->second;
  };
  for (int d = 1; d <= D; ++d) {
    auto& b = c.boundary[d];
    b.rows = c.cells[d - 1];
    b.cols = c.cells[d];
  }
  for (std::uint32_t s = 0; s < p.size(); ++s) {
    if (m.matched(s) || p.dim[s] == 0) continue;
    std::map<std::uint32_t, std::int64_t> total;
    for (std::uint32_t a : p.facets[s])
      for (const auto& [t, v] : flow(a)) total[t] += inc(s, a) * v;
    for (const auto& [t, v] : total)
      c.boundary[p.dim[s]].add(static_cast<std::uint32_t>(crit_index[t]), static_cast<std::uint32_t>(crit_index[s]), v);
  }
  for (auto& b : c.boundary) b.compress();
  return c;
}

inline Incidence cubical_incidence_of(const PermComplex& P) {
  return [&P](std::uint32_t upper, std::uint32_t lower) { return P.cubical_incidence(upper, lower); };
}

// ---------------------------------------------------------------------------
// Ascending blocks and the paths p, p-hat (k = 3)

/// Blocks A_0..A_m as position intervals [first, last]; the last block
/// ends at m(wW_I) (or the final generator when the coset is critical).
inline std::vector<std::pair<int, int>> ascending_blocks(GenSet I, int threshold, int rank) {
  const int top = threshold == INT_MAX ? rank - 1 : threshold;
  std::vector<int> below;
  for_each_bit(I, [&](int s) {
    if (s < threshold) below.push_back(s);
  });
  std::vector<std::pair<int, int>> blocks;
  int start = 0;
  for (int s : below) {
    blocks.push_back({std::min(start, s), s});
    start = s + 2;
  }
  if (start <= top) blocks.push_back({start, top});
  return blocks;
}

struct AlternatingPath {
  std::vector<std::uint32_t> cells;
  int weight = 0;
};

/// p(wW_I, s) (hat = false) or p-hat(wW_I, s) (hat = true) in Perm_3(W).
inline AlternatingPath block_path(const PermComplex& P, const Matching& m, std::uint32_t sigma, int s, bool hat) {
  if (P.k() != 3) throw Error(Errc::NotCubical, "paths are defined for k = 3");
  const auto& T = P.table();
  const Cell& c = P.cell(sigma);
  const auto here = match_coset(T.descents(c.rep), c.gens, 3, P.diagram());
  if (!contains(c.gens, s) || s > here.threshold())
    throw Error(Errc::InvalidGenerator, "generator must lie in I and not exceed m(wW_I)");
  const auto blocks = ascending_blocks(c.gens, here.threshold(), P.system().rank());
  std::pair<int, int> A{-1, -1};
  for (auto b : blocks)
    if (b.first <= s && s <= b.second) {
      A = b;
      break;
    }
  if (A.first < 0) throw Error(Errc::InvalidGenerator, "generator lies in no ascending block");
  const GenSet J = c.gens & ~bit(s);
  ElementTable::Id u = hat ? T.max_rep(T.right(c.rep, s), J) : c.rep;
  AlternatingPath path;
  path.cells = {sigma};
  auto cell_of = [&](ElementTable::Id w, GenSet g) {
    const auto idx = P.coset_index(w, g);
    if (idx < 0) throw Error(Errc::InvalidInput, "coset outside the complex");
    return static_cast<std::uint32_t>(idx);
  };
  std::uint32_t cur = cell_of(u, J);
  path.cells.push_back(cur);
  int weight = P.cubical_incidence(sigma, cur);
  while (true) {
    const auto mm = match_coset(T.descents(u), J, 3, P.diagram());
    const int r = mm.moved;
    if (r < A.first || r > A.second) break;
    const auto up = m.partner[cur];
    if (up < 0) throw Error(Errc::InvalidInput, "path reached an unmatched cell");
    const auto b = static_cast<std::uint32_t>(up);
    const auto next = cell_of(T.right(u, r), J);
    weight *= -P.cubical_incidence(b, cur) * P.cubical_incidence(b, next);
    path.cells.push_back(b);
    path.cells.push_back(next);
    cur = next;
    u = P.cell(next).rep;
  }
  path.weight = weight;
  return path;
}

/// Steps alternate between covers and matched up-edges, never stepping
/// straight back.
inline bool is_alternating(const FacePoset& p, const Matching& m, const std::vector<std::uint32_t>& cells) {
  for (std::size_t i = 1; i < cells.size(); ++i) {
    const auto a = cells[i - 1], b = cells[i];
    if (i % 2 == 1) {
      if (!p.covers(a, b)) return false;
      if (i >= 2 && b == cells[i - 2]) return false;
    } else {
      if (m.partner[a] != b || p.dim[b] != p.dim[a] + 1) return false;
    }
  }
  return cells.size() % 2 == 0;
}

// ---------------------------------------------------------------------------
// Type A: set compositions of [n+1]

using SetComposition = std::vector<std::vector<int>>;

inline SetComposition normalized(SetComposition c) {
  for (auto& b : c) std::sort(b.begin(), b.end(), std::greater<>());
  return c;
}

/// One step of the block-by-block matching rules; returns c itself when
/// the composition is critical.
inline SetComposition match_set_composition(const SetComposition& input, int k) {
  SetComposition c = normalized(input);
  for (const auto& b : c)
    if (b.empty() || static_cast<int>(b.size()) > k - 1)
      throw Error(Errc::BlockTooLarge, "blocks must have between 1 and k-1 elements");
  std::size_t i = 0;
  while (i < c.size()) {
    if (c[i].size() > 1) {
      std::vector<int> rest(c[i].begin() + 1, c[i].end());
      const int top = c[i][0];
      c[i] = {top};
      c.insert(c.begin() + static_cast<std::ptrdiff_t>(i) + 1, rest);
      return c;
    }
    if (i + 1 == c.size()) break;
    if (c[i][0] < c[i + 1][0]) {
      ++i;
      continue;
    }
    if (static_cast<int>(c[i + 1].size()) == k - 1) {
      i += 2;
      continue;
    }
    c[i].insert(c[i].end(), c[i + 1].begin(), c[i + 1].end());
    c.erase(c.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    return normalized(c);
  }
  return c;
}

/// All set compositions of {1..m} with blocks of size at most `max_block`.
inline std::vector<SetComposition> set_compositions(int m, int max_block) {
  std::vector<SetComposition> out;
  SetComposition cur;
  auto rec = [&](auto&& self, GenSet rest) -> void {
    if (!rest) {
      out.push_back(normalized(cur));
      return;
    }
    for (GenSet b = rest; b; b = (b - 1) & rest) {
      if (popcount(b) > max_block) continue;
      std::vector<int> block;
      for_each_bit(b, [&](int v) { block.push_back(v + 1); });
      cur.push_back(block);
      self(self, rest & ~b);
      cur.pop_back();
    }
  };
  rec(rec, full_set(m));
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {
inline void require_standard_type_a(const CoxeterSystem& S) {
  const auto& d = S.diagram();
  const auto& types = d.component_types();
  bool ok = types.size() == 1 && types[0].family == 'A';
  for (int i = 0; ok && i + 1 < d.rank(); ++i) ok = d.bond(i, i + 1) == 3;
  if (!ok) throw Error(Errc::InvalidInput, "set compositions need type A with the path order");
}
}  // namespace detail

/// One-line notation of w in S_{n+1}, from w(alpha_i) = e_{w(i)} - e_{w(i+1)}.
inline std::vector<int> to_permutation(const CoxeterSystem& S, std::span<const std::uint32_t> images) {
  detail::require_standard_type_a(S);
  const int n = S.rank();
  std::vector<int> w(n + 1, 0);
  for (int i = 0; i < n; ++i) {
    const auto coords = S.coordinates(images[i]);
    int lo = -1, hi = -1, sign = 0;
    for (int j = 0; j < n; ++j)
      if (coords[j] != 0) {
        if (lo < 0) lo = j;
        hi = j;
        sign = coords[j] > 0 ? 1 : -1;
      }
    // root e_a - e_b with a = lo + 1, b = hi + 2 (1-based)
    const int a = lo + 1, b = hi + 2;
    if (sign > 0) {
      w[i] = a;
      w[i + 1] = b;
    } else {
      w[i] = b;
      w[i + 1] = a;
    }
  }
  return w;
}

inline GroupElement from_permutation(const CoxeterSystem& S, std::vector<int> perm) {
  detail::require_standard_type_a(S);
  std::vector<int> word;
  // bubble sort: perm * s_i swaps positions i, i+1
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < perm.size(); ++i)
      if (perm[i] > perm[i + 1]) {
        std::swap(perm[i], perm[i + 1]);
        word.push_back(static_cast<int>(i));
        swapped = true;
      }
  }
  std::reverse(word.begin(), word.end());
  return S.from_word(word);
}

/// The face w W_I of the type A permutahedron as a set composition: blocks
/// are the runs of positions joined by generators in I.
inline SetComposition cell_to_composition(const PermComplex& P, std::uint32_t cell) {
  const Cell& c = P.cell(cell);
  const auto w = to_permutation(P.system(), P.table().images(c.rep));
  SetComposition out{{w[0]}};
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (contains(c.gens, static_cast<int>(i) - 1))
      out.back().push_back(w[i]);
    else
      out.push_back({w[i]});
  }
  return normalized(out);
}

inline std::int64_t composition_to_cell(const PermComplex& P, const SetComposition& comp) {
  std::vector<int> line;
  GenSet I = 0;
  for (const auto& b : normalized(comp)) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j > 0) I |= bit(static_cast<int>(line.size()) - 1);
      line.push_back(b[j]);
    }
  }
  const auto w = from_permutation(P.system(), line);
  return P.index_of(P.table().id_of(w), I);
}

}  // namespace coxmorse
