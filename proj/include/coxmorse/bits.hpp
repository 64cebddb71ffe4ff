#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace coxmorse {

/// Subset of an ordered vertex/generator set; bit i is the i-th element of the order.
using GenSet = std::uint64_t;

constexpr GenSet bit(int i) { return GenSet{1} << i; }
constexpr bool contains(GenSet s, int i) { return (s >> i) & 1u; }
constexpr bool is_subset(GenSet a, GenSet b) { return (a & ~b) == 0; }
constexpr int popcount(GenSet s) { return std::popcount(s); }
constexpr int lowest(GenSet s) { return std::countr_zero(s); }
constexpr int highest(GenSet s) { return 63 - std::countl_zero(s); }
constexpr GenSet full_set(int n) { return n >= 64 ? ~GenSet{0} : bit(n) - 1; }

template <class F>
void for_each_bit(GenSet s, F&& f) {
  while (s) {
    f(lowest(s));
    s &= s - 1;
  }
}

inline std::vector<int> elements(GenSet s) {
  std::vector<int> out;
  for_each_bit(s, [&](int i) { out.push_back(i); });
  return out;
}

/// Lexicographic order on subsets: a < b iff the least element of the
/// symmetric difference lies in a.
constexpr bool lex_less(GenSet a, GenSet b) {
  const GenSet d = a ^ b;
  return d != 0 && (a & (d & (~d + 1))) != 0;
}

// ---------------------------------------------------------------------------
// Graphs on at most 64 ordered vertices, stored as adjacency bitmasks.

/// Connected component of `within` containing vertex v.
inline GenSet component_of(std::span<const GenSet> adj, GenSet within, int v) {
  GenSet comp = bit(v), frontier = bit(v);
  while (frontier) {
    GenSet next = 0;
    for_each_bit(frontier, [&](int u) { next |= adj[u]; });
    next &= within & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

/// Components of the induced subgraph on `within`, ordered by least element.
inline std::vector<GenSet> components(std::span<const GenSet> adj, GenSet within) {
  std::vector<GenSet> out;
  GenSet rest = within;
  while (rest) {
    const GenSet c = component_of(adj, within, lowest(rest));
    out.push_back(c);
    rest &= ~c;
  }
  return out;
}

inline int max_component_size(std::span<const GenSet> adj, GenSet within) {
  int best = 0;
  GenSet rest = within;
  while (rest) {
    const GenSet c = component_of(adj, within, lowest(rest));
    best = std::max(best, popcount(c));
    rest &= ~c;
  }
  return best;
}

inline bool is_connected(std::span<const GenSet> adj, GenSet within) {
  return within != 0 && component_of(adj, within, lowest(within)) == within;
}

/// Neighbourhood of a vertex set (excluding the set itself).
inline GenSet neighbours(std::span<const GenSet> adj, GenSet s) {
  GenSet n = 0;
  for_each_bit(s, [&](int v) { n |= adj[v]; });
  return n & ~s;
}

inline bool is_forest(std::span<const GenSet> adj, GenSet within) {
  int edges = 0;
  for_each_bit(within, [&](int v) { edges += popcount(adj[v] & within); });
  edges /= 2;
  const int comps = static_cast<int>(components(adj, within).size());
  return edges == popcount(within) - comps;
}

/// True iff each component, rooted at its largest vertex, has every
/// non-root vertex preceding its parent.
inline bool is_tree_compatible(std::span<const GenSet> adj, GenSet within) {
  for (GenSet comp : components(adj, within)) {
    const int root = highest(comp);
    GenSet seen = bit(root), frontier = bit(root);
    while (frontier) {
      GenSet next = 0;
      bool ok = true;
      for_each_bit(frontier, [&](int parent) {
        const GenSet kids = adj[parent] & comp & ~seen;
        if (kids && highest(kids) > parent) ok = false;
        next |= kids;
      });
      if (!ok) return false;
      seen |= next;
      frontier = next;
    }
  }
  return true;
}

}  // namespace coxmorse
