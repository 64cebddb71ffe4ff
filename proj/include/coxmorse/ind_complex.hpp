#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxmorse/bits.hpp"
#include "coxmorse/error.hpp"
#include "coxmorse/face_poset.hpp"

namespace coxmorse {

/// Graph on vertices 0..n-1 whose integer order is the linear order.
/// `vertices` selects an induced subgraph (all vertices by default).
struct OrderedGraph {
  int n = 0;
  std::vector<GenSet> adj;
  GenSet vertices = 0;
  std::vector<std::string> labels;

  static OrderedGraph with_vertices(int n) {
    if (n < 0 || n > 64) throw Error(Errc::OutOfRange, "graphs have at most 64 vertices");
    OrderedGraph g;
    g.n = n;
    g.adj.assign(n, 0);
    g.vertices = full_set(n);
    for (int i = 0; i < n; ++i) g.labels.push_back(std::to_string(i + 1));
    return g;
  }
  static OrderedGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    auto g = with_vertices(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }
  /// A diagram-style graph given by adjacency masks, restricted to `within`.
  static OrderedGraph induced(std::span<const GenSet> adj, GenSet within) {
    auto g = with_vertices(static_cast<int>(adj.size()));
    for (int i = 0; i < g.n; ++i) g.adj[i] = adj[i];
    g.vertices = within;
    return g;
  }

  void add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw Error(Errc::InvalidInput, "bad edge");
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }

  bool is_face(GenSet s, int k) const { return is_subset(s, vertices) && max_component_size(adj, s) <= k; }

  std::string format(GenSet s) const {
    std::string out = "{";
    bool first = true;
    for_each_bit(s, [&](int v) {
      if (!first) out += ",";
      out += labels[v];
      first = false;
    });
    return out + "}";
  }
};

/// Graph file: vertex count, then "u v" edges (1-based); an optional line
/// "order: v1 v2 ..." lists the vertices in their linear order.
inline OrderedGraph parse_graph(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> order;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "order:") {
      int v;
      while (ls >> v) order.push_back(v);
      continue;
    }
    try {
      if (n < 0) {
        std::size_t pos = 0;
        n = std::stoi(first, &pos);
        if (pos != first.size()) throw Error(Errc::InvalidInput, "bad vertex count");
        continue;
      }
      int u = std::stoi(first), v;
      if (!(ls >> v)) throw Error(Errc::InvalidInput, "edge lines need two vertices: " + line);
      edges.push_back({u, v});
    } catch (const std::logic_error&) {
      throw Error(Errc::InvalidInput, "malformed graph line: " + line);
    }
  }
  if (n < 0) throw Error(Errc::InvalidInput, "missing vertex count");
  if (order.empty())
    for (int v = 1; v <= n; ++v) order.push_back(v);
  if (static_cast<int>(order.size()) != n) throw Error(Errc::InvalidInput, "order line must list every vertex once");
  std::vector<int> pos(n + 1, -1);
  for (int i = 0; i < n; ++i) {
    const int v = order[i];
    if (v < 1 || v > n || pos[v] >= 0) throw Error(Errc::InvalidInput, "order line must list every vertex once");
    pos[v] = i;
  }
  auto g = OrderedGraph::with_vertices(n);
  for (int i = 0; i < n; ++i) g.labels[i] = std::to_string(order[i]);
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n) throw Error(Errc::InvalidInput, "edge endpoint out of range");
    g.add_edge(pos[u], pos[v]);
  }
  return g;
}

/// Relabels g so that each component is rooted at the chosen vertex (by
/// label; the last vertex of a component if none is given) and vertices
/// farther from the root come first.
inline OrderedGraph reroot(const OrderedGraph& g, const std::vector<std::string>& roots) {
  if (!is_forest(g.adj, g.vertices)) throw Error(Errc::NotAForest, "graph has a cycle");
  std::vector<int> order;
  for (GenSet comp : components(g.adj, g.vertices)) {
    int root = highest(comp);
    for (const auto& r : roots)
      for_each_bit(comp, [&](int v) {
        if (g.labels[v] == r) root = v;
      });
    std::vector<std::pair<int, int>> dist;  // (-depth, vertex)
    GenSet seen = bit(root), frontier = bit(root);
    for (int depth = 0; frontier; ++depth) {
      for_each_bit(frontier, [&](int v) { dist.push_back({-depth, v}); });
      GenSet next = 0;
      for_each_bit(frontier, [&](int v) { next |= g.adj[v] & comp & ~seen; });
      seen |= next;
      frontier = next;
    }
    std::sort(dist.begin(), dist.end());
    for (auto [d, v] : dist) order.push_back(v);
  }
  OrderedGraph out = OrderedGraph::with_vertices(static_cast<int>(order.size()));
  std::vector<int> pos(g.n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    pos[order[i]] = static_cast<int>(i);
    out.labels[i] = g.labels[order[i]];
  }
  for (int u = 0; u < g.n; ++u)
    for_each_bit(g.adj[u] & g.vertices, [&](int v) {
      if (pos[u] >= 0 && u < v) out.add_edge(pos[u], pos[v]);
    });
  return out;
}

/// Random forest on n vertices: vertex i gets a parent in (i, n) or none.
template <class Rng>
OrderedGraph random_forest(int n, Rng& rng, double root_probability = 0.2) {
  auto g = OrderedGraph::with_vertices(n);
  std::bernoulli_distribution is_root(root_probability);
  for (int i = 0; i + 1 < n; ++i) {
    if (is_root(rng)) continue;
    g.add_edge(i, std::uniform_int_distribution<int>(i + 1, n - 1)(rng));
  }
  return g;
}

/// Facets of Ind_k(g), sorted lexicographically.
inline std::vector<GenSet> facets(const OrderedGraph& g, int k) {
  const std::vector<int> verts = elements(g.vertices);
  std::vector<GenSet> out;
  auto maximal = [&](GenSet s) {
    for (int v : verts)
      if (!contains(s, v) && g.is_face(s | bit(v), k)) return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t idx, GenSet cur) -> void {
    if (idx == verts.size()) {
      if (maximal(cur)) out.push_back(cur);
      return;
    }
    const GenSet with = cur | bit(verts[idx]);
    if (max_component_size(g.adj, with) <= k) self(self, idx + 1, with);
    self(self, idx + 1, cur);
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

/// All faces of Ind_k(g) (optionally including the empty face).
inline std::vector<GenSet> faces(const OrderedGraph& g, int k, bool include_empty) {
  std::vector<GenSet> out;
  const std::vector<int> verts = elements(g.vertices);
  auto rec = [&](auto&& self, std::size_t idx, GenSet cur) -> void {
    if (idx == verts.size()) {
      if (cur || include_empty) out.push_back(cur);
      return;
    }
    const GenSet with = cur | bit(verts[idx]);
    if (max_component_size(g.adj, with) <= k) self(self, idx + 1, with);
    self(self, idx + 1, cur);
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), [](GenSet a, GenSet b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  return out;
}

struct ShellingOrder {
  std::vector<GenSet> facets;
  std::vector<GenSet> restriction;

  /// Least i with face contained in F_i, or -1.
  int fiber(GenSet face) const {
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (is_subset(face, facets[i])) return static_cast<int>(i);
    return -1;
  }
};

/// R(F_i) = { x in F_i : F_i - x lies in some earlier facet }.
inline std::vector<GenSet> restriction_sets(const std::vector<GenSet>& order) {
  std::vector<GenSet> R(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for_each_bit(order[i], [&](int x) {
      const GenSet rest = order[i] & ~bit(x);
      for (std::size_t j = 0; j < i; ++j)
        if (is_subset(rest, order[j])) {
          R[i] |= bit(x);
          break;
        }
    });
  return R;
}

inline ShellingOrder make_order(std::vector<GenSet> facet_list) {
  ShellingOrder o;
  o.restriction = restriction_sets(facet_list);
  o.facets = std::move(facet_list);
  return o;
}

inline void require_shellable_input(const OrderedGraph& g) {
  if (!is_forest(g.adj, g.vertices)) throw Error(Errc::NotAForest, "graph has a cycle");
  if (!is_tree_compatible(g.adj, g.vertices))
    throw Error(Errc::NotTreeCompatible, "vertex order is not tree-compatible");
}

/// Facets in lexicographic order, with restriction sets.
inline ShellingOrder lex_shelling(const OrderedGraph& g, int k) {
  require_shellable_input(g);
  return make_order(facets(g, k));
}

/// Pairwise criterion: for i < j some l < j has F_i cap F_j inside
/// F_l cap F_j and |F_l cap F_j| = |F_j| - 1.
inline bool verify_shelling(const ShellingOrder& o) {
  const auto& F = o.facets;
  for (std::size_t j = 0; j < F.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const GenSet meet = F[i] & F[j];
      bool ok = false;
      for (std::size_t l = 0; l < j && !ok; ++l) {
        const GenSet m = F[l] & F[j];
        ok = is_subset(meet, m) && popcount(m) == popcount(F[j]) - 1;
      }
      if (!ok) return false;
    }
  return true;
}

/// Facets all of whose components have k vertices, each component C having
/// an earlier neighbour outside the facet that touches no other component,
/// and every vertex outside the facet adjacent to some component.
inline bool is_spanning_by_predicate(const OrderedGraph& g, GenSet F, int k) {
  if (k == 0) return F == 0;
  const auto comps = components(g.adj, F);
  for (GenSet c : comps) {
    if (popcount(c) != k) return false;
    GenSet others = F & ~c;
    GenSet cand = neighbours(g.adj, c) & g.vertices & ~F & ~neighbours(g.adj, others) & (bit(lowest(c)) - 1);
    if (!cand) return false;
  }
  const GenSet outside = g.vertices & ~F;
  if (!is_subset(outside, neighbours(g.adj, F))) return false;
  return true;
}

inline std::vector<GenSet> spanning_facets(const OrderedGraph& g, int k) {
  require_shellable_input(g);
  std::vector<GenSet> out;
  for (GenSet F : facets(g, k))
    if (is_spanning_by_predicate(g, F, k)) out.push_back(F);
  return out;
}

/// Facets fixed by the restriction map.
inline std::vector<GenSet> restriction_fixed_facets(const ShellingOrder& o) {
  std::vector<GenSet> out;
  for (std::size_t i = 0; i < o.facets.size(); ++i)
    if (o.restriction[i] == o.facets[i]) out.push_back(o.facets[i]);
  return out;
}

/// Partner of a face under the matching induced by a shelling. The fiber
/// of F_i is the interval [R(F_i), F_i]; it is paired off by toggling
/// x = min(F_i - R(F_i)). Without the empty face the vertex {min F_1} is
/// left critical.
inline std::optional<GenSet> shelling_partner(const ShellingOrder& o, GenSet face, bool include_empty = true) {
  const int i = o.fiber(face);
  if (i < 0) throw Error(Errc::InvalidInput, "face not in complex");
  const GenSet free = o.facets[i] & ~o.restriction[i];
  if (!free) return std::nullopt;
  const GenSet partner = face ^ bit(lowest(free));
  if (!include_empty && (partner == 0 || face == 0)) return std::nullopt;
  return partner;
}

/// Face poset of Ind_k(g) with faces as vertex sets.
struct IndPoset {
  std::vector<GenSet> faces;
  std::unordered_map<GenSet, std::uint32_t> index;
  FacePoset poset;
  bool include_empty = false;
};

inline IndPoset ind_poset(const OrderedGraph& g, int k, bool include_empty) {
  IndPoset p;
  p.include_empty = include_empty;
  p.faces = faces(g, k, include_empty);
  for (std::uint32_t i = 0; i < p.faces.size(); ++i) p.index.emplace(p.faces[i], i);
  p.poset.dim.resize(p.faces.size());
  p.poset.facets.resize(p.faces.size());
  for (std::uint32_t i = 0; i < p.faces.size(); ++i) {
    const GenSet f = p.faces[i];
    p.poset.dim[i] = popcount(f) - (include_empty ? 0 : 1);
    for_each_bit(f, [&](int v) {
      auto it = p.index.find(f & ~bit(v));
      if (it != p.index.end()) p.poset.facets[i].push_back(it->second);
    });
    std::sort(p.poset.facets[i].begin(), p.poset.facets[i].end());
  }
  p.poset.build_cofacets();
  return p;
}

inline Matching shelling_matching(const IndPoset& p, const ShellingOrder& o) {
  Matching m = Matching::empty(p.faces.size());
  for (std::uint32_t i = 0; i < p.faces.size(); ++i) {
    auto partner = shelling_partner(o, p.faces[i], p.include_empty);
    if (partner) m.partner[i] = p.index.at(*partner);
  }
  return m;
}

}  // namespace coxmorse
