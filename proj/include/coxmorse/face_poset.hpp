#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

namespace coxmorse {

/// Graded poset given by its cover relations: facets[c] lists the cells
/// covered by c (one dimension lower), cofacets[c] the cells covering c.
struct FacePoset {
  std::vector<int> dim;
  std::vector<std::vector<std::uint32_t>> facets;
  std::vector<std::vector<std::uint32_t>> cofacets;

  std::size_t size() const { return dim.size(); }

  int max_dim() const {
    int d = -1;
    for (int x : dim) d = std::max(d, x);
    return d;
  }

  std::vector<std::size_t> counts_by_dim() const {
    std::vector<std::size_t> c(std::max(0, max_dim() + 1), 0);
    for (int x : dim) ++c[x];
    return c;
  }

  void build_cofacets() {
    cofacets.assign(size(), {});
    for (std::uint32_t c = 0; c < size(); ++c)
      for (std::uint32_t f : facets[c]) cofacets[f].push_back(c);
  }

  bool covers(std::uint32_t upper, std::uint32_t lower) const {
    const auto& f = facets[upper];
    return std::find(f.begin(), f.end(), lower) != f.end();
  }

  /// Every interval [x, z] of length two has exactly two middle elements,
  /// and every 1-cell has exactly two vertices.
  bool has_diamond_property() const {
    for (std::uint32_t z = 0; z < size(); ++z) {
      if (dim[z] == 1 && facets[z].size() != 2) return false;
      std::map<std::uint32_t, int> middle;
      for (std::uint32_t y : facets[z])
        for (std::uint32_t x : facets[y]) ++middle[x];
      for (const auto& [x, count] : middle)
        if (count != 2) return false;
    }
    return true;
  }
};

/// Partial pairing of cells; partner[c] == -1 marks c as critical.
struct Matching {
  std::vector<std::int64_t> partner;

  static Matching empty(std::size_t n) { return {std::vector<std::int64_t>(n, -1)}; }

  bool matched(std::uint32_t c) const { return partner[c] >= 0; }

  void pair(std::uint32_t a, std::uint32_t b) {
    partner[a] = b;
    partner[b] = a;
  }

  std::size_t matched_count() const {
    return static_cast<std::size_t>(std::count_if(partner.begin(), partner.end(), [](auto p) { return p >= 0; }));
  }

  std::vector<std::uint32_t> critical() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c < partner.size(); ++c)
      if (partner[c] < 0) out.push_back(c);
    return out;
  }

  std::vector<std::size_t> critical_by_dim(const FacePoset& p) const {
    std::vector<std::size_t> c(std::max(0, p.max_dim() + 1), 0);
    for (std::uint32_t x = 0; x < partner.size(); ++x)
      if (partner[x] < 0) ++c[p.dim[x]];
    return c;
  }

  bool operator==(const Matching&) const = default;
};

/// Partners are mutual, and every pair is a cover relation.
inline bool is_involution_on_covers(const FacePoset& p, const Matching& m) {
  if (m.partner.size() != p.size()) return false;
  for (std::uint32_t a = 0; a < p.size(); ++a) {
    const auto b = m.partner[a];
    if (b < 0) continue;
    if (b >= static_cast<std::int64_t>(p.size()) || m.partner[b] != a) return false;
    const auto ub = static_cast<std::uint32_t>(b);
    if (!(p.covers(ub, a) || p.covers(a, ub))) return false;
  }
  return true;
}

/// No directed cycle in the Hasse diagram with edges pointing down, except
/// matched edges which point up.
inline bool verify_acyclic(const FacePoset& p, const Matching& m) {
  const std::size_t n = p.size();
  std::vector<char> colour(n, 0);  // 0 new, 1 on stack, 2 done
  struct Frame {
    std::uint32_t v;
    std::size_t next;
  };
  auto out_edges = [&](std::uint32_t v, std::size_t i, std::uint32_t& to) {
    // i indexes facets first, then the single up-edge
    const auto& f = p.facets[v];
    while (i < f.size()) {
      if (m.partner[f[i]] != v) {
        to = f[i];
        return i + 1;
      }
      ++i;
    }
    if (i == f.size() && m.partner[v] >= 0 && p.dim[m.partner[v]] > p.dim[v]) {
      to = static_cast<std::uint32_t>(m.partner[v]);
      return i + 1;
    }
    return std::size_t(-1);
  };
  std::vector<Frame> stack;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (colour[s]) continue;
    stack.push_back({s, 0});
    colour[s] = 1;
    while (!stack.empty()) {
      auto& top = stack.back();
      std::uint32_t to = 0;
      const std::size_t nx = out_edges(top.v, top.next, to);
      if (nx == std::size_t(-1)) {
        colour[top.v] = 2;
        stack.pop_back();
        continue;
      }
      top.next = nx;
      if (colour[to] == 1) return false;
      if (colour[to] == 0) {
        colour[to] = 1;
        stack.push_back({to, 0});
      }
    }
  }
  return true;
}

}  // namespace coxmorse
