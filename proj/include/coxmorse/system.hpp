#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "coxmorse/diagram.hpp"
#include "coxmorse/ring.hpp"

namespace coxmorse {

/// A group element, stored as the images w(alpha_s) of the simple roots
/// (root indices) together with its length.
struct GroupElement {
  std::vector<std::uint32_t> images;
  int length = 0;

  bool operator==(const GroupElement& o) const { return images == o.images; }
};

namespace detail {

struct CoordHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (std::int64_t x : v) h = (h ^ static_cast<std::uint64_t>(x)) * 0x100000001b3ull + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace detail

/// Exact reflection representation of a finite Coxeter group. Roots are
/// written in the basis of simple roots of their component, with
/// coefficients in Z (crystallographic components, via an integral Cartan
/// matrix) or in Z[2cos(pi/m)] (H3, H4, I2(m)). Immutable once built.
class CoxeterSystem {
 public:
  explicit CoxeterSystem(CoxeterDiagram diagram) : diagram_(std::move(diagram)) { build_roots(); }

  const CoxeterDiagram& diagram() const { return diagram_; }
  int rank() const { return diagram_.rank(); }
  BigInt order() const { return diagram_.order(); }

  std::size_t root_count() const { return root_comp_.size(); }
  bool is_positive(std::uint32_t r) const { return positive_[r] != 0; }
  std::uint32_t negate(std::uint32_t r) const { return neg_[r]; }
  std::uint32_t simple_root(int s) const { return simple_[s]; }
  /// Index of s(r).
  std::uint32_t reflect(int s, std::uint32_t r) const { return tables_[s][r]; }
  std::span<const std::uint32_t> simple_table(int s) const { return tables_[s]; }
  int root_component(std::uint32_t r) const { return root_comp_[r]; }

  std::span<const std::int64_t> coordinates(std::uint32_t r) const {
    const auto& c = comps_[root_comp_[r]];
    return {coords_.data() + root_offset_[r], static_cast<std::size_t>(c.width())};
  }
  const AlgebraicRing& component_ring(int c) const { return comps_[c].ring; }
  /// Generator positions of component c, in order.
  const std::vector<int>& component_generators(int c) const { return comps_[c].gens; }

  std::optional<std::uint32_t> find_root(int comp, const std::vector<std::int64_t>& coords) const {
    const auto& idx = comps_[comp].index;
    auto it = idx.find(coords);
    if (it == idx.end()) return std::nullopt;
    return it->second;
  }

  GroupElement identity() const { return {simple_, 0}; }

  bool is_descent(const GroupElement& w, int s) const { return !is_positive(w.images[s]); }

  GenSet descents(std::span<const std::uint32_t> images) const {
    GenSet d = 0;
    for (int s = 0; s < rank(); ++s)
      if (!is_positive(images[s])) d |= bit(s);
    return d;
  }
  GenSet descents(const GroupElement& w) const { return descents(w.images); }

  /// Images of ws, written into `out` (which may not alias `in`).
  void right_multiply_images(std::span<const std::uint32_t> in, int s, std::span<std::uint32_t> out) const {
    const int n = rank();
    for (int t = 0; t < n; ++t) out[t] = in[t];
    out[s] = neg_[in[s]];
    const int c = gen_comp_[s];
    const auto& comp = comps_[c];
    const int ls = gen_local_[s];
    const int d = comp.ring.degree();
    const auto ws = coordinates(in[s]);
    std::vector<std::int64_t> v;
    for (int lt = 0; lt < comp.rank(); ++lt) {
      if (lt == ls) continue;
      const auto& a = comp.cartan[ls][lt];
      if (std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x == 0; })) continue;
      // s(alpha_t) = alpha_t - A[s][t] alpha_s, so (ws)(alpha_t) = w(alpha_t) - A[s][t] w(alpha_s)
      const int t = comp.gens[lt];
      const auto wt = coordinates(in[t]);
      v.assign(wt.begin(), wt.end());
      const auto& na = comp.neg_cartan[ls][lt];
      for (int j = 0; j < comp.rank(); ++j)
        comp.ring.multiply_add(na, ws.subspan(j * d, d), std::span<std::int64_t>(v).subspan(j * d, d));
      auto hit = comp.index.find(v);
      if (hit == comp.index.end()) throw Error(Errc::InvalidInput, "right multiplication left the root system");
      out[t] = hit->second;
    }
  }

  GroupElement right_multiply(const GroupElement& w, int s) const {
    GroupElement r;
    r.images.resize(rank());
    right_multiply_images(w.images, s, r.images);
    r.length = w.length + (is_descent(w, s) ? -1 : 1);
    return r;
  }

  /// sw; the length is recomputed from the inversion count.
  GroupElement left_multiply(int s, const GroupElement& w) const {
    GroupElement r;
    r.images.resize(rank());
    for (int t = 0; t < rank(); ++t) r.images[t] = tables_[s][w.images[t]];
    r.length = inversion_count(r);
    return r;
  }

  GroupElement from_word(std::span<const int> word) const {
    GroupElement w = identity();
    for (int s : word) w = right_multiply(w, s);
    return w;
  }

  /// The unique element of wW_I having every s in I as a descent.
  GroupElement max_length_rep(GroupElement w, GenSet I) const {
    while (true) {
      const GenSet up = I & ~descents(w);
      if (!up) return w;
      w = right_multiply(w, lowest(up));
    }
  }

  /// Image of an arbitrary root under w, by linearity.
  std::uint32_t apply(const GroupElement& w, std::uint32_t r) const {
    const int c = root_comp_[r];
    const auto& comp = comps_[c];
    const int d = comp.ring.degree();
    const auto beta = coordinates(r);
    std::vector<std::int64_t> v(comp.width(), 0);
    for (int j = 0; j < comp.rank(); ++j) {
      const auto img = coordinates(w.images[comp.gens[j]]);
      for (int i = 0; i < comp.rank(); ++i)
        comp.ring.multiply_add(beta.subspan(j * d, d), img.subspan(i * d, d),
                               std::span<std::int64_t>(v).subspan(i * d, d));
    }
    auto hit = comp.index.find(v);
    if (hit == comp.index.end()) throw Error(Errc::InvalidInput, "image is not a root");
    return hit->second;
  }

  /// Number of positive roots sent to negative roots.
  int inversion_count(const GroupElement& w) const {
    int count = 0;
    for (std::uint32_t r = 0; r < root_count(); ++r)
      if (is_positive(r) && !is_positive(apply(w, r))) ++count;
    return count;
  }

 private:
  struct Component {
    std::vector<int> gens;
    AlgebraicRing ring;
    std::vector<std::vector<std::vector<std::int64_t>>> cartan, neg_cartan;
    std::unordered_map<std::vector<std::int64_t>, std::uint32_t, detail::CoordHash> index;
    int rank() const { return static_cast<int>(gens.size()); }
    int width() const { return rank() * ring.degree(); }
  };

  void build_roots();

  CoxeterDiagram diagram_;
  std::vector<Component> comps_;
  std::vector<int> gen_comp_, gen_local_;
  std::vector<int> root_comp_;
  std::vector<std::size_t> root_offset_;
  std::vector<std::int64_t> coords_;
  std::vector<char> positive_;
  std::vector<std::uint32_t> neg_, simple_;
  std::vector<std::vector<std::uint32_t>> tables_;
};

inline void CoxeterSystem::build_roots() {
  const int n = rank();
  gen_comp_.assign(n, -1);
  gen_local_.assign(n, -1);
  simple_.assign(n, 0);
  const auto& sets = diagram_.component_sets();
  for (std::size_t c = 0; c < sets.size(); ++c) {
    Component comp;
    comp.gens = elements(sets[c]);
    int special = 0;
    for (int a : comp.gens)
      for (int b : comp.gens) {
        const int m = diagram_.bond(a, b);
        if (a != b && m != 2 && m != 3 && m != 4 && m != 6) special = m;
      }
    comp.ring = special ? AlgebraicRing::two_cos_pi_over(special) : AlgebraicRing::integers();
    const int r = comp.rank(), d = comp.ring.degree();
    comp.cartan.assign(r, std::vector<std::vector<std::int64_t>>(r, std::vector<std::int64_t>(d, 0)));
    for (int i = 0; i < r; ++i) {
      gen_comp_[comp.gens[i]] = static_cast<int>(c);
      gen_local_[comp.gens[i]] = i;
      comp.cartan[i][i] = comp.ring.from_int(2);
      for (int j = 0; j < r; ++j) {
        if (i == j) continue;
        const int m = diagram_.bond(comp.gens[i], comp.gens[j]);
        if (m == 2) continue;
        if (m == 3) {
          comp.cartan[i][j] = comp.ring.from_int(-1);
        } else if (special) {
          comp.cartan[i][j] = comp.ring.generator(-1);
        } else {
          // integral Cartan matrix: product of the two entries is 4cos^2(pi/m)
          const std::int64_t prod = m == 4 ? 2 : 3;
          comp.cartan[i][j] = comp.ring.from_int(i < j ? -prod : -1);
        }
      }
    }
    comp.neg_cartan = comp.cartan;
    for (auto& row : comp.neg_cartan)
      for (auto& e : row)
        for (auto& x : e) x = -x;
    comps_.push_back(std::move(comp));
  }

  // Positive roots: close the simple roots under "beta != alpha_i  =>  s_i(beta)".
  for (std::size_t c = 0; c < comps_.size(); ++c) {
    auto& comp = comps_[c];
    const int r = comp.rank(), d = comp.ring.degree();
    auto reflect_coords = [&](const std::vector<std::int64_t>& beta, int i) {
      std::vector<std::int64_t> pairing(d, 0);
      for (int j = 0; j < r; ++j)
        comp.ring.multiply_add(std::span<const std::int64_t>(beta).subspan(j * d, d), comp.cartan[i][j], pairing);
      std::vector<std::int64_t> out = beta;
      for (int x = 0; x < d; ++x) out[i * d + x] -= pairing[x];
      return out;
    };
    std::vector<std::vector<std::int64_t>> pos;
    std::deque<std::size_t> queue;
    for (int i = 0; i < r; ++i) {
      std::vector<std::int64_t> e(comp.width(), 0);
      e[i * d] = 1;
      comp.index.emplace(e, 0);
      pos.push_back(e);
      queue.push_back(pos.size() - 1);
    }
    const std::size_t expected = static_cast<std::size_t>(diagram_.component_types()[c].positive_roots());
    while (!queue.empty()) {
      const auto cur = pos[queue.front()];
      queue.pop_front();
      for (int i = 0; i < r; ++i) {
        std::vector<std::int64_t> e(comp.width(), 0);
        e[i * d] = 1;
        if (cur == e) continue;
        auto img = reflect_coords(cur, i);
        if (comp.index.emplace(img, 0).second) {
          pos.push_back(img);
          queue.push_back(pos.size() - 1);
          if (pos.size() > expected) throw Error(Errc::InfiniteGroup, "root system does not close");
        }
      }
    }
    if (pos.size() != expected) throw Error(Errc::InvalidInput, "unexpected number of positive roots");
    comp.index.clear();
    const std::uint32_t base = static_cast<std::uint32_t>(root_comp_.size());
    const std::uint32_t np = static_cast<std::uint32_t>(pos.size());
    for (int sign : {1, -1})
      for (std::uint32_t k = 0; k < np; ++k) {
        const std::uint32_t idx = static_cast<std::uint32_t>(root_comp_.size());
        std::vector<std::int64_t> v = pos[k];
        for (auto& x : v) x *= sign;
        comp.index.emplace(v, idx);
        root_comp_.push_back(static_cast<int>(c));
        root_offset_.push_back(coords_.size());
        coords_.insert(coords_.end(), v.begin(), v.end());
        positive_.push_back(sign > 0);
        neg_.push_back(sign > 0 ? idx + np : idx - np);
      }
    for (int i = 0; i < r; ++i) simple_[comp.gens[i]] = base + static_cast<std::uint32_t>(i);
    (void)reflect_coords;
  }

  tables_.assign(n, std::vector<std::uint32_t>(root_count()));
  for (int s = 0; s < n; ++s) {
    const auto& comp = comps_[gen_comp_[s]];
    const int i = gen_local_[s], r = comp.rank(), d = comp.ring.degree();
    for (std::uint32_t x = 0; x < root_count(); ++x) {
      if (root_comp_[x] != gen_comp_[s]) {
        tables_[s][x] = x;
        continue;
      }
      const auto beta = coordinates(x);
      std::vector<std::int64_t> pairing(d, 0);
      for (int j = 0; j < r; ++j) comp.ring.multiply_add(beta.subspan(j * d, d), comp.cartan[i][j], pairing);
      std::vector<std::int64_t> out(beta.begin(), beta.end());
      for (int y = 0; y < d; ++y) out[i * d + y] -= pairing[y];
      tables_[s][x] = comp.index.at(out);
    }
  }
}

/// Parses a group string such as "E6" or "A2xA1" and builds its root system.
inline CoxeterSystem build_system(const std::string& group) {
  return CoxeterSystem(CoxeterDiagram::parse(group));
}

}  // namespace coxmorse
