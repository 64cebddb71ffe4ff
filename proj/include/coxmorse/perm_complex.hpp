#pragma once

#include <algorithm>
#include <memory>
#include <vector>

#include "coxmorse/face_poset.hpp"
#include "coxmorse/group.hpp"

namespace coxmorse {

/// A coset wW_I, identified by its maximal-length representative.
struct Cell {
  ElementTable::Id rep;
  GenSet gens;
  int dim() const { return popcount(gens); }
  bool operator==(const Cell&) const = default;
};

using FVector = std::vector<BigInt>;

namespace detail {
inline void check_k(const CoxeterDiagram& d, int k) {
  if (k < 2 || k > d.rank())
    throw Error(Errc::OutOfRange, "k must satisfy 2 <= k <= rank (k=" + std::to_string(k) + ", rank=" +
                                      std::to_string(d.rank()) + ")");
  for (GenSet c : d.component_sets())
    if (popcount(c) >= k - 1) return;
  throw Error(Errc::EmptyArrangement, "no standard k-parabolic subgroup for k=" + std::to_string(k));
}
}  // namespace detail

/// f_i = sum over admissible I with |I| = i of |W|/|W_I|, without enumeration.
inline FVector fvector_formula(const CoxeterDiagram& d, int k) {
  detail::check_k(d, k);
  FVector f(d.rank() + 1, 0);
  const BigInt order = d.order();
  for (GenSet I = 0; I <= d.all(); ++I) {
    if (admissible(I, k, d)) f[popcount(I)] += order / parabolic_order(I, d);
    if (I == d.all()) break;
  }
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  return f;
}
inline FVector fvector_formula(const CoxeterSystem& s, int k) { return fvector_formula(s.diagram(), k); }

/// -1 + sum (-1)^i f_i
inline BigInt reduced_euler(const FVector& f) {
  BigInt chi = -1;
  for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 ? -f[i] : f[i]);
  return chi;
}

/// Face poset of Perm_k(W). Cells are sorted by (representative id, gens).
class PermComplex {
 public:
  static PermComplex build(std::shared_ptr<const ElementTable> table, int k, bool with_covers = true) {
    detail::check_k(table->system().diagram(), k);
    return PermComplex(std::move(table), k, with_covers);
  }
  static PermComplex build(const CoxeterSystem& system, int k, std::uint64_t budget = default_budget(),
                           bool with_covers = true) {
    detail::check_k(system.diagram(), k);
    return build(ElementTable::enumerate(system, budget), k, with_covers);
  }

  int k() const { return k_; }
  const ElementTable& table() const { return *table_; }
  std::shared_ptr<const ElementTable> table_ptr() const { return table_; }
  const CoxeterSystem& system() const { return table_->system(); }
  const CoxeterDiagram& diagram() const { return table_->system().diagram(); }

  std::size_t size() const { return cells_.size(); }
  const Cell& cell(std::uint32_t i) const { return cells_[i]; }
  const std::vector<Cell>& cells() const { return cells_; }
  bool has_covers() const { return !poset_.facets.empty() || cells_.empty(); }
  const FacePoset& poset() const {
    if (!has_covers()) throw Error(Errc::InvalidInput, "complex was built without cover relations");
    return poset_;
  }

  /// Index of the cell (rep, gens); rep must be the maximal representative.
  std::int64_t index_of(ElementTable::Id rep, GenSet gens) const {
    auto b = cells_.begin() + offsets_[rep], e = cells_.begin() + offsets_[rep + 1];
    auto it = std::lower_bound(b, e, gens, [](const Cell& c, GenSet g) { return c.gens < g; });
    if (it == e || it->gens != gens) return -1;
    return it - cells_.begin();
  }
  /// Index of the coset w W_I for an arbitrary element w of it.
  std::int64_t coset_index(ElementTable::Id w, GenSet gens) const { return index_of(table_->max_rep(w, gens), gens); }

  /// Cells whose representative is w, i.e. the fiber over w.
  std::pair<std::uint32_t, std::uint32_t> fiber(ElementTable::Id w) const { return {offsets_[w], offsets_[w + 1]}; }

  FVector fvector() const {
    FVector f;
    for (const Cell& c : cells_) {
      if (f.size() <= std::size_t(c.dim())) f.resize(c.dim() + 1, 0);
      f[c.dim()] += 1;
    }
    return f;
  }

  /// [tau : sigma] for the cubical structure of Perm_3(W).
  int cubical_incidence(std::uint32_t sigma, std::uint32_t tau) const {
    if (k_ != 3) throw Error(Errc::NotCubical, "cubical incidence needs k = 3");
    const Cell& s = cells_[sigma];
    const Cell& t = cells_[tau];
    const GenSet removed = s.gens & ~t.gens;
    if (!is_subset(t.gens, s.gens) || popcount(removed) != 1)
      throw Error(Errc::InvalidInput, "not a cover relation");
    const int r = lowest(removed);
    const int sign = popcount(s.gens & (bit(r) - 1)) % 2 ? -1 : 1;
    // the face containing the representative itself carries the positive orientation
    if (table_->max_rep(s.rep, t.gens) == t.rep) return sign;
    if (table_->max_rep(table_->right(s.rep, r), t.gens) == t.rep) return -sign;
    throw Error(Errc::InvalidInput, "not a cover relation");
  }

 private:
  PermComplex(std::shared_ptr<const ElementTable> table, int k, bool with_covers)
      : table_(std::move(table)), k_(k) {
    const auto& T = *table_;
    const auto& d = T.system().diagram();
    offsets_.assign(T.size() + 1, 0);
    // admissible subsets, by mask, shared by all elements
    std::vector<GenSet> adm;
    for (GenSet I = 0; I <= d.all(); ++I) {
      if (admissible(I, k, d)) adm.push_back(I);
      if (I == d.all()) break;
    }
    for (ElementTable::Id w = 0; w < T.size(); ++w) {
      const GenSet des = T.descents(w);
      for (GenSet I : adm)
        if (is_subset(I, des)) cells_.push_back({w, I});
      offsets_[w + 1] = static_cast<std::uint32_t>(cells_.size());
    }
    if (with_covers) build_covers();
  }

  void build_covers() {
    const auto& T = *table_;
    poset_.dim.resize(cells_.size());
    poset_.facets.assign(cells_.size(), {});
    parallel_for(cells_.size(), [&](std::size_t b, std::size_t e) {
      for (std::size_t c = b; c < e; ++c) {
        const Cell& cell = cells_[c];
        poset_.dim[c] = cell.dim();
        if (!cell.gens) continue;
        const auto members = T.coset(cell.rep, cell.gens);
        auto& out = poset_.facets[c];
        for_each_bit(cell.gens, [&](int s) {
          const GenSet sub = cell.gens & ~bit(s);
          for (auto x : members) {
            const auto idx = index_of(T.max_rep(x, sub), sub);
            if (idx < 0) throw Error(Errc::InvalidInput, "missing facet");
            out.push_back(static_cast<std::uint32_t>(idx));
          }
        });
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
      }
    });
    poset_.build_cofacets();
  }

  std::shared_ptr<const ElementTable> table_;
  int k_;
  std::vector<Cell> cells_;
  std::vector<std::uint32_t> offsets_;
  FacePoset poset_;
};

}  // namespace coxmorse
