#pragma once

#include <cstdint>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coxmorse/bigint.hpp"
#include "coxmorse/parallel.hpp"
#include "coxmorse/system.hpp"

namespace coxmorse {

inline constexpr std::uint64_t kDefaultBudget = 3'000'000;

/// Enumeration budget: COXMORSE_BUDGET if set, otherwise 3e6 elements.
inline std::uint64_t default_budget() {
  if (const char* env = std::getenv("COXMORSE_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw Error(Errc::InvalidInput, std::string("bad COXMORSE_BUDGET: ") + env);
    }
  }
  return kDefaultBudget;
}

/// All elements of W, in breadth-first order (so lengths are nondecreasing
/// and element 0 is the identity). Element ids index every per-element array.
class ElementTable {
 public:
  using Id = std::uint32_t;
  static constexpr Id npos = 0xffffffffu;

  static std::shared_ptr<const ElementTable> enumerate(const CoxeterSystem& system,
                                                       std::uint64_t budget = default_budget()) {
    if (system.order() > BigInt(budget))
      throw Error(Errc::BudgetExceeded, "|W| = " + to_decimal(system.order()) + " exceeds the enumeration budget " +
                                            std::to_string(budget));
    return std::shared_ptr<const ElementTable>(new ElementTable(system));
  }

  const CoxeterSystem& system() const { return system_; }
  std::size_t size() const { return lengths_.size(); }
  int rank() const { return n_; }

  std::span<const std::uint32_t> images(Id id) const { return {images_.data() + std::size_t(id) * n_, std::size_t(n_)}; }
  int length(Id id) const { return lengths_[id]; }
  GenSet descents(Id id) const { return descents_[id]; }
  GroupElement element(Id id) const {
    auto im = images(id);
    return {std::vector<std::uint32_t>(im.begin(), im.end()), lengths_[id]};
  }

  Id identity() const { return 0; }
  Id longest() const { return static_cast<Id>(size() - 1); }

  Id find(std::span<const std::uint32_t> im) const {
    std::size_t h = hash(im) & mask_;
    while (true) {
      const Id c = slots_[h];
      if (c == npos) return npos;
      if (std::equal(im.begin(), im.end(), images(c).begin())) return c;
      h = (h + 1) & mask_;
    }
  }
  Id id_of(const GroupElement& w) const {
    const Id id = find(w.images);
    if (id == npos) throw Error(Errc::InvalidInput, "element not in table");
    return id;
  }

  /// Id of w*s. The multiplication table is built on first use.
  Id right(Id id, int s) const {
    std::call_once(right_once_, [this] { build_right(); });
    return right_[std::size_t(id) * n_ + s];
  }

  /// Maximal-length element of the coset w W_I.
  Id max_rep(Id id, GenSet I) const {
    while (true) {
      const GenSet up = I & ~descents_[id];
      if (!up) return id;
      id = right(id, lowest(up));
    }
  }

  /// Elements of the coset w W_I (breadth-first from w).
  std::vector<Id> coset(Id id, GenSet I) const {
    std::vector<Id> out{id};
    for (std::size_t i = 0; i < out.size(); ++i)
      for_each_bit(I, [&](int s) {
        const Id u = right(out[i], s);
        if (std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
      });
    return out;
  }

 private:
  explicit ElementTable(const CoxeterSystem& system) : system_(system), n_(system.rank()) {
    const std::size_t order = static_cast<std::size_t>(system.order());
    std::size_t cap = 16;
    while (cap < 2 * order) cap <<= 1;
    slots_.assign(cap, npos);
    mask_ = cap - 1;
    images_.reserve(order * n_);
    lengths_.reserve(order);
    descents_.reserve(order);
    auto id = system.identity();
    insert(id.images, 0);
    std::vector<std::uint32_t> next(n_);
    // left multiplication keeps the Cayley graph breadth-first in length
    for (std::size_t cur = 0; cur < lengths_.size(); ++cur) {
      for (int s = 0; s < n_; ++s) {
        const auto table = system.simple_table(s);
        const auto im = images(static_cast<Id>(cur));
        for (int t = 0; t < n_; ++t) next[t] = table[im[t]];
        if (find(next) == npos) insert(next, lengths_[cur] + 1);
      }
    }
    if (lengths_.size() != order) throw Error(Errc::InvalidInput, "enumeration did not reach |W|");
  }

  std::size_t hash(std::span<const std::uint32_t> im) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : im) h = (h ^ x) * 1099511628211ull;
    return static_cast<std::size_t>(h ^ (h >> 32));
  }

  void insert(std::span<const std::uint32_t> im, int len) {
    const Id id = static_cast<Id>(lengths_.size());
    images_.insert(images_.end(), im.begin(), im.end());
    lengths_.push_back(len);
    descents_.push_back(system_.descents(im));
    std::size_t h = hash(im) & mask_;
    while (slots_[h] != npos) h = (h + 1) & mask_;
    slots_[h] = id;
  }

  void build_right() const {
    right_.assign(size() * n_, npos);
    parallel_for(size(), [&](std::size_t b, std::size_t e) {
      std::vector<std::uint32_t> out(n_);
      for (std::size_t id = b; id < e; ++id)
        for (int s = 0; s < n_; ++s) {
          system_.right_multiply_images(images(static_cast<Id>(id)), s, out);
          right_[id * n_ + s] = find(out);
        }
    });
  }

  CoxeterSystem system_;
  int n_;
  std::vector<std::uint32_t> images_;
  std::vector<int> lengths_;
  std::vector<GenSet> descents_;
  std::vector<Id> slots_;
  std::size_t mask_ = 0;
  mutable std::once_flag right_once_;
  mutable std::vector<Id> right_;
};

/// |W| / |W_K| for every K, indexed by bitmask.
inline std::vector<BigInt> coset_counts(const CoxeterDiagram& d) {
  const GenSet all = d.all();
  std::vector<BigInt> out(std::size_t(1) << d.rank());
  const BigInt order = d.order();
  for (GenSet K = 0;; ++K) {
    out[K] = order / parabolic_order(K, d);
    if (K == all) break;
  }
  return out;
}

/// #{w : Des(w) = J} for every J, by inclusion-exclusion over supersets.
inline std::vector<BigInt> exact_descent_counts(const CoxeterDiagram& d) {
  std::vector<BigInt> f = coset_counts(d);
  const int n = d.rank();
  for (int i = 0; i < n; ++i)
    for (std::size_t K = 0; K < f.size(); ++K)
      if (!(K & bit(i))) f[K] -= f[K | bit(i)];
  return f;
}

inline BigInt count_exact_descent(GenSet J, const CoxeterDiagram& d) {
  BigInt total = 0;
  const GenSet rest = d.all() & ~J;
  // iterate over subsets X of the complement, K = J + X
  GenSet X = 0;
  while (true) {
    const BigInt term = d.order() / parabolic_order(J | X, d);
    if (popcount(X) % 2) total -= term; else total += term;
    if (X == rest) break;
    X = (X - rest) & rest;
  }
  return total;
}
inline BigInt count_exact_descent(GenSet J, const CoxeterSystem& s) { return count_exact_descent(J, s.diagram()); }

/// Descent-set histogram by brute force over the enumerated group.
inline std::vector<std::uint64_t> descent_histogram(const ElementTable& table) {
  std::vector<std::uint64_t> h(std::size_t(1) << table.rank(), 0);
  for (std::size_t id = 0; id < table.size(); ++id) ++h[table.descents(static_cast<ElementTable::Id>(id))];
  return h;
}

/// #{w : l(w) = i} for each i.
inline std::vector<std::uint64_t> length_distribution(const ElementTable& table) {
  std::vector<std::uint64_t> h;
  for (std::size_t id = 0; id < table.size(); ++id) {
    const int l = table.length(static_cast<ElementTable::Id>(id));
    if (h.size() <= std::size_t(l)) h.resize(l + 1, 0);
    ++h[l];
  }
  return h;
}

}  // namespace coxmorse
