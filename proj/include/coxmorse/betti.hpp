#pragma once

#include <map>
#include <string>
#include <vector>

#include "coxmorse/group.hpp"
#include "coxmorse/ind_complex.hpp"
#include "coxmorse/morse.hpp"
#include "coxmorse/perm_complex.hpp"

namespace coxmorse {

using WeakComposition = std::vector<int>;

/// Weak compositions of total into exactly `parts` parts, each part at
/// least the given lower bound.
inline std::vector<WeakComposition> weak_compositions(int total, const std::vector<int>& lower) {
  std::vector<WeakComposition> out;
  WeakComposition cur;
  const int parts = static_cast<int>(lower.size());
  int rest_min = 0;
  for (int x : lower) rest_min += x;
  auto rec = [&](auto&& self, int i, int left, int need) -> void {
    if (i == parts) {
      if (left == 0) out.push_back(cur);
      return;
    }
    const int after = need - lower[i];
    for (int v = lower[i]; v <= left - after; ++v) {
      cur.push_back(v);
      self(self, i + 1, left - v, after);
      cur.pop_back();
    }
  };
  if (total >= rest_min) rec(rec, 0, total, rest_min);
  return out;
}

inline BigInt multinomial(int n, const WeakComposition& mu) {
  BigInt r = factorial(n);
  for (int m : mu) r /= factorial(m);
  return r;
}

namespace detail {
inline void check_formula_args(int n, int k, int t) {
  if (k < 3 || k > n) throw Error(Errc::OutOfRange, "closed forms need 3 <= k <= n");
  if (t < 0) throw Error(Errc::OutOfRange, "t must be nonnegative");
}
inline BigInt pow2(int e) { return e < 0 ? BigInt(0) : BigInt(1) << e; }
}  // namespace detail

/// Type A_n: rank of the homology in dimension t(k-2).
inline BigInt betti_type_A(int n, int k, int t) {
  detail::check_formula_args(n, k, t);
  if (t == 0) return 1;
  std::vector<int> lower(t + 1, k);
  lower[t] = 0;
  BigInt sum = 0;
  for (const auto& mu : weak_compositions(n + 1, lower)) {
    BigInt term = multinomial(n + 1, mu);
    for (int m = 0; m < t; ++m) term *= binomial(mu[m] - 1, k - 1);
    sum += term;
  }
  return sum;
}

/// Type B_n closed form, evaluated exactly as printed.
inline BigInt betti_type_B(int n, int k, int t) {
  detail::check_formula_args(n, k, t);
  if (t == 0) return 1;
  BigInt sum = 0;
  std::vector<int> lower(t + 1, k);
  lower[t] = 0;
  for (const auto& mu : weak_compositions(n, lower)) {
    BigInt term = multinomial(n, mu) * detail::pow2(n - mu[0] + k - 1);
    for (int m = 0; m < t; ++m) term *= binomial(mu[m] - 1, k - 1);
    sum += term;
  }
  lower[0] = k - 1;
  for (const auto& mu : weak_compositions(n, lower)) {
    if (mu[0] != k - 1) continue;
    BigInt term = multinomial(n, mu) * detail::pow2(n - k + 1);
    for (int m = 1; m < t; ++m) term *= binomial(mu[m] - 1, k - 1);
    sum += term;
  }
  return sum;
}

/// Type D_n, k = 3 closed form, evaluated exactly as printed.
inline BigInt betti_type_D3(int n, int t) {
  if (n < 4) throw Error(Errc::OutOfRange, "type D needs n >= 4");
  if (t < 0) throw Error(Errc::OutOfRange, "t must be nonnegative");
  if (t == 0) return 1;
  BigInt sum = 0;
  std::vector<int> lower(t + 1, 3);
  lower[t] = 0;
  lower[0] = 4;
  for (const auto& mu : weak_compositions(n, lower)) {
    BigInt term = multinomial(n, mu) * detail::pow2(n - mu[0] + 2);
    for (int m = 0; m < t; ++m) term *= binomial(mu[m] - 1, 2);
    sum += term;
  }
  lower[0] = 3;
  for (const auto& mu : weak_compositions(n, lower)) {
    if (mu[0] != 3) continue;
    BigInt term = multinomial(n, mu) * 7 * detail::pow2(n - 3);
    for (int m = 1; m < t; ++m) term *= binomial(mu[m] - 1, 2);
    sum += term;
  }
  return sum;
}

namespace detail {
/// T whose components all have k-2 vertices, t of them.
inline bool is_block_set(GenSet T, int k, int t, const CoxeterDiagram& d) {
  const auto comps = components(d.adjacency(), T);
  if (static_cast<int>(comps.size()) != t) return false;
  for (GenSet c : comps)
    if (popcount(c) != k - 2) return false;
  return true;
}
inline void check_descent_args(const CoxeterDiagram& d, int k, int t) {
  if (k < 3 || k > d.rank()) throw Error(Errc::OutOfRange, "need 3 <= k <= rank");
  if (t < 0) throw Error(Errc::OutOfRange, "t must be nonnegative");
}
}  // namespace detail

/// Number of pairs (w, T) satisfying critical_predicate with t components,
/// computed from exact descent-set counts (no enumeration of W).
inline BigInt betti_descent_count(const CoxeterDiagram& d, int k, int t,
                                  const std::vector<BigInt>* exact = nullptr) {
  detail::check_descent_args(d, k, t);
  if (t == 0) return 1;
  std::vector<BigInt> local;
  if (!exact) {
    local = exact_descent_counts(d);
    exact = &local;
  }
  const GenSet all = d.all();
  BigInt total = 0;
  for (GenSet T = 1; T <= all; ++T) {
    if (!detail::is_block_set(T, k, t, d)) continue;
    const GenSet rest = all & ~T;
    for (GenSet X = rest;; X = (X - 1) & rest) {
      const GenSet J = T | X;
      if (critical_predicate(J, T, k, d)) total += (*exact)[J];
      if (X == 0) break;
    }
  }
  return total;
}
inline BigInt betti_descent_count(const CoxeterSystem& s, int k, int t) { return betti_descent_count(s.diagram(), k, t); }

/// Values of t for which some T has t components of size k-2, each with a
/// nonempty N^< in the whole diagram: the only dimensions t(k-2) that can carry homology.
inline std::vector<int> possible_t(const CoxeterDiagram& d, int k) {
  std::vector<int> out;
  std::vector<char> seen(d.rank() + 1, 0);
  for (GenSet T = 1; T <= d.all(); ++T) {
    const auto comps = components(d.adjacency(), T);
    bool ok = true;
    for (GenSet c : comps) {
      if (popcount(c) != k - 2) { ok = false; break; }
      const GenSet others = T & ~c;
      const GenSet cand = neighbours(d.adjacency(), c) & ~T & ~neighbours(d.adjacency(), others) & (bit(lowest(c)) - 1);
      if (!cand) { ok = false; break; }
    }
    if (ok) seen[comps.size()] = 1;
  }
  for (int t = 1; t <= d.rank(); ++t)
    if (seen[t]) out.push_back(t);
  return out;
}

/// Reduced Betti numbers keyed by dimension (only positive dimensions;
/// the connected complement contributes nothing in reduced degree 0).
struct BettiTable {
  std::string group;
  int k = 0;
  std::string method;
  std::map<int, BigInt> entries;
  std::vector<std::string> flags;
};

inline std::map<int, BigInt> betti_by_descent(const CoxeterDiagram& d, int k) {
  const auto exact = exact_descent_counts(d);
  std::map<int, BigInt> out;
  for (int t : possible_t(d, k)) {
    BigInt v = betti_descent_count(d, k, t, &exact);
    if (v != 0) out[t * (k - 2)] = v;
  }
  return out;
}

/// Fills the single unknown rank from the reduced Euler characteristic of
/// the f-vector. `known` may fix ranks in any of the possible dimensions.
inline std::map<int, BigInt> betti_from_euler(const CoxeterDiagram& d, int k, const std::map<int, BigInt>& known = {}) {
  if (k < 3 || k > d.rank()) throw Error(Errc::OutOfRange, "need 3 <= k <= rank");
  const BigInt chi = reduced_euler(fvector_formula(d, k));
  std::vector<int> unknown;
  BigInt rest = chi;
  std::map<int, BigInt> out;
  for (int t : possible_t(d, k)) {
    const int dim = t * (k - 2);
    if (auto it = known.find(dim); it != known.end()) {
      rest -= (dim % 2 ? -it->second : it->second);
      if (it->second != 0) out[dim] = it->second;
    } else {
      unknown.push_back(dim);
    }
  }
  if (unknown.size() > 1)
    throw Error(Errc::Underdetermined, std::to_string(unknown.size()) + " unknown ranks; supply all but one");
  if (unknown.empty()) {
    if (rest != 0) throw Error(Errc::InvalidInput, "supplied ranks contradict the Euler characteristic");
    return out;
  }
  const int dim = unknown[0];
  const BigInt v = dim % 2 ? -rest : rest;
  if (v < 0) throw Error(Errc::InvalidInput, "Euler characteristic forces a negative rank");
  if (v != 0) out[dim] = v;
  return out;
}

/// The applicable closed form for a single irreducible diagram, if any.
inline std::optional<std::map<int, BigInt>> betti_by_formula(const CoxeterDiagram& d, int k) {
  const auto& types = d.component_types();
  if (types.size() != 1) return std::nullopt;
  const auto& ty = types[0];
  const int n = ty.rank;
  std::map<int, BigInt> out;
  auto fill = [&](auto&& f) {
    for (int t = 1; t * (k - 2) <= n; ++t) {
      BigInt v = f(t);
      if (v != 0) out[t * (k - 2)] = v;
    }
  };
  if (ty.family == 'A' && k >= 3 && k <= n) {
    fill([&](int t) { return betti_type_A(n, k, t); });
  } else if (ty.family == 'B' && k >= 3 && k <= n) {
    fill([&](int t) { return betti_type_B(n, k, t); });
  } else if (ty.family == 'D' && k == 3) {
    fill([&](int t) { return betti_type_D3(n, t); });
  } else {
    return std::nullopt;
  }
  return out;
}

inline std::map<int, BigInt> betti_by_matching(const PermComplex& P) {
  std::map<int, BigInt> out;
  const auto c = critical_counts(P);
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i]) out[static_cast<int>(i)] = c[i];
  return out;
}

inline HomologyResult perm_homology(const PermComplex& P) {
  return integral_homology(order_complex(P.poset(), true));
}

inline std::map<int, BigInt> betti_by_homology(const PermComplex& P, std::vector<std::string>* flags = nullptr) {
  const auto h = perm_homology(P);
  std::map<int, BigInt> out;
  for (auto [d, v] : h.nonzero()) out[d] = v;
  if (flags && !h.torsion_free()) flags->push_back("torsion");
  return out;
}

}  // namespace coxmorse
