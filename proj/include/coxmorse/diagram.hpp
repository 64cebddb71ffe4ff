#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "coxmorse/bigint.hpp"
#include "coxmorse/bits.hpp"
#include "coxmorse/error.hpp"
#include "json.hpp"

namespace coxmorse {

/// One irreducible finite Coxeter type.
struct IrreducibleType {
  char family = 'A';  // A B D E F H I
  int rank = 1;
  int m = 0;  // dihedral bond, family 'I' only

  std::string name() const {
    if (family == 'I') return "I2(" + std::to_string(m) + ")";
    return std::string(1, family) + std::to_string(rank);
  }

  BigInt order() const {
    switch (family) {
      case 'A': return factorial(rank + 1);
      case 'B': return (BigInt(1) << rank) * factorial(rank);
      case 'D': return (BigInt(1) << (rank - 1)) * factorial(rank);
      case 'E': return rank == 6 ? BigInt(51840) : rank == 7 ? BigInt(2903040) : BigInt(696729600);
      case 'F': return 1152;
      case 'H': return rank == 3 ? BigInt(120) : BigInt(14400);
      case 'I': return 2 * m;
    }
    return 0;
  }

  /// Number of reflections, i.e. the length of the longest element.
  int positive_roots() const {
    switch (family) {
      case 'A': return rank * (rank + 1) / 2;
      case 'B': return rank * rank;
      case 'D': return rank * (rank - 1);
      case 'E': return rank == 6 ? 36 : rank == 7 ? 63 : 120;
      case 'F': return 24;
      case 'H': return rank == 3 ? 15 : 60;
      case 'I': return m;
    }
    return 0;
  }

  bool operator==(const IrreducibleType&) const = default;
};

/// Bond multiplicity m(s,t); 2 means the generators commute.
struct Bond {
  std::string s, t;
  int m = 3;
};

/// Coxeter diagram on a linearly ordered generator set. Generator i is the
/// i-th element of the order, so every GenSet over the diagram is read in
/// that order.
class CoxeterDiagram {
 public:
  CoxeterDiagram() = default;

  /// Validates finiteness, tree-compatibility of the order and blocking of
  /// components.
  static CoxeterDiagram from_bonds(std::vector<std::string> generators, const std::vector<Bond>& bonds) {
    CoxeterDiagram d;
    const int n = static_cast<int>(generators.size());
    if (n == 0) throw Error(Errc::InvalidInput, "diagram has no generators");
    if (n > 32) throw Error(Errc::OutOfRange, "at most 32 generators are supported");
    d.names_ = std::move(generators);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j)
        if (d.names_[i] == d.names_[j]) throw Error(Errc::InvalidInput, "duplicate generator " + d.names_[i]);
    d.m_.assign(n, std::vector<int>(n, 2));
    d.adj_.assign(n, 0);
    for (int i = 0; i < n; ++i) d.m_[i][i] = 1;
    for (const Bond& b : bonds) {
      const int i = d.index_of(b.s), j = d.index_of(b.t);
      if (i == j) throw Error(Errc::InvalidInput, "bond from a generator to itself");
      if (b.m < 2) throw Error(Errc::InfiniteGroup, "bond multiplicity must be >= 2 (got " + std::to_string(b.m) + ")");
      d.m_[i][j] = d.m_[j][i] = b.m;
      if (b.m >= 3) {
        d.adj_[i] |= bit(j);
        d.adj_[j] |= bit(i);
      } else {
        d.adj_[i] &= ~bit(j);
        d.adj_[j] &= ~bit(i);
      }
    }
    d.finish();
    return d;
  }

  /// Parses `NAME RANK`, `I2(m)` and products joined by `x`, using the
  /// default linear orders.
  static CoxeterDiagram parse(const std::string& text);

  /// Explicit form `{"generators":[...], "bonds":[[s,t,m],...]}`.
  static CoxeterDiagram from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("generators"))
      throw Error(Errc::InvalidInput, "explicit diagram needs a generators list");
    auto as_name = [](const nlohmann::json& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    };
    std::vector<std::string> gens;
    for (const auto& g : j.at("generators")) gens.push_back(as_name(g));
    std::vector<Bond> bonds;
    if (j.contains("bonds"))
      for (const auto& b : j.at("bonds")) {
        if (!b.is_array() || b.size() != 3) throw Error(Errc::InvalidInput, "bond entries are [s,t,m]");
        bonds.push_back({as_name(b[0]), as_name(b[1]), b[2].get<int>()});
      }
    return from_bonds(std::move(gens), bonds);
  }

  /// Same Coxeter system with the generators listed in a new order.
  CoxeterDiagram with_order(const std::vector<std::string>& order) const {
    if (order.size() != names_.size()) throw Error(Errc::InvalidOrder, "order must list every generator once");
    std::vector<int> seen(rank(), 0);
    for (const auto& name : order) {
      const int i = index_of(name);
      if (seen[i]++) throw Error(Errc::InvalidOrder, "generator listed twice: " + name);
    }
    return from_bonds(order, bonds());
  }

  int rank() const { return static_cast<int>(names_.size()); }
  GenSet all() const { return full_set(rank()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_.at(i); }
  int bond(int i, int j) const { return m_[i][j]; }
  std::span<const GenSet> adjacency() const { return adj_; }
  GenSet neighbours_of(int i) const { return adj_[i]; }

  int index_of(const std::string& name) const {
    for (int i = 0; i < rank(); ++i)
      if (names_[i] == name) return i;
    throw Error(Errc::InvalidInput, "unknown generator " + name);
  }

  std::vector<Bond> bonds() const {
    std::vector<Bond> out;
    for (int i = 0; i < rank(); ++i)
      for (int j = i + 1; j < rank(); ++j)
        if (m_[i][j] != 2) out.push_back({names_[i], names_[j], m_[i][j]});
    return out;
  }

  /// Components of the whole diagram, in order, with their types.
  const std::vector<GenSet>& component_sets() const { return comps_; }
  const std::vector<IrreducibleType>& component_types() const { return types_; }
  const std::string& type_label() const { return label_; }

  BigInt order() const {
    BigInt o = 1;
    for (const auto& t : types_) o *= t.order();
    return o;
  }

  /// Type of the connected induced subdiagram on `comp`.
  IrreducibleType classify(GenSet comp) const;

  std::string format_set(GenSet s) const {
    std::string out = "{";
    bool first = true;
    for_each_bit(s, [&](int i) {
      if (!first) out += ",";
      out += names_[i];
      first = false;
    });
    return out + "}";
  }

 private:
  void finish() {
    const GenSet all_set = all();
    if (!is_forest(adj_, all_set)) throw Error(Errc::InfiniteGroup, "diagram contains a cycle");
    comps_ = components(adj_, all_set);
    types_.clear();
    label_.clear();
    for (GenSet c : comps_) {
      types_.push_back(classify(c));
      if (!label_.empty()) label_ += "x";
      label_ += types_.back().name();
    }
    for (GenSet c : comps_) {
      const GenSet span = full_set(highest(c) + 1) & ~full_set(lowest(c));
      if (span != c) throw Error(Errc::InvalidOrder, "components must occupy consecutive positions in the order");
    }
    if (!is_tree_compatible(adj_, all_set))
      throw Error(Errc::InvalidOrder, "generator order is not tree-compatible");
  }

  std::vector<std::string> names_;
  std::vector<std::vector<int>> m_;
  std::vector<GenSet> adj_;
  std::vector<GenSet> comps_;
  std::vector<IrreducibleType> types_;
  std::string label_;
};

inline IrreducibleType CoxeterDiagram::classify(GenSet comp) const {
  const int n = popcount(comp);
  auto infinite = [&](const std::string& why) {
    return Error(Errc::InfiniteGroup, format_set(comp) + ": " + why);
  };
  if (!is_connected(adj_, comp)) throw Error(Errc::InvalidInput, "classify needs a connected set");
  if (!is_forest(adj_, comp)) throw infinite("cycle");
  if (n == 1) return {'A', 1, 0};
  if (n == 2) {
    const int a = lowest(comp), b = highest(comp);
    const int m = m_[a][b];
    if (m == 3) return {'A', 2, 0};
    if (m == 4) return {'B', 2, 0};
    return {'I', 2, m};
  }
  std::vector<int> verts = elements(comp);
  int branch = -1, branches = 0;
  for (int v : verts) {
    const int deg = popcount(adj_[v] & comp);
    if (deg > 3) throw infinite("vertex of degree > 3");
    if (deg == 3) {
      branch = v;
      ++branches;
    }
  }
  std::vector<std::pair<int, int>> special;  // edges with m != 3
  for (int v : verts)
    for_each_bit(adj_[v] & comp, [&](int u) {
      if (u > v && m_[u][v] != 3) special.push_back({v, u});
    });
  if (branches > 1) throw infinite("more than one branch point");
  if (branches == 1) {
    if (!special.empty()) throw infinite("branched diagram with a bond > 3");
    std::vector<int> arms;
    for_each_bit(adj_[branch] & comp, [&](int start) {
      int len = 0, prev = branch, cur = start;
      while (true) {
        ++len;
        const GenSet next = adj_[cur] & comp & ~bit(prev);
        if (!next) break;
        prev = cur;
        cur = lowest(next);
      }
      arms.push_back(len);
    });
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {'D', n, 0};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', n, 0};
    throw infinite("branched diagram outside D/E");
  }
  if (special.empty()) return {'A', n, 0};
  if (special.size() > 1) throw infinite("path with two bonds > 3");
  const auto [a, b] = special.front();
  const int m = m_[a][b];
  const bool at_end = popcount(adj_[a] & comp) == 1 || popcount(adj_[b] & comp) == 1;
  if (m == 4 && at_end) return {'B', n, 0};
  if (m == 4 && n == 4) return {'F', 4, 0};
  if (m == 5 && at_end && n <= 4) return {'H', n, 0};
  throw infinite("path with bond " + std::to_string(m) + " outside B/F/H");
}

namespace detail {

/// Default order and bonds for one irreducible type, positions offset by `base`.
inline void append_default(const IrreducibleType& t, int base, std::vector<Bond>& bonds) {
  auto s = [&](int i) { return "s" + std::to_string(base + i + 1); };
  const int n = t.rank;
  switch (t.family) {
    case 'A':
    case 'B':
    case 'F':
    case 'H':
      for (int i = 0; i + 1 < n; ++i) {
        int m = 3;
        if ((t.family == 'B' && i == 0) || (t.family == 'F' && i == 1)) m = 4;
        if (t.family == 'H' && i == 0) m = 5;
        bonds.push_back({s(i), s(i + 1), m});
      }
      break;
    case 'D':
      bonds.push_back({s(0), s(2), 3});
      bonds.push_back({s(1), s(2), 3});
      for (int i = 2; i + 1 < n; ++i) bonds.push_back({s(i), s(i + 1), 3});
      break;
    case 'E':
      // Positions 0,1,2,3 are the Bourbaki vertices 1,3,2,4; the long arm follows.
      bonds.push_back({s(0), s(1), 3});
      bonds.push_back({s(1), s(3), 3});
      bonds.push_back({s(2), s(3), 3});
      for (int i = 3; i + 1 < n; ++i) bonds.push_back({s(i), s(i + 1), 3});
      break;
    case 'I':
      bonds.push_back({s(0), s(1), t.m});
      break;
  }
}

inline IrreducibleType parse_factor(std::string f) {
  auto bad = [&] { return Error(Errc::UnknownType, "cannot parse type '" + f + "'"); };
  if (f.empty()) throw bad();
  for (char& c : f) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (f.rfind("I2(", 0) == 0 && f.back() == ')') {
    const std::string digits = f.substr(3, f.size() - 4);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) throw bad();
    const int m = std::stoi(digits);
    if (m < 2) throw bad();
    return {'I', 2, m};
  }
  const char fam = f[0];
  const std::string digits = f.substr(1);
  if (digits.empty() || digits.size() > 2 || !std::all_of(digits.begin(), digits.end(), ::isdigit)) throw bad();
  const int n = std::stoi(digits);
  auto ok = [&](bool cond) {
    if (!cond) throw bad();
  };
  switch (fam) {
    case 'A': ok(n >= 1); break;
    case 'B': ok(n >= 2); break;
    case 'C': ok(n >= 2); return {'B', n, 0};
    case 'D': ok(n >= 4); break;
    case 'E': ok(n >= 6 && n <= 8); break;
    case 'F': ok(n == 4); break;
    case 'G': ok(n == 2); return {'I', 2, 6};
    case 'H': ok(n == 3 || n == 4); break;
    default: throw bad();
  }
  return {fam, n, 0};
}

}  // namespace detail

inline CoxeterDiagram CoxeterDiagram::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '{') return from_json(nlohmann::json::parse(s));
  std::vector<IrreducibleType> factors;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i < s.size() && s[i] == '(') ++depth;
    if (i < s.size() && s[i] == ')') --depth;
    if (i == s.size() || ((s[i] == 'x' || s[i] == 'X' || s[i] == '*') && depth == 0)) {
      factors.push_back(detail::parse_factor(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  std::vector<std::string> names;
  std::vector<Bond> bonds;
  int base = 0;
  for (const auto& t : factors) {
    detail::append_default(t, base, bonds);
    for (int i = 0; i < t.rank; ++i) names.push_back("s" + std::to_string(base + i + 1));
    base += t.rank;
  }
  return from_bonds(names, bonds);
}

/// |W_I| from the orders of the irreducible components of D[I].
inline BigInt parabolic_order(GenSet I, const CoxeterDiagram& d) {
  BigInt o = 1;
  for (GenSet c : components(d.adjacency(), I)) o *= d.classify(c).order();
  return o;
}

/// W_J is a standard k-parabolic subgroup: |J| = k-1 and D[J] connected.
inline bool is_k_parabolic_standard(GenSet J, int k, const CoxeterDiagram& d) {
  return popcount(J) == k - 1 && is_connected(d.adjacency(), J);
}

/// wW_I is a face of Perm_k(W): no connected subdiagram of I has k-1 vertices.
inline bool admissible(GenSet I, int k, const CoxeterDiagram& d) {
  return max_component_size(d.adjacency(), I) <= k - 2;
}

/// A uniformly chosen root per component and a random leaf-elimination
/// order; the result is again a valid (blocked, tree-compatible) order.
template <class Rng>
std::vector<std::string> random_tree_compatible_order(const CoxeterDiagram& d, Rng& rng) {
  std::vector<std::string> order;
  auto adj = d.adjacency();
  for (GenSet comp : d.component_sets()) {
    std::vector<int> verts = elements(comp);
    const int root = verts[std::uniform_int_distribution<std::size_t>(0, verts.size() - 1)(rng)];
    GenSet rest = comp;
    while (rest != bit(root)) {
      std::vector<int> leaves;
      for_each_bit(rest & ~bit(root), [&](int v) {
        if (popcount(adj[v] & rest) <= 1) leaves.push_back(v);
      });
      const int v = leaves[std::uniform_int_distribution<std::size_t>(0, leaves.size() - 1)(rng)];
      order.push_back(d.name(v));
      rest &= ~bit(v);
    }
    order.push_back(d.name(root));
  }
  return order;
}

}  // namespace coxmorse
