#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxmorse.hpp"

#ifndef COXMORSE_DATA_DIR
#define COXMORSE_DATA_DIR "data"
#endif

namespace coxmorse::cli {

using json = nlohmann::ordered_json;

struct RunConfig {
  std::string group;
  int k = 0;
  int t = -1;
  std::string method = "descent";
  std::uint64_t budget = 0;
  int threads = 1;
  std::string format = "json";
  std::string order;
  std::string out;
  std::string data;
  std::string graph;
  std::vector<std::string> roots;
  std::string export_prefix;
  std::size_t homology_cells = 6000;
};

/// Exit codes.
inline constexpr int kOk = 0, kDisagree = 1, kInvalid = 2;

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

inline CoxeterDiagram diagram_of(const RunConfig& c) {
  if (c.group.empty()) throw Error(Errc::InvalidInput, "--group is required");
  auto d = CoxeterDiagram::parse(c.group);
  if (!c.order.empty()) d = d.with_order(split(c.order, ','));
  return d;
}

inline json entries_json(const std::map<int, BigInt>& m) {
  json j = json::object();
  for (const auto& [d, v] : m) j[std::to_string(d)] = to_decimal(v);
  return j;
}

inline std::string entries_text(const std::map<int, BigInt>& m) {
  std::string s;
  for (const auto& [d, v] : m) s += (s.empty() ? "" : " ") + std::to_string(d) + ":" + to_decimal(v);
  return s.empty() ? "-" : s;
}

inline json fvector_json(const FVector& f) {
  json j = json::array();
  for (const auto& x : f) j.push_back(to_decimal(x));
  return j;
}

inline json gens_json(const CoxeterDiagram& d, GenSet s) {
  json j = json::array();
  for_each_bit(s, [&](int v) { j.push_back(d.name(v)); });
  return j;
}

/// A reduced word, read off by stripping right descents.
inline std::string reduced_word(const ElementTable& T, ElementTable::Id w) {
  std::vector<int> word;
  const auto& S = T.system();
  GroupElement g = T.element(w);
  while (g.length > 0) {
    const int s = lowest(S.descents(g));
    word.push_back(s);
    g = S.right_multiply(g, s);
  }
  std::string out;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out += (out.empty() ? "" : " ") + S.diagram().name(*it);
  return out.empty() ? "e" : out;
}

inline std::map<int, BigInt> restrict_t(const std::map<int, BigInt>& m, int k, int t) {
  if (t < 0) return m;
  const int dim = t * (k - 2);
  auto it = m.find(dim);
  return {{dim, it == m.end() ? BigInt(0) : it->second}};
}

/// Euler method, with descent counts filling in all but the lowest
/// dimension when the Euler characteristic alone is not enough.
inline std::map<int, BigInt> euler_with_supplement(const CoxeterDiagram& d, int k, std::vector<std::string>& flags) {
  try {
    return betti_from_euler(d, k);
  } catch (const Error& e) {
    if (e.code() != Errc::Underdetermined) throw;
  }
  const auto desc = betti_by_descent(d, k);
  const auto ts = possible_t(d, k);
  std::map<int, BigInt> known;
  std::string dims;
  for (std::size_t i = 1; i < ts.size(); ++i) {
    const int dim = ts[i] * (k - 2);
    auto it = desc.find(dim);
    known[dim] = it == desc.end() ? BigInt(0) : it->second;
    dims += (dims.empty() ? "" : ",") + std::to_string(dim);
  }
  flags.push_back("euler: dimensions " + dims + " supplied by descent counts");
  return betti_from_euler(d, k, known);
}

inline BigInt total_cells(const FVector& f) {
  BigInt s = 0;
  for (const auto& x : f) s += x;
  return s;
}

class Output {
 public:
  explicit Output(const RunConfig& c, std::ostream& fallback) : os_(&fallback) {
    if (!c.out.empty()) {
      file_.open(c.out);
      if (!file_) throw Error(Errc::InvalidInput, "cannot open " + c.out);
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

}  // namespace detail

inline int cmd_betti(const RunConfig& c, std::ostream& out) {
  const auto d = detail::diagram_of(c);
  if (c.k < 3 || c.k > d.rank()) throw Error(Errc::OutOfRange, "betti needs 3 <= k <= rank");
  coxmorse::detail::check_k(d, c.k);
  std::vector<std::string> flags;
  std::map<std::string, std::map<int, BigInt>> results;
  const std::string& m = c.method;
  static const std::vector<std::string> known{"matching", "descent", "formula", "euler", "homology", "all"};
  if (std::find(known.begin(), known.end(), m) == known.end()) throw Error(Errc::InvalidInput, "unknown method " + m);
  const bool all = m == "all";
  const FVector f = fvector_formula(d, c.k);
  const bool enumerable = d.order() <= BigInt(c.budget);
  if (all || m == "descent") results["descent"] = betti_by_descent(d, c.k);
  if (all || m == "euler") results["euler"] = detail::euler_with_supplement(d, c.k, flags);
  if (all || m == "formula") {
    auto r = betti_by_formula(d, c.k);
    if (r)
      results["formula"] = *r;
    else if (!all)
      throw Error(Errc::InvalidInput, "no closed form for " + d.type_label() + " with k=" + std::to_string(c.k));
  }
  if (m == "matching" || (all && enumerable)) {
    const auto T = ElementTable::enumerate(CoxeterSystem(d), c.budget);
    std::map<int, BigInt> r;
    const auto counts = critical_counts(*T, c.k);
    for (std::size_t i = 1; i < counts.size(); ++i)
      if (counts[i]) r[static_cast<int>(i)] = counts[i];
    results["matching"] = r;
  } else if (all) {
    flags.push_back("matching skipped: |W| exceeds the enumeration budget");
  }
  if (m == "homology" || (all && enumerable && detail::total_cells(f) <= c.homology_cells)) {
    const auto P = PermComplex::build(CoxeterSystem(d), c.k, c.budget);
    results["homology"] = betti_by_homology(P, &flags);
  } else if (all) {
    flags.push_back("homology skipped: complex too large for the order-complex oracle");
  }

  int code = kOk;
  std::map<int, BigInt> main;
  if (all) {
    main = results.at("descent");
    for (const auto& [name, r] : results) {
      if (r == main) continue;
      if (name == "formula") {
        flags.push_back("formula differs from descent: formula " + detail::entries_text(r) + ", descent " +
                        detail::entries_text(main));
      } else {
        flags.push_back("disagreement: " + name + " " + detail::entries_text(r) + " vs descent " +
                        detail::entries_text(main));
        code = kDisagree;
      }
    }
  } else {
    main = results.begin()->second;
  }

  if (c.format == "tsv") {
    for (const auto& [dim, v] : detail::restrict_t(main, c.k, c.t)) out << dim << '\t' << to_decimal(v) << '\n';
    for (const auto& fl : flags) out << "# " << fl << '\n';
  } else {
    json j;
    j["group"] = d.type_label();
    j["k"] = c.k;
    j["method"] = m;
    j["entries"] = detail::entries_json(detail::restrict_t(main, c.k, c.t));
    if (all) {
      json per = json::object();
      for (const auto& [name, r] : results) per[name] = detail::entries_json(detail::restrict_t(r, c.k, c.t));
      j["methods"] = per;
    }
    j["flags"] = flags;
    out << j.dump(2) << '\n';
  }
  return code;
}

inline int cmd_fvector(const RunConfig& c, std::ostream& out) {
  const auto d = detail::diagram_of(c);
  const FVector f = fvector_formula(d, c.k);
  std::vector<std::string> flags;
  bool enumerated = false;
  int code = kOk;
  if (c.method != "formula" && d.order() <= BigInt(c.budget)) {
    const auto P = PermComplex::build(CoxeterSystem(d), c.k, c.budget, false);
    enumerated = true;
    if (P.fvector() != f) {
      flags.push_back("enumerated f-vector differs from coset counting");
      code = kDisagree;
    }
  }
  if (c.format == "tsv") {
    for (std::size_t i = 0; i < f.size(); ++i) out << i << '\t' << to_decimal(f[i]) << '\n';
    out << "# reduced_euler " << to_decimal(reduced_euler(f)) << '\n';
  } else {
    json j;
    j["group"] = d.type_label();
    j["k"] = c.k;
    j["fvector"] = detail::fvector_json(f);
    j["reduced_euler"] = to_decimal(reduced_euler(f));
    j["enumerated"] = enumerated;
    j["flags"] = flags;
    out << j.dump(2) << '\n';
  }
  return code;
}

inline int cmd_critical(const RunConfig& c, std::ostream& out) {
  const auto d = detail::diagram_of(c);
  const auto P = PermComplex::build(CoxeterSystem(d), c.k, c.budget, false);
  const auto& T = P.table();
  for (std::uint32_t i = 0; i < P.size(); ++i) {
    const Cell& cell = P.cell(i);
    if (!match_coset(T.descents(cell.rep), cell.gens, c.k, d).critical()) continue;
    if (c.format == "tsv") {
      out << detail::reduced_word(T, cell.rep) << '\t' << d.format_set(cell.gens) << '\t' << cell.dim() << '\n';
    } else {
      json j;
      std::string key;
      for (auto x : T.images(cell.rep)) key += (key.empty() ? "" : ",") + std::to_string(x);
      j["w_key"] = key;
      j["word"] = detail::reduced_word(T, cell.rep);
      j["gens"] = detail::gens_json(d, cell.gens);
      j["dim"] = cell.dim();
      out << j.dump() << '\n';
    }
  }
  return kOk;
}

inline int cmd_verify(const RunConfig& c, std::ostream& out) {
  const auto d = detail::diagram_of(c);
  if (c.k < 3 || c.k > d.rank()) throw Error(Errc::OutOfRange, "verify needs 3 <= k <= rank");
  const auto P = PermComplex::build(CoxeterSystem(d), c.k, c.budget);
  const auto M = morse_matching(P);
  const auto M2 = fiber_matching(P);
  const bool involution = is_involution_on_covers(P.poset(), M);
  const bool acyclic = verify_acyclic(P.poset(), M);
  const bool same = M == M2;
  const bool predicate = predicted_critical_cells(P) == M.critical();
  bool boundary_zero = true;
  if (c.k == 3) {
    const auto mc = morse_chain_complex(P.poset(), M, cubical_incidence_of(P), false);
    for (const auto& b : mc.boundary) boundary_zero = boundary_zero && b.entries.empty();
  } else {
    // critical cells sit in dimensions t(k-2), never adjacent ones
    const auto crit = M.critical_by_dim(P.poset());
    for (std::size_t i = 2; i < crit.size(); ++i) boundary_zero = boundary_zero && !(crit[i] && crit[i - 1]);
  }
  const bool passed = involution && acyclic && same && predicate && boundary_zero;
  json j;
  j["group"] = d.type_label();
  j["k"] = c.k;
  j["cells"] = P.size();
  j["matched"] = M.matched_count();
  json by_dim = json::object();
  const auto crit = M.critical_by_dim(P.poset());
  for (std::size_t i = 0; i < crit.size(); ++i)
    if (crit[i]) by_dim[std::to_string(i)] = std::to_string(crit[i]);
  j["critical_by_dim"] = by_dim;
  j["involution"] = involution;
  j["acyclic"] = acyclic;
  j["m_equals_mprime"] = same;
  j["critical_matches_predicate"] = predicate;
  j["boundary_zero"] = boundary_zero;
  j["passed"] = passed;
  if (c.format == "tsv") {
    for (auto it = j.begin(); it != j.end(); ++it) out << it.key() << '\t' << it.value().dump() << '\n';
  } else {
    out << j.dump(2) << '\n';
  }
  return passed ? kOk : kDisagree;
}

inline int cmd_homology(const RunConfig& c, std::ostream& out) {
  const auto d = detail::diagram_of(c);
  const auto P = PermComplex::build(CoxeterSystem(d), c.k, c.budget);
  const auto cc = order_complex(P.poset(), true);
  if (!c.export_prefix.empty())
    for (int q = 1; q <= cc.top_dim(); ++q) {
      std::ofstream f(c.export_prefix + "_d" + std::to_string(q) + ".mtx");
      if (!f) throw Error(Errc::InvalidInput, "cannot write " + c.export_prefix);
      write_matrix_market(f, cc.boundary[q]);
    }
  const auto h = integral_homology(cc);
  json betti = json::object(), torsion = json::object();
  for (auto [dim, v] : h.nonzero()) betti[std::to_string(dim)] = std::to_string(v);
  for (std::size_t q = 0; q < h.torsion.size(); ++q)
    if (!h.torsion[q].empty()) {
      json t = json::array();
      for (const auto& x : h.torsion[q]) t.push_back(to_decimal(x));
      torsion[std::to_string(q)] = t;
    }
  if (c.format == "tsv") {
    for (auto [dim, v] : h.nonzero()) out << dim << '\t' << v << '\n';
    if (!h.torsion_free()) out << "# torsion present\n";
  } else {
    json j;
    j["group"] = d.type_label();
    j["k"] = c.k;
    j["cells"] = P.size();
    j["simplices"] = cc.cells;
    j["betti"] = betti;
    j["torsion"] = torsion;
    j["torsion_free"] = h.torsion_free();
    out << j.dump(2) << '\n';
  }
  return kOk;
}

inline int cmd_ind(const RunConfig& c, std::ostream& out) {
  std::ifstream in(c.graph);
  if (!in) throw Error(Errc::InvalidInput, "cannot read graph file " + c.graph);
  OrderedGraph g = parse_graph(in);
  if (!c.roots.empty()) g = reroot(g, c.roots);
  if (c.k < 0) throw Error(Errc::OutOfRange, "k must be nonnegative");
  auto fmt = [&](const std::vector<GenSet>& sets) {
    json a = json::array();
    for (GenSet s : sets) {
      json f = json::array();
      for_each_bit(s, [&](int v) { f.push_back(g.labels[v]); });
      a.push_back(f);
    }
    return a;
  };
  json j;
  j["vertices"] = g.n;
  j["k"] = c.k;
  const auto fs = facets(g, c.k);
  j["facets"] = fmt(fs);
  const auto simplices = faces(g, c.k, false);
  const auto h = integral_homology(simplicial_chain_complex(simplices, true));
  json hom = json::object();
  for (auto [dim, v] : h.nonzero()) hom[std::to_string(dim)] = std::to_string(v);
  j["homology"] = hom;
  j["torsion_free"] = h.torsion_free();
  std::vector<std::string> flags;
  int code = kOk;
  if (is_forest(g.adj, g.vertices) && is_tree_compatible(g.adj, g.vertices)) {
    const auto order = lex_shelling(g, c.k);
    const auto spanning = spanning_facets(g, c.k);
    const auto fixed = restriction_fixed_facets(order);
    const auto poset = ind_poset(g, c.k, true);
    const auto m = shelling_matching(poset, order);
    const bool valid = verify_shelling(order);
    const bool acyclic = is_involution_on_covers(poset.poset, m) && verify_acyclic(poset.poset, m);
    std::map<int, std::int64_t> by_dim;
    for (GenSet F : spanning) ++by_dim[popcount(F) - 1];
    j["shelling_valid"] = valid;
    j["spanning_facets"] = fmt(spanning);
    j["restriction_fixed"] = fmt(fixed);
    j["spanning_agree"] = spanning == fixed;
    j["matching_acyclic"] = acyclic;
    if (!valid) flags.push_back("lexicographic facet order is not a shelling for this graph");
    if (by_dim != h.nonzero()) flags.push_back("homology ranks differ from spanning facet counts");
    if (spanning != fixed || !acyclic || by_dim != h.nonzero()) code = kDisagree;
  } else {
    flags.push_back("graph is not a forest with a tree-compatible order; shelling checks skipped");
  }
  j["flags"] = flags;
  if (c.format == "tsv") {
    for (auto it = j.begin(); it != j.end(); ++it) out << it.key() << '\t' << it.value().dump() << '\n';
  } else {
    out << j.dump(2) << '\n';
  }
  return code;
}

struct AppendixRow {
  std::string group;
  int k = 0, i = 0;
  BigInt printed, computed;
  std::optional<BigInt> erratum;
  std::vector<std::string> erratum_methods;
  std::map<std::string, BigInt> methods;  // independent values for this row
  std::string status;                     // MATCH, ERRATUM, MISMATCH
};

inline json load_appendix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot read appendix data " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::InvalidInput, std::string("bad appendix data: ") + e.what());
  }
}

/// Recomputes every appendix row. The descent count is the reported value;
/// Euler (when determined) and the matching count (when |W| fits the
/// budget) are independent second opinions.
inline std::vector<AppendixRow> appendix_rows(const json& data, std::uint64_t budget) {
  std::vector<AppendixRow> rows;
  std::map<std::string, std::shared_ptr<const ElementTable>> tables;
  std::map<std::pair<std::string, int>, std::vector<std::uint64_t>> counts;
  for (const auto& r : data.at("rows")) {
    AppendixRow row;
    row.group = r.at("group").get<std::string>();
    row.k = r.at("k").get<int>();
    row.i = r.at("i").get<int>();
    row.printed = BigInt(r.at("value").get<std::string>());
    if (r.contains("erratum")) {
      row.erratum = BigInt(r["erratum"].at("value").get<std::string>());
      for (const auto& m : r["erratum"].at("methods")) row.erratum_methods.push_back(m.get<std::string>());
    }
    const auto d = CoxeterDiagram::parse(row.group);
    auto pick = [&](const std::map<int, BigInt>& m) {
      auto it = m.find(row.i);
      return it == m.end() ? BigInt(0) : it->second;
    };
    row.computed = pick(betti_by_descent(d, row.k));
    row.methods["descent"] = row.computed;
    try {
      row.methods["euler"] = pick(betti_from_euler(d, row.k));
    } catch (const Error& e) {
      if (e.code() != Errc::Underdetermined) throw;
    }
    if (d.order() <= BigInt(budget)) {
      auto& T = tables[row.group];
      if (!T) T = ElementTable::enumerate(CoxeterSystem(d), budget);
      auto key = std::make_pair(row.group, row.k);
      if (!counts.count(key)) counts[key] = critical_counts(*T, row.k);
      const auto& c = counts[key];
      row.methods["matching"] = row.i < static_cast<int>(c.size()) ? BigInt(c[row.i]) : BigInt(0);
    }
    bool consistent = true;
    for (const auto& [name, v] : row.methods) consistent = consistent && v == row.computed;
    if (row.computed == row.printed && consistent) {
      row.status = "MATCH";
    } else if (row.erratum && *row.erratum == row.computed && consistent) {
      int confirmed = 0;
      for (const auto& m : row.erratum_methods)
        if (row.methods.count(m) && row.methods[m] == row.computed) ++confirmed;
      row.status = confirmed >= 2 ? "ERRATUM" : "MISMATCH";
    } else {
      row.status = "MISMATCH";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline int cmd_appendix_check(const RunConfig& c, std::ostream& out) {
  const std::string path = c.data.empty() ? std::string(COXMORSE_DATA_DIR) + "/appendix.json" : c.data;
  const auto rows = appendix_rows(load_appendix(path), c.budget);
  int code = kOk;
  json arr = json::array();
  for (const auto& r : rows) {
    if (r.status == "MISMATCH") code = kDisagree;
    std::string methods;
    for (const auto& [name, v] : r.methods) methods += (methods.empty() ? "" : ",") + name;
    if (c.format == "json") {
      json j;
      j["group"] = r.group;
      j["k"] = r.k;
      j["i"] = r.i;
      j["computed"] = to_decimal(r.computed);
      j["appendix"] = to_decimal(r.printed);
      j["status"] = r.status == "MATCH" ? "MATCH" : "FLAG";
      j["erratum"] = r.status == "ERRATUM";
      json per = json::object();
      for (const auto& [name, v] : r.methods) per[name] = to_decimal(v);
      j["methods"] = per;
      arr.push_back(j);
    } else {
      out << r.group << "\tk=" << r.k << "\ti=" << r.i << "\tcomputed=" << to_decimal(r.computed)
          << "\tappendix=" << to_decimal(r.printed) << '\t'
          << (r.status == "MATCH" ? "MATCH" : r.status == "ERRATUM" ? "FLAG erratum" : "FLAG unexplained")
          << "\t[" << methods << "]\n";
    }
  }
  if (c.format == "json") out << arr.dump(2) << '\n';
  return code;
}

/// Parses the command line and runs one command; returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Topology of k-parabolic arrangement complements"};
  app.require_subcommand(1);
  RunConfig c;
  c.budget = 0;
  bool budget_given = false;
  auto common = [&](CLI::App* sub, bool with_group) {
    if (with_group) {
      sub->add_option("--group", c.group, "group: A3, B4, E6, H3, I2(5), A2xA1 or a JSON diagram")->required();
      sub->add_option("--k", c.k, "k")->required();
      sub->add_option("--order", c.order, "generator order, comma separated");
    }
    sub->add_option("--t", c.t, "only dimension t(k-2)");
    sub->add_option("--method", c.method, "matching|descent|formula|euler|homology|all");
    sub->add_option_function<std::uint64_t>("--budget", [&](const std::uint64_t& b) {
      c.budget = b;
      budget_given = true;
    }, "largest |W| that may be enumerated");
    sub->add_option("--threads", c.threads, "worker threads (0 = all cores)");
    sub->add_option("--format", c.format, "json|tsv")->check(CLI::IsMember({"json", "tsv"}));
    sub->add_option("--out", c.out, "write output to this file");
  };
  auto* betti = app.add_subcommand("betti", "reduced Betti numbers");
  common(betti, true);
  auto* fvec = app.add_subcommand("fvector", "f-vector of Perm_k(W)");
  common(fvec, true);
  auto* crit = app.add_subcommand("critical", "critical cells of the matching");
  common(crit, true);
  auto* verify = app.add_subcommand("verify", "audit the matching");
  common(verify, true);
  auto* hom = app.add_subcommand("homology", "order-complex homology of Perm_k(W)");
  common(hom, true);
  hom->add_option("--export", c.export_prefix, "write boundary matrices as PREFIX_dN.mtx");
  auto* ind = app.add_subcommand("ind", "generalized independence complex of a graph");
  common(ind, false);
  ind->add_option("--graph", c.graph, "graph file")->required();
  ind->add_option("--k", c.k, "k")->required();
  ind->add_option("--root", c.roots, "root vertex of a component (repeatable)");
  auto* app_check = app.add_subcommand("appendix-check", "compare against the exceptional-group table");
  common(app_check, false);
  app_check->add_option("--data", c.data, "appendix JSON");
  app_check->callback([&] {
    if (!app_check->count("--format")) c.format = "tsv";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kInvalid;
  }
  try {
    if (!budget_given) c.budget = default_budget();
    set_thread_count(c.threads);
    detail::Output o(c, out);
    if (betti->parsed()) return cmd_betti(c, o.stream());
    if (fvec->parsed()) return cmd_fvector(c, o.stream());
    if (crit->parsed()) return cmd_critical(c, o.stream());
    if (verify->parsed()) return cmd_verify(c, o.stream());
    if (hom->parsed()) return cmd_homology(c, o.stream());
    if (ind->parsed()) return cmd_ind(c, o.stream());
    if (app_check->parsed()) return cmd_appendix_check(c, o.stream());
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::vector<const char*> argv{"coxmorse"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace coxmorse::cli
