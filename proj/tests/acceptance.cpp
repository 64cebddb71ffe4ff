// Acceptance suite: one PASS/FAIL line per criterion, details indented.
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "cli.hpp"

using namespace coxmorse;

namespace {

struct Report {
  std::ostringstream detail;
  bool ok = true;
  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "    fail: " << what << '\n';
    }
  }
  void note(const std::string& what) { detail << "    " << what << '\n'; }
};

std::string text(const std::map<int, BigInt>& m) {
  std::string s;
  for (const auto& [d, v] : m) s += (s.empty() ? "" : " ") + std::to_string(d) + ":" + to_decimal(v);
  return s.empty() ? "-" : s;
}

std::map<int, BigInt> counts_map(const std::vector<std::uint64_t>& c) {
  std::map<int, BigInt> out;
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i]) out[static_cast<int>(i)] = c[i];
  return out;
}

std::map<int, BigInt> homology_map(const HomologyResult& h) {
  std::map<int, BigInt> out;
  for (auto [d, v] : h.nonzero()) out[d] = v;
  return out;
}

const std::vector<const char*> kEnumerable{"A3", "A4", "A5", "B3", "B4", "D4", "H3", "F4"};

bool homology_mandatory(const std::string& g, int k) {
  return (g == "A3" && k == 3) || (g == "A4" && (k == 3 || k == 4)) || (g == "B3" && k == 3) ||
         (g == "D4" && k == 3) || (g == "H3" && k == 3);
}

PermComplex build(const CoxeterDiagram& d, int k, bool covers = true) {
  return PermComplex::build(CoxeterSystem(d), k, 10'000'000, covers);
}

void appendix(Report& r) {
  const auto data = cli::load_appendix(std::string(COXMORSE_DATA_DIR) + "/appendix.json");
  int match = 0, rows = 0;
  for (const auto& row : data.at("rows")) {
    ++rows;
    const auto d = CoxeterDiagram::parse(row.at("group").get<std::string>());
    const int k = row.at("k").get<int>(), i = row.at("i").get<int>();
    const BigInt printed(row.at("value").get<std::string>());
    const auto desc = betti_by_descent(d, k);
    const BigInt got = desc.count(i) ? desc.at(i) : BigInt(0);
    if (got == printed) {
      ++match;
      continue;
    }
    std::string cross = "descent " + to_decimal(got);
    try {
      const auto e = betti_from_euler(d, k);
      cross += ", euler " + (e.count(i) ? to_decimal(e.at(i)) : std::string("0"));
    } catch (const Error&) {
      cross += ", euler underdetermined";
    }
    if (d.order() <= 3'000'000) {
      const auto T = ElementTable::enumerate(CoxeterSystem(d), 3'000'000);
      const auto c = critical_counts(*T, k);
      cross += ", matching " + std::to_string(i < static_cast<int>(c.size()) ? c[i] : 0);
    }
    r.check(false, row.at("group").get<std::string>() + " k=" + std::to_string(k) + " i=" + std::to_string(i) +
                       ": printed " + to_decimal(printed) + ", computed " + cross);
  }
  r.note(std::to_string(match) + "/" + std::to_string(rows) + " appendix rows reproduced exactly");
}

void four_way(Report& r) {
  int combos = 0, with_homology = 0;
  for (const char* g : kEnumerable) {
    const auto d = CoxeterDiagram::parse(g);
    const auto T = ElementTable::enumerate(CoxeterSystem(d), 100000);
    for (int k = 3; k <= d.rank(); ++k) {
      ++combos;
      const auto desc = betti_by_descent(d, k);
      const auto match = counts_map(critical_counts(*T, k));
      const std::string tag = std::string(g) + " k=" + std::to_string(k);
      r.check(desc == match, tag + ": descent " + text(desc) + " vs matching " + text(match));
      try {
        const auto e = betti_from_euler(d, k);
        r.check(e == desc, tag + ": euler " + text(e));
      } catch (const Error& e) {
        if (e.code() != Errc::Underdetermined) throw;
      }
      if (homology_mandatory(g, k)) {
        ++with_homology;
        const auto h = perm_homology(PermComplex::build(T, k));
        r.check(h.torsion_free(), tag + ": torsion in the order complex");
        r.check(homology_map(h) == desc, tag + ": homology " + text(homology_map(h)));
      }
    }
  }
  r.note(std::to_string(combos) + " (W,k) pairs, " + std::to_string(with_homology) + " with the SNF oracle");
}

void oracle_values(Report& r) {
  struct Case {
    const char* g;
    int k, dim;
    std::int64_t rank;
  };
  for (const auto& c : {Case{"A3", 3, 1, 7}, Case{"A4", 4, 2, 9}, Case{"B3", 3, 1, 13}, Case{"D4", 3, 1, 73},
                        Case{"H3", 3, 1, 31}}) {
    const auto d = CoxeterDiagram::parse(c.g);
    const auto h = perm_homology(build(d, c.k));
    const std::string tag = std::string(c.g) + " k=" + std::to_string(c.k);
    r.check(h.nonzero() == std::map<int, std::int64_t>{{c.dim, c.rank}}, tag + ": wrong homology");
    r.check(h.torsion_free(), tag + ": torsion");
    for (auto [dim, v] : h.nonzero()) r.check(dim % (c.k - 2) == 0, tag + ": homology outside t(k-2)");
    r.note(tag + ": H~" + std::to_string(c.dim) + " = Z^" + std::to_string(c.rank));
  }
}

void soundness(Report& r) {
  std::mt19937_64 rng(5);
  for (const char* g : kEnumerable) {
    const auto d = CoxeterDiagram::parse(g);
    const auto T = ElementTable::enumerate(CoxeterSystem(d), 100000);
    // a second, different tree-compatible order
    auto names = d.names();
    std::vector<std::string> other;
    for (int tries = 0; tries < 100; ++tries) {
      other = random_tree_compatible_order(d, rng);
      if (other != names) break;
    }
    r.check(other != names, std::string(g) + ": no second order found");
    const auto T2 = ElementTable::enumerate(CoxeterSystem(d.with_order(other)), 100000);
    for (int k = 3; k <= d.rank(); ++k) {
      const auto P = PermComplex::build(T, k);
      const auto M = morse_matching(P);
      const std::string tag = std::string(g) + " k=" + std::to_string(k);
      r.check(is_involution_on_covers(P.poset(), M), tag + ": not an involution on covers");
      r.check(verify_acyclic(P.poset(), M), tag + ": cyclic");
      r.check(M == fiber_matching(P), tag + ": M differs from M'");
      r.check(M.critical() == predicted_critical_cells(P), tag + ": critical set differs from the predicate");
      r.check(critical_counts(*T2, k) == critical_counts(P), tag + ": counts change with the order");
    }
  }
}

void optimality(Report& r) {
  std::size_t pairs = 0, paths = 0;
  for (const char* g : {"A3", "A4", "B3", "H3"}) {
    const auto P = build(CoxeterDiagram::parse(g), 3);
    const auto M = morse_matching(P);
    const auto inc = cubical_incidence_of(P);
    const auto crit = M.critical();
    for (auto s : crit)
      for (auto t : crit)
        if (P.cell(s).dim() == P.cell(t).dim() + 1) {
          ++pairs;
          r.check(morse_boundary_by_paths(P.poset(), M, inc, s, t) == 0, std::string(g) + ": nonzero Morse boundary");
        }
    const auto& T = P.table();
    for (std::uint32_t c = 0; c < P.size(); ++c) {
      const Cell& cell = P.cell(c);
      const int m = match_coset(T.descents(cell.rep), cell.gens, 3, P.diagram()).threshold();
      for_each_bit(cell.gens, [&](int s) {
        if (s > m) return;
        ++paths;
        const auto p = block_path(P, M, c, s, false);
        const auto q = block_path(P, M, c, s, true);
        r.check(p.cells.back() == q.cells.back(), std::string(g) + ": paths end apart");
        r.check(p.weight + q.weight == 0, std::string(g) + ": path weights do not cancel");
        r.check(is_alternating(P.poset(), M, p.cells) && is_alternating(P.poset(), M, q.cells),
                std::string(g) + ": path not alternating");
      });
    }
  }
  r.note(std::to_string(pairs) + " critical pairs, " + std::to_string(paths) + " (cell, s) path pairs");
}

void ind_suite(Report& r) {
  auto g = OrderedGraph::from_edges(9, {{0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 7}, {5, 7}, {6, 7}, {7, 8}});
  auto sp = spanning_facets(g, 3);
  std::sort(sp.begin(), sp.end());
  std::vector<GenSet> want{bit(1) | bit(2) | bit(3) | bit(6) | bit(7) | bit(8), bit(3) | bit(4) | bit(7)};
  std::sort(want.begin(), want.end());
  r.check(sp == want, "9-vertex example: wrong spanning facets");
  const auto h9 = integral_homology(simplicial_chain_complex(faces(g, 3, false), true));
  r.check(h9.nonzero() == std::map<int, std::int64_t>{{2, 1}, {5, 1}} && h9.torsion_free(),
          "9-vertex example: homology is not Z in degrees 2 and 5");

  std::mt19937_64 rng(99);
  int forests = 0, not_shelling = 0;
  std::string first_bad;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12), k = 1 + static_cast<int>(rng() % 4);
    const auto f = random_forest(n, rng, 0.25);
    ++forests;
    const auto order = lex_shelling(f, k);
    if (!verify_shelling(order)) {
      ++not_shelling;
      if (first_bad.empty()) {
        std::ostringstream os;
        os << "n=" << n << " k=" << k << " edges";
        for (int u = 0; u < n; ++u)
          for_each_bit(f.adj[u], [&](int v) {
            if (v > u) os << ' ' << u + 1 << '-' << v + 1;
          });
        first_bad = os.str();
      }
    }
    auto s = spanning_facets(f, k), fx = restriction_fixed_facets(order);
    std::sort(s.begin(), s.end());
    std::sort(fx.begin(), fx.end());
    r.check(s == fx, "forest trial " + std::to_string(trial) + ": spanning facets differ from fixed points");
    std::map<int, std::int64_t> by_dim;
    for (GenSet F : s) ++by_dim[popcount(F) - 1];
    const auto h = integral_homology(simplicial_chain_complex(faces(f, k, false), true));
    r.check(h.nonzero() == by_dim, "forest trial " + std::to_string(trial) + ": homology differs from spanning counts");
    const auto P = ind_poset(f, k, true);
    const auto m = shelling_matching(P, order);
    r.check(is_involution_on_covers(P.poset, m) && verify_acyclic(P.poset, m),
            "forest trial " + std::to_string(trial) + ": shelling matching is not acyclic");
  }
  r.check(not_shelling == 0, std::to_string(not_shelling) + "/" + std::to_string(forests) +
                                 " lexicographic orders are not shellings, e.g. " + first_bad);
  r.note(std::to_string(forests) + " random forests; spanning facets, homology and matchings checked on all");
}

void closed_forms(Report& r) {
  std::ostringstream report;
  int disagreements = 0, reported = 0;
  for (int n = 3; n <= 6; ++n) {
    const auto d = CoxeterDiagram::parse("A" + std::to_string(n));
    const auto T = ElementTable::enumerate(CoxeterSystem(d), 100000);
    for (int k = 3; k <= n; ++k) {
      const auto match = critical_counts(*T, k);
      for (int t = 1; t <= n; ++t) {
        const int dim = t * (k - 2);
        const BigInt oracle = dim < static_cast<int>(match.size()) ? BigInt(match[dim]) : BigInt(0);
        const BigInt f = betti_type_A(n, k, t);
        r.check(f == oracle && betti_descent_count(d, k, t) == oracle,
                "A" + std::to_string(n) + " k=" + std::to_string(k) + " t=" + std::to_string(t) + ": formula " +
                    to_decimal(f) + " vs oracle " + to_decimal(oracle));
      }
    }
  }
  auto compare = [&](const std::string& g, int k, int t, const BigInt& formula) {
    const auto d = CoxeterDiagram::parse(g);
    const BigInt oracle = betti_descent_count(d, k, t);
    if (formula == oracle) return;
    ++disagreements;
    std::string resolution = "descent " + to_decimal(oracle);
    const auto T = ElementTable::enumerate(CoxeterSystem(d), 100000);
    const auto c = critical_counts(*T, k);
    const int dim = t * (k - 2);
    const BigInt m = dim < static_cast<int>(c.size()) ? BigInt(c[dim]) : BigInt(0);
    resolution += ", matching " + to_decimal(m);
    bool confirmed = m == oracle;
    const BigInt cells = [&] {
      BigInt s = 0;
      for (const auto& x : fvector_formula(d, k)) s += x;
      return s;
    }();
    if (cells <= 2000) {
      const auto h = homology_map(perm_homology(PermComplex::build(T, k)));
      const BigInt hv = h.count(dim) ? h.at(dim) : BigInt(0);
      resolution += ", homology " + to_decimal(hv);
      confirmed = confirmed && hv == oracle;
    }
    report << g << " k=" << k << " t=" << t << ": formula " << to_decimal(formula) << ", " << resolution
           << (confirmed ? "; oracle value stands" : "; UNRESOLVED") << '\n';
    ++reported;
    r.check(confirmed, g + " k=" + std::to_string(k) + " t=" + std::to_string(t) + " unresolved");
  };
  for (int n = 3; n <= 5; ++n)
    for (int k = 3; k <= n; ++k)
      for (int t = 1; t * (k - 2) <= n; ++t) compare("B" + std::to_string(n), k, t, betti_type_B(n, k, t));
  for (int n = 4; n <= 6; ++n)
    for (int t = 1; t <= n; ++t) compare("D" + std::to_string(n), 3, t, betti_type_D3(n, t));

  const std::string path = "discrepancy_report.txt";
  std::ofstream(path) << report.str();
  std::ifstream back(path);
  std::string line;
  int lines = 0;
  while (std::getline(back, line)) ++lines;
  r.check(lines == reported && reported == disagreements, "discrepancy report is missing entries");
  // the two anticipated cases must be among them
  const std::string all = report.str();
  r.check(all.find("B3 k=3 t=1: formula 10") != std::string::npos, "B3 k=3 not reported");
  r.check(all.find("D4 k=3 t=1: formula 68") != std::string::npos, "D4 k=3 not reported");
  r.note(std::to_string(disagreements) + " B/D formula disagreements, all in " + path + ":");
  std::istringstream in(all);
  while (std::getline(in, line)) r.note("  " + line);
}

void set_compositions_agree(Report& r) {
  for (auto [g, k] : std::vector<std::pair<const char*, int>>{{"A3", 3}, {"A4", 4}}) {
    const auto P = build(CoxeterDiagram::parse(g), k);
    const auto M = morse_matching(P);
    std::size_t checked = 0;
    for (std::uint32_t c = 0; c < P.size(); ++c) {
      const auto comp = cell_to_composition(P, c);
      const auto image = match_set_composition(comp, k);
      const std::int64_t expect = M.matched(c) ? M.partner[c] : c;
      r.check(composition_to_cell(P, comp) == c, std::string(g) + ": bijection does not round-trip");
      r.check(composition_to_cell(P, image) == expect, std::string(g) + ": matchings differ");
      ++checked;
    }
    r.note(std::string(g) + " k=" + std::to_string(k) + ": " + std::to_string(checked) + " cells");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*run)(Report&);
  };
  const Criterion criteria[] = {
      {"1 appendix reproduction (descent method)", appendix},
      {"2 four-way method agreement", four_way},
      {"3 oracle homology values", oracle_values},
      {"4 matching soundness", soundness},
      {"5 k=3 optimality", optimality},
      {"6 Ind_k suite", ind_suite},
      {"7 closed forms verified and flagged", closed_forms},
      {"8 type A set-composition bijection", set_compositions_agree},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Report r;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(r);
    } catch (const std::exception& e) {
      r.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (r.ok ? "PASS " : "FAIL ") << c.name << " (" << std::fixed << std::setprecision(1) << secs << "s)\n"
              << r.detail.str() << std::flush;
    failed += !r.ok;
  }
  std::cout << (8 - failed) << "/8 criteria pass\n";
  return failed ? 1 : 0;
}
