#include <gtest/gtest.h>

#include <random>

#include "coxmorse.hpp"

using namespace coxmorse;

namespace {

PermComplex build(const CoxeterDiagram& d, int k) { return PermComplex::build(CoxeterSystem(d), k, 1'000'000); }
PermComplex build(const char* g, int k) { return build(CoxeterDiagram::parse(g), k); }

std::map<int, std::size_t> critical_map(const PermComplex& P, const Matching& m) {
  std::map<int, std::size_t> out;
  for (auto c : m.critical()) ++out[P.cell(c).dim()];
  return out;
}

}  // namespace

TEST(Morse, A3MatchingIsAcyclicWithSevenCriticalEdges) {
  const auto P = build("A3", 3);
  const auto M = morse_matching(P);
  EXPECT_TRUE(is_involution_on_covers(P.poset(), M));
  EXPECT_TRUE(verify_acyclic(P.poset(), M));
  EXPECT_EQ(critical_map(P, M), (std::map<int, std::size_t>{{0, 1}, {1, 7}}));
  // the identity is the critical vertex
  for (auto c : M.critical())
    if (P.cell(c).dim() == 0) {
      EXPECT_EQ(P.cell(c).rep, P.table().identity());
    }
}

TEST(Morse, SoundnessAcrossGroups) {
  for (auto [g, k] : std::vector<std::pair<const char*, int>>{
           {"A3", 3}, {"A4", 3}, {"A4", 4}, {"B3", 3}, {"B4", 4}, {"D4", 3}, {"D4", 4}, {"H3", 3}, {"A2xA2", 3}}) {
    const auto P = build(g, k);
    const auto M = morse_matching(P);
    EXPECT_TRUE(is_involution_on_covers(P.poset(), M)) << g << k;
    EXPECT_TRUE(verify_acyclic(P.poset(), M)) << g << k;
    EXPECT_EQ(M, fiber_matching(P)) << g << k;
    EXPECT_EQ(M.critical(), predicted_critical_cells(P)) << g << k;
    std::vector<std::uint64_t> counts(P.poset().max_dim() + 1, 0);
    for (auto c : M.critical()) ++counts[P.cell(c).dim()];
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    EXPECT_EQ(critical_counts(P), counts);
    EXPECT_EQ(critical_counts(P.table(), k), counts);
  }
}

TEST(Morse, KTwoLeavesEveryVertexCritical) {
  const auto P = build("B3", 2);
  EXPECT_EQ(P.size(), 48u);
  const auto M = morse_matching(P);
  EXPECT_EQ(M.critical().size(), 48u);
  EXPECT_EQ(predicted_critical_cells(P).size(), 48u);
}

TEST(Morse, CountsDoNotDependOnTheOrder) {
  std::mt19937_64 rng(11);
  for (const char* g : {"D4", "F4", "A5"}) {
    const auto d = CoxeterDiagram::parse(g);
    const auto base = critical_counts(*ElementTable::enumerate(CoxeterSystem(d), 100000), 3);
    for (int i = 0; i < 3; ++i) {
      const auto o = d.with_order(random_tree_compatible_order(d, rng));
      EXPECT_EQ(critical_counts(*ElementTable::enumerate(CoxeterSystem(o), 100000), 3), base) << g;
    }
  }
}

TEST(Morse, CyclicMatchingIsRejected) {
  // a square: vertices 0..3, edges 4..7 (edge 4+i joins i and i+1), face 8
  FacePoset p;
  p.dim = {0, 0, 0, 0, 1, 1, 1, 1, 2};
  p.facets.assign(9, {});
  for (std::uint32_t i = 0; i < 4; ++i) p.facets[4 + i] = {i, (i + 1) % 4};
  p.facets[8] = {4, 5, 6, 7};
  p.build_cofacets();
  Matching good = Matching::empty(9);
  good.pair(1, 4);
  good.pair(2, 5);
  good.pair(3, 6);
  good.pair(7, 8);
  EXPECT_TRUE(verify_acyclic(p, good));
  // every vertex paired with the edge leaving it: the pairs chase each other round the square
  Matching swapped = Matching::empty(9);
  swapped.pair(0, 4);
  swapped.pair(1, 5);
  swapped.pair(2, 6);
  swapped.pair(3, 7);
  EXPECT_TRUE(is_involution_on_covers(p, swapped));
  EXPECT_FALSE(verify_acyclic(p, swapped));
}

TEST(Morse, MatchCosetTiny) {
  const auto d = CoxeterDiagram::parse("A3");
  // identity vertex: nothing to add
  EXPECT_TRUE(match_coset(0, 0, 3, d).critical());
  // a descent in I is removed first
  const auto r = match_coset(bit(0), bit(0), 3, d);
  EXPECT_EQ(r.gens, 0u);
  EXPECT_EQ(r.moved, 0);
  EXPECT_EQ(match_coset(bit(0), 0, 3, d).gens, bit(0));
  EXPECT_EQ(min_parabolic_completion(0, 1, 3, d), std::nullopt);
  EXPECT_EQ(min_parabolic_completion(bit(2), 1, 3, d), bit(2));
  EXPECT_EQ(min_parabolic_completion(bit(0) | bit(2), 1, 3, d), bit(0));
}

TEST(Morse, KThreeBoundaryVanishes) {
  for (const char* g : {"A3", "B3", "H3", "A4"}) {
    const auto P = build(g, 3);
    const auto M = morse_matching(P);
    const auto inc = cubical_incidence_of(P);
    const auto crit = M.critical();
    for (auto s : crit)
      for (auto t : crit)
        if (P.cell(s).dim() == P.cell(t).dim() + 1) {
          EXPECT_EQ(morse_boundary_by_paths(P.poset(), M, inc, s, t), 0) << g;
        }
    const auto mc = morse_chain_complex(P.poset(), M, inc, false);
    for (const auto& b : mc.boundary) EXPECT_TRUE(b.entries.empty()) << g;
  }
}

TEST(Morse, BlockPathsEndTogetherAndCancel) {
  for (const char* g : {"A3", "B3", "H3", "A4", "D4"}) {
    const auto P = build(g, 3);
    const auto M = morse_matching(P);
    const auto& T = P.table();
    int pairs = 0;
    for (std::uint32_t c = 0; c < P.size(); ++c) {
      const Cell& cell = P.cell(c);
      const int m = match_coset(T.descents(cell.rep), cell.gens, 3, P.diagram()).threshold();
      for_each_bit(cell.gens, [&](int s) {
        if (s > m) return;
        const auto p = block_path(P, M, c, s, false);
        const auto q = block_path(P, M, c, s, true);
        EXPECT_EQ(p.cells.back(), q.cells.back()) << g;
        EXPECT_EQ(p.weight + q.weight, 0) << g;
        EXPECT_TRUE(is_alternating(P.poset(), M, p.cells)) << g;
        EXPECT_TRUE(is_alternating(P.poset(), M, q.cells)) << g;
        ++pairs;
      });
    }
    EXPECT_GT(pairs, 0);
  }
}

TEST(Morse, BlockPathErrors) {
  const auto P = build("A3", 3);
  const auto M = morse_matching(P);
  std::uint32_t vertex = 0;
  try {
    block_path(P, M, vertex, 0, false);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidGenerator);
  }
  const auto Q = build("A4", 4);
  EXPECT_THROW(block_path(Q, morse_matching(Q), 0, 0, false), Error);
}

TEST(SetCompositions, CountsAndBlockLimit) {
  // singletons only: 4!; one pair: C(4,2) * 3!; two pairs: 3 splittings * 2!
  const std::size_t expected = 24 + 6 * 6 + 3 * 2;
  EXPECT_EQ(set_compositions(4, 2).size(), expected);
  EXPECT_THROW(match_set_composition({{1, 2, 3}, {4}}, 3), Error);
  try {
    match_set_composition({{4, 3, 2}, {1}}, 3);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BlockTooLarge);
  }
}

TEST(SetCompositions, AgreeWithCosetMatching) {
  for (auto [g, k] : std::vector<std::pair<const char*, int>>{{"A3", 3}, {"A4", 4}, {"A4", 3}}) {
    const auto P = build(g, k);
    const auto M = morse_matching(P);
    const int n = P.diagram().rank() + 1;
    EXPECT_EQ(set_compositions(n, k - 1).size(), P.size());
    for (std::uint32_t c = 0; c < P.size(); ++c) {
      const auto comp = cell_to_composition(P, c);
      ASSERT_EQ(composition_to_cell(P, comp), c);
      const auto image = match_set_composition(comp, k);
      const std::int64_t expect = M.matched(c) ? M.partner[c] : c;
      ASSERT_EQ(composition_to_cell(P, image), expect) << g << " cell " << c;
    }
  }
}
