#include <gtest/gtest.h>

#include "coxmorse.hpp"

using namespace coxmorse;

namespace {

PermComplex build(const char* g, int k, bool covers = true) {
  return PermComplex::build(CoxeterSystem(CoxeterDiagram::parse(g)), k, 1'000'000, covers);
}

FVector fv(std::initializer_list<int> v) { return FVector(v.begin(), v.end()); }

}  // namespace

TEST(PermComplex, A3FVectorByHand) {
  // 24 vertices, 36 edges of the permutohedron, and the 6 squares from {s1,s3}
  const auto P = build("A3", 3);
  EXPECT_EQ(P.fvector(), fv({24, 36, 6}));
  EXPECT_EQ(fvector_formula(P.diagram(), 3), fv({24, 36, 6}));
  EXPECT_EQ(reduced_euler(P.fvector()), -7);
}

TEST(PermComplex, EnumerationAgreesWithCosetCounting) {
  for (auto [g, k] : std::vector<std::pair<const char*, int>>{
           {"A3", 3}, {"A4", 3}, {"A4", 4}, {"B3", 3}, {"D4", 3}, {"D4", 4}, {"H3", 3}, {"F4", 3}, {"A2xA2", 3}}) {
    const auto P = build(g, k, false);
    EXPECT_EQ(P.fvector(), fvector_formula(P.diagram(), k)) << g << " k=" << k;
  }
}

TEST(PermComplex, KnownFVectors) {
  EXPECT_EQ(fvector_formula(CoxeterDiagram::parse("B3"), 3), fv({48, 72, 12}));
  EXPECT_EQ(fvector_formula(CoxeterDiagram::parse("A4"), 4), fv({120, 240, 150, 20}));
  EXPECT_EQ(fvector_formula(CoxeterDiagram::parse("D4"), 3), fv({192, 384, 144, 24}));
  // k = 2 keeps only the vertices
  EXPECT_EQ(fvector_formula(CoxeterDiagram::parse("A3"), 2), fv({24}));
}

TEST(PermComplex, CellsAreAdmissibleCosets) {
  const auto P = build("B3", 3);
  const auto& T = P.table();
  for (const Cell& c : P.cells()) {
    EXPECT_TRUE(is_subset(c.gens, T.descents(c.rep)));
    EXPECT_TRUE(admissible(c.gens, 3, P.diagram()));
    EXPECT_EQ(T.max_rep(c.rep, c.gens), c.rep);
  }
  for (std::uint32_t i = 0; i < P.size(); ++i) EXPECT_EQ(P.index_of(P.cell(i).rep, P.cell(i).gens), i);
}

TEST(PermComplex, FacesAreCosetsOfSmallerParabolics) {
  const auto P = build("A4", 4);
  const auto& p = P.poset();
  for (std::uint32_t i = 0; i < P.size(); ++i) {
    const GenSet I = P.cell(i).gens;
    BigInt expected = 0;
    for_each_bit(I, [&](int s) { expected += parabolic_order(I, P.diagram()) / parabolic_order(I & ~bit(s), P.diagram()); });
    EXPECT_EQ(BigInt(p.facets[i].size()), expected);
    for (auto f : p.facets[i]) {
      EXPECT_EQ(popcount(P.cell(f).gens), P.cell(i).dim() - 1);
      EXPECT_TRUE(is_subset(P.cell(f).gens, P.cell(i).gens));
      // the face's coset is inside the cell's coset
      EXPECT_EQ(P.table().max_rep(P.cell(f).rep, P.cell(i).gens), P.cell(i).rep);
    }
  }
  EXPECT_TRUE(p.has_diamond_property());
}

TEST(PermComplex, CubicalBoundarySquaresToZero) {
  for (const char* g : {"A3", "B3", "H3", "D4", "A2xA1"}) {
    const auto P = build(g, 3);
    const auto& p = P.poset();
    for (std::uint32_t c = 0; c < P.size(); ++c) {
      if (P.cell(c).dim() < 2) continue;
      std::map<std::uint32_t, int> dd;
      for (auto f : p.facets[c])
        for (auto ff : p.facets[f]) dd[ff] += P.cubical_incidence(c, f) * P.cubical_incidence(f, ff);
      for (auto [cell, v] : dd) EXPECT_EQ(v, 0) << g;
    }
  }
}

TEST(PermComplex, Errors) {
  const CoxeterSystem A2(CoxeterDiagram::parse("A2"));
  EXPECT_THROW(PermComplex::build(A2, 3), Error);
  try {
    PermComplex::build(CoxeterSystem(CoxeterDiagram::parse("A1xA1xA1")), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyArrangement);
  }
  const auto P = build("A4", 4);
  try {
    P.cubical_incidence(1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotCubical);
  }
}

TEST(PermComplex, FiberListsCellsAtRepresentative) {
  const auto P = build("A3", 3);
  std::size_t total = 0;
  for (ElementTable::Id w = 0; w < P.table().size(); ++w) {
    auto [b, e] = P.fiber(w);
    for (auto i = b; i < e; ++i) EXPECT_EQ(P.cell(i).rep, w);
    total += e - b;
  }
  EXPECT_EQ(total, P.size());
}
