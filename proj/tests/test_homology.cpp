#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "coxmorse.hpp"

using namespace coxmorse;

namespace {

std::vector<GenSet> closure(const std::vector<std::vector<int>>& facets) {
  std::set<GenSet> all;
  for (const auto& f : facets) {
    GenSet s = 0;
    for (int v : f) s |= bit(v);
    for (GenSet sub = s; sub; sub = (sub - 1) & s) all.insert(sub);
  }
  return {all.begin(), all.end()};
}

using Dense = std::vector<std::vector<std::int64_t>>;

std::vector<std::int64_t> ints(const std::vector<BigInt>& v) {
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(static_cast<std::int64_t>(x));
  return out;
}

}  // namespace

TEST(Snf, SmallMatrices) {
  EXPECT_EQ(ints(smith_normal_form(Dense{{2, 4}, {6, 8}})), (std::vector<std::int64_t>{2, 4}));
  EXPECT_EQ(ints(smith_normal_form(Dense{{0, 0}, {0, 0}})), std::vector<std::int64_t>{});
  EXPECT_EQ(ints(smith_normal_form(Dense{{6, 0}, {0, 4}})), (std::vector<std::int64_t>{2, 12}));
  EXPECT_EQ(ints(smith_normal_form(Dense{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})), (std::vector<std::int64_t>{1, 3}));
  EXPECT_EQ(ints(smith_normal_form(Dense{{-3}})), (std::vector<std::int64_t>{3}));
}

TEST(Snf, DivisibilityChainOnRandomMatrices) {
  std::uint64_t x = 12345;
  auto next = [&] {
    x = x * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::int64_t>((x >> 33) % 7) - 3;
  };
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<std::int64_t>> m(5, std::vector<std::int64_t>(6));
    for (auto& row : m)
      for (auto& v : row) v = next();
    const auto d = smith_normal_form(m);
    for (std::size_t i = 1; i < d.size(); ++i) EXPECT_EQ(d[i] % d[i - 1], 0);
    for (const auto& v : d) EXPECT_GT(v, 0);
  }
}

TEST(Homology, Spheres) {
  // boundary of the tetrahedron
  const auto s2 = closure({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  EXPECT_EQ(integral_homology(simplicial_chain_complex(s2, true)).nonzero(), (std::map<int, std::int64_t>{{2, 1}}));
  const auto unreduced = integral_homology(simplicial_chain_complex(s2, false));
  EXPECT_EQ(unreduced.nonzero(), (std::map<int, std::int64_t>{{0, 1}, {2, 1}}));
  EXPECT_EQ(unreduced.euler(), 2);
  // two points
  EXPECT_EQ(integral_homology(simplicial_chain_complex(closure({{0}, {1}}), true)).nonzero(),
            (std::map<int, std::int64_t>{{0, 1}}));
}

TEST(Homology, ProjectivePlaneHasTorsion) {
  const auto rp2 = closure({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 6, 2},
                            {2, 3, 5}, {3, 4, 6}, {4, 5, 2}, {5, 6, 3}, {6, 2, 4}});
  const auto h = integral_homology(simplicial_chain_complex(rp2, true));
  EXPECT_TRUE(h.nonzero().empty());
  ASSERT_EQ(h.torsion.size(), 3u);
  EXPECT_EQ(ints(h.torsion[1]), std::vector<std::int64_t>{2});
  EXPECT_FALSE(h.torsion_free());
}

TEST(Homology, RejectsInvalidComplexes) {
  ChainComplex c;
  c.cells = {2, 1};
  c.boundary.resize(2);
  c.boundary[1] = SparseMatrix::from_dense({{1}, {1}});
  c.reduced = true;
  try {
    integral_homology(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BoundaryConditionViolated);
  }
  c.boundary[1] = SparseMatrix::from_dense({{1, -1}});
  try {
    integral_homology(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionMismatch);
  }
}

TEST(Homology, PermComplexOracleValues) {
  struct Case {
    const char* g;
    int k, dim;
    std::int64_t rank;
  };
  for (const auto& c : {Case{"A3", 3, 1, 7}, Case{"A4", 4, 2, 9}, Case{"B3", 3, 1, 13}, Case{"H3", 3, 1, 31},
                        Case{"A4", 3, 1, 31}}) {
    const auto P = PermComplex::build(CoxeterSystem(CoxeterDiagram::parse(c.g)), c.k, 100000);
    const auto h = perm_homology(P);
    EXPECT_EQ(h.nonzero(), (std::map<int, std::int64_t>{{c.dim, c.rank}})) << c.g;
    EXPECT_TRUE(h.torsion_free());
    // Euler characteristic of the order complex agrees with the cell count
    EXPECT_EQ(BigInt(h.euler()), reduced_euler(P.fvector())) << c.g;
  }
}

TEST(Homology, MatrixMarketExport) {
  SparseMatrix m = SparseMatrix::from_dense({{1, 0}, {0, -2}});
  std::ostringstream os;
  write_matrix_market(os, m);
  EXPECT_EQ(os.str(), "%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 1 1\n2 2 -2\n");
}

TEST(Homology, OrderComplexOfASquare) {
  // the face poset of a filled square is contractible; without the face it is a circle
  FacePoset p;
  p.dim = {0, 0, 0, 0, 1, 1, 1, 1, 2};
  p.facets.assign(9, {});
  for (std::uint32_t i = 0; i < 4; ++i) p.facets[4 + i] = {i, (i + 1) % 4};
  p.facets[8] = {4, 5, 6, 7};
  p.build_cofacets();
  EXPECT_TRUE(integral_homology(order_complex(p, true)).nonzero().empty());
  p.dim.pop_back();
  p.facets.pop_back();
  p.build_cofacets();
  EXPECT_EQ(integral_homology(order_complex(p, true)).nonzero(), (std::map<int, std::int64_t>{{1, 1}}));
}
