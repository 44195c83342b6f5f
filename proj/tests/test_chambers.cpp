#include "tpoly/chambers.hpp"

#include <gtest/gtest.h>

#include "tpoly/catalogue.hpp"

using namespace tpoly;

namespace {

Rational Q(long n) { return Rational(n); }
Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (auto x : xs) v.push_back(Q(x));
  return v;
}

TEST(GaleTransform, TwoByThreeMatchesPrintedRowSpace) {
  Matrix a{{1, 1, 1, 0, 0, 0},
           {0, 0, 0, 1, 1, 1},
           {1, 0, 0, 1, 0, 0},
           {0, 1, 0, 0, 1, 0}};
  Matrix g = gale_transform(a);
  ASSERT_EQ(g.rows(), 2u);
  ASSERT_EQ(g.cols(), 6u);
  Matrix b{{1, -1, 0, -1, 1, 0}, {1, 0, -1, -1, 0, 1}};
  Matrix stacked(4, 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 6; ++j) {
      stacked(i, j) = g(i, j);
      stacked(2 + i, j) = b(i, j);
    }
  EXPECT_EQ(rank(stacked), 2u);
}

TEST(GaleTransform, SquareInvertibleGivesEmpty) {
  EXPECT_EQ(gale_transform(Matrix::identity(3)).rows(), 0u);
}

TEST(GaleTransform, RequiresFullRowRank) {
  Matrix a{{1, 0}, {1, 0}};
  EXPECT_THROW(gale_transform(a), TpolyError);
}

TEST(Chambers, TwoByThreeHasEighteen) {
  auto fam = family_config(Kind::Classical, 2, 3);
  auto cc = enumerate_chambers(fam.reduced);
  EXPECT_EQ(cc.chambers.size(), 18u);
  // Signatures are pairwise distinct and reproduced by representatives.
  std::set<std::vector<std::int8_t>> sigs;
  for (const auto& ch : cc.chambers) {
    sigs.insert(ch.signature);
    for (std::size_t w = 0; w < cc.walls.normals.size(); ++w) {
      int s = sign(cc.walls.eval(w, ch.representative));
      EXPECT_EQ(s, ch.signature[w]);
    }
  }
  EXPECT_EQ(sigs.size(), 18u);
}

TEST(Chambers, RankOneConfiguration) {
  Matrix a{{1, 1, 1}};
  auto cc = enumerate_chambers(a);
  EXPECT_EQ(cc.chambers.size(), 1u);
}

TEST(Chambers, BasisCountMatchesVertexCount) {
  auto fam = family_config(Kind::Classical, 2, 3);
  auto cc = enumerate_chambers(fam.reduced);
  std::set<std::size_t> f0s;
  for (const auto& ch : cc.chambers) {
    EXPECT_EQ(chamber_basis_count(fam.reduced, ch), ch.basis_count);
    auto spec = fam.spec_from_rhs(primitive_rhs(fam.lift_rhs(ch.representative)));
    EXPECT_EQ(enumerate_vertices(spec).size(), ch.basis_count);
    f0s.insert(ch.basis_count);
  }
  EXPECT_EQ(f0s, (std::set<std::size_t>{3, 4, 5, 6}));
}

TEST(Chambers, HexagonChamberHasSixBases) {
  // 2x3 marginals whose polytope is a hexagon; f0 = 6 = basis count.
  auto spec = TransportSpec::classical(vec({7, 8}), vec({4, 5, 6}));
  ASSERT_EQ(enumerate_vertices(spec).size(), 6u);
  auto fam = family_config(Kind::Classical, 2, 3);
  auto cs = build_constraints(spec);
  EXPECT_EQ(chamber_basis_count(fam.reduced, fam.reduce_rhs(cs.b)), 6u);
}

TEST(Catalogue, Classical23Rows) {
  auto cat = catalogue(Kind::Classical, 2, 3);
  EXPECT_EQ(cat.rows.size(), 18u);
  std::set<std::size_t> f0s, facets;
  std::set<int> diams;
  for (const auto& row : cat.rows) {
    f0s.insert(row.f0);
    facets.insert(row.facets);
    diams.insert(row.diameter);
    // Representative reproduces the chamber's statistics.
    auto g = polytope_graph(row.representative);
    EXPECT_EQ(g.vertices.size(), row.f0);
    EXPECT_EQ(static_cast<std::size_t>(count_facets(row.representative)),
              row.facets);
    EXPECT_EQ(diameter(g), row.diameter);
    EXPECT_TRUE(is_nondegenerate(row.representative));
  }
  EXPECT_EQ(f0s, (std::set<std::size_t>{3, 4, 5, 6}));
  EXPECT_EQ(facets, (std::set<std::size_t>{3, 4, 5, 6}));
  EXPECT_EQ(diams, (std::set<int>{1, 2, 3}));
}

TEST(Catalogue, Axial222Rows) {
  auto cat = catalogue(Kind::Axial3, 2, 2, 2);
  std::set<std::size_t> f0s, facets;
  std::set<int> diams;
  for (const auto& row : cat.rows) {
    f0s.insert(row.f0);
    facets.insert(row.facets);
    diams.insert(row.diameter);
  }
  EXPECT_EQ(f0s, (std::set<std::size_t>{8, 11, 14}));
  EXPECT_EQ(facets, (std::set<std::size_t>{6, 7, 8}));
  EXPECT_EQ(diams, (std::set<int>{2, 3, 4}));
}

TEST(Catalogue, SampleModeProducesRows) {
  auto rows = sample_catalogue(Kind::Axial3, 2, 2, 2, 3, 123);
  EXPECT_EQ(rows.size(), 3u);
  for (const auto& row : rows) {
    EXPECT_GE(row.f0, 8u);
    EXPECT_LE(row.f0, 14u);
  }
}

TEST(LexChamber, CardinalitiesArePowers) {
  // p^(q-1) for (2,3), (3,3), (3,4).
  {
    auto [u, v] = lex_chamber_marginals(2, 3);
    auto fam = family_config(Kind::Classical, 2, 3);
    auto cs = build_constraints(TransportSpec::classical(u, v));
    EXPECT_EQ(chamber_basis_count(fam.reduced, fam.reduce_rhs(cs.b)), 4u);
  }
  {
    auto [u, v] = lex_chamber_marginals(3, 3);
    auto fam = family_config(Kind::Classical, 3, 3);
    auto cs = build_constraints(TransportSpec::classical(u, v));
    EXPECT_EQ(chamber_basis_count(fam.reduced, fam.reduce_rhs(cs.b)), 9u);
  }
  {
    auto [u, v] = lex_chamber_marginals(3, 4);
    auto fam = family_config(Kind::Classical, 3, 4);
    auto cs = build_constraints(TransportSpec::classical(u, v));
    EXPECT_EQ(chamber_basis_count(fam.reduced, fam.reduce_rhs(cs.b)), 27u);
  }
}

TEST(GcdStep, IdentityOnAdjacentChambers) {
  auto fam = family_config(Kind::Classical, 2, 3);
  auto cc = enumerate_chambers(fam.reduced);
  int checked = 0;
  for (const auto& e : cc.edges) {
    auto rep = gcd_step_check(cc, fam.reduced, e.a, e.b, std::gcd(2, 3));
    EXPECT_TRUE(rep.identity_holds);
    EXPECT_TRUE(rep.divisible);
    ++checked;
  }
  EXPECT_GT(checked, 5);
}

TEST(GcdStep, SameChamberRejected) {
  auto fam = family_config(Kind::Classical, 2, 3);
  auto cc = enumerate_chambers(fam.reduced);
  EXPECT_THROW(gcd_step_check(cc, fam.reduced, 0, 0, 1), TpolyError);
}

TEST(GcdStep, ThreeByThreeDifferencesDivisibleByThree) {
  auto fam = family_config(Kind::Classical, 3, 3);
  auto cc = enumerate_chambers(fam.reduced);
  // Every chamber's cardinality is a multiple of gcd(3,3) = 3.
  for (const auto& ch : cc.chambers) EXPECT_EQ(ch.basis_count % 3, 0u);
  int checked = 0;
  for (const auto& e : cc.edges) {
    if (checked >= 25) break;
    auto rep = gcd_step_check(cc, fam.reduced, e.a, e.b, 3);
    EXPECT_TRUE(rep.identity_holds);
    EXPECT_TRUE(rep.divisible);
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

}  // namespace
