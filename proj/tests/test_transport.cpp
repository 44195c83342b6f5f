#include "tpoly/transport.hpp"

#include <gtest/gtest.h>

#include <random>

#include "tpoly/vertex_enum.hpp"

using namespace tpoly;

namespace {

Rational Q(long n, long d = 1) { return Rational(n) / d; }
Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (auto x : xs) v.push_back(Q(x));
  return v;
}

TEST(BuildConstraints, Classical33MatchesPrintedSystem) {
  auto t = TransportSpec::classical(vec({5, 5, 1}), vec({2, 7, 2}));
  auto cs = build_constraints(t);
  Matrix expected{{1, 0, 0, 1, 0, 0, 1, 0, 0}, {0, 1, 0, 0, 1, 0, 0, 1, 0},
                  {0, 0, 1, 0, 0, 1, 0, 0, 1}, {1, 1, 1, 0, 0, 0, 0, 0, 0},
                  {0, 0, 0, 1, 1, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 1, 1}};
  EXPECT_TRUE(cs.a == expected);
  EXPECT_EQ(cs.b, vec({2, 7, 2, 5, 5, 1}));
  EXPECT_EQ(rank(cs.a), 5u);
}

TEST(BuildConstraints, OneByOne) {
  auto t = TransportSpec::classical(vec({4}), vec({4}));
  auto cs = build_constraints(t);
  EXPECT_EQ(cs.a.rows(), 2u);
  EXPECT_EQ(cs.a.cols(), 1u);
  EXPECT_EQ(cs.b, vec({4, 4}));
}

TEST(BuildConstraints, Axial222RankFour) {
  auto t = TransportSpec::axial(vec({4, 4}), vec({4, 4}), vec({4, 4}));
  auto cs = build_constraints(t);
  EXPECT_EQ(cs.a.rows(), 6u);
  EXPECT_EQ(cs.a.cols(), 8u);
  EXPECT_EQ(rank(cs.a), 4u);
}

TEST(Dimension, KnownValues) {
  EXPECT_EQ(dimension(TransportSpec::classical(vec({5, 5, 1}), vec({2, 7, 2}))), 4u);
  EXPECT_EQ(dimension(TransportSpec::classical(vec({1, 2, 3}), vec({6}))), 0u);
  EXPECT_EQ(dimension(TransportSpec::axial(vec({2, 3, 4}), vec({3, 3, 3}),
                                           vec({1, 3, 5}))),
            20u);
}

TEST(IsNonempty, ClassicalBalance) {
  EXPECT_TRUE(is_nonempty(TransportSpec::classical(vec({5, 5, 1}), vec({2, 7, 2}))));
  EXPECT_FALSE(is_nonempty(TransportSpec::classical(vec({1}), vec({2}))));
}

TEST(IsNonempty, PlanarByExactLp) {
  // The 3x3x3 planar spec with more vertices than the generalized
  // Birkhoff 3-way planar polytope; it is feasible. The three printed
  // matrices carry indices (i,j), (i,k), (j,k), so in the U/V/W roles
  // used here they arrive in reverse order.
  Matrix M1{{164424, 324745, 127239},
            {262784, 601074, 9369116},
            {149654, 7618489, 1736281}};
  Matrix M2{{163445, 49395, 403568},
            {1151824, 767866, 8313284},
            {1609500, 6331023, 1563901}};
  Matrix M3{{184032, 123585, 269245},
            {886393, 6722333, 935582},
            {1854344, 302366, 9075926}};
  EXPECT_TRUE(is_nonempty(TransportSpec::planar(/*U=*/M3, /*V=*/M2, /*W=*/M1)));

  // Unbalanced 2-marginals: infeasible.
  Matrix U2{{1, 0}, {0, 1}};
  Matrix V2{{1, 1}, {0, 0}};
  Matrix W2{{2, 0}, {0, 1}};
  EXPECT_FALSE(is_nonempty(TransportSpec::planar(U2, V2, W2)));
}

TEST(Generic, KnownCases) {
  EXPECT_TRUE(is_generic_classical(vec({5, 5, 1}), vec({2, 7, 2})));
  EXPECT_FALSE(is_generic_classical(vec({1, 1}), vec({1, 1})));
  // u = (q,...,q), v = (p,...,p) with gcd(p,q) = 1.
  EXPECT_TRUE(is_generic_classical(vec({5, 5, 5}), vec({3, 3, 3, 3, 3})));
  EXPECT_FALSE(is_generic_classical(vec({3, 3, 3}), vec({3, 3, 3})));
}

TEST(Generic, GuardOnSize) {
  Vector big(13, Q(1));
  EXPECT_THROW(is_generic_classical(big, big), GuardError);
}

// Lemma-level equivalence: generic iff non-degenerate, exhaustively on
// small random instances.
TEST(Generic, MatchesNondegeneracyOnSmallSpecs) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> val(1, 9);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t p = 2 + rng() % 3, q = 2 + rng() % 3;  // p,q <= 4
    Vector u(p), v(q);
    Rational su = 0;
    for (auto& x : u) {
      x = val(rng);
      su += x;
    }
    Rational rest = su;
    for (std::size_t j = 0; j + 1 < q; ++j) {
      Rational x = Q(1 + static_cast<long>(rng() % 5));
      if (x > rest - Q(static_cast<long>(q - 1 - j))) x = 1;
      v[j] = x;
      rest -= x;
    }
    v[q - 1] = rest;
    if (rest <= 0) continue;
    auto spec = TransportSpec::classical(u, v);
    EXPECT_EQ(is_generic_classical(u, v), is_nondegenerate(spec));
  }
}

TEST(Isomorphism22n, RoundTripOnVertices) {
  // A 2 x 2 x 3 planar spec built from a random positive table.
  Matrix U(2, 3), V(2, 3), W(2, 2);
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> val(1, 20);
  TransportSpec planar;
  for (int attempt = 0;; ++attempt) {
    Matrix table0(4, 3);
    U = Matrix(2, 3);
    V = Matrix(2, 3);
    W = Matrix(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 3; ++k) {
          Rational x = val(rng);
          U(j, k) += x;
          V(i, k) += x;
          W(i, j) += x;
        }
    planar = TransportSpec::planar(U, V, W);
    if (is_nondegenerate(planar)) break;
    ASSERT_LT(attempt, 50);
  }
  auto iso = planar_2x2xp_to_classical(planar);
  EXPECT_EQ(iso.classical.p, 3u);
  EXPECT_EQ(iso.classical.q, 2u);

  auto planar_verts = enumerate_vertices(planar);
  auto classical_verts = enumerate_vertices(iso.classical);
  ASSERT_EQ(planar_verts.size(), classical_verts.size());
  for (const auto& vert : planar_verts) {
    Vector c = iso.to_classical(vert.values);
    Table ct(iso.classical, c);
    EXPECT_TRUE(is_vertex(ct));
    EXPECT_EQ(iso.to_planar(c), vert.values);
  }
  // Graphs on both sides are isomorphic under the affine map: compare
  // adjacency under the induced vertex correspondence.
  auto gp = polytope_graph(planar);
  for (std::size_t i = 0; i < gp.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < gp.vertices.size(); ++j) {
      bool adj_p = std::find(gp.adjacency[i].begin(), gp.adjacency[i].end(), j) !=
                   gp.adjacency[i].end();
      Table ci(iso.classical, iso.to_classical(gp.vertices[i].values));
      Table cj(iso.classical, iso.to_classical(gp.vertices[j].values));
      EXPECT_EQ(adj_p, adjacent(ci, cj));
    }
}

TEST(Isomorphism22n, PEqualsOneIsSegmentOrPoint) {
  Matrix U(2, 1), V(2, 1), W(2, 2);
  // Single slice: table entries x_{i,j,1} with all 2-marginals from a
  // positive table.
  Matrix t0{{3, 1}, {2, 4}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      U(j, 0) += t0(i, j);
      V(i, 0) += t0(i, j);
      W(i, j) = t0(i, j);
    }
  auto iso = planar_2x2xp_to_classical(TransportSpec::planar(U, V, W));
  EXPECT_EQ(iso.classical.p, 1u);
  auto verts = enumerate_vertices(iso.classical);
  EXPECT_LE(verts.size(), 2u);
}

TEST(Isomorphism22n, ConverseConstruction) {
  auto classical = TransportSpec::classical(vec({3, 1, 2}), vec({4, 2}));
  auto planar = classical_px2_to_planar(classical);
  EXPECT_EQ(planar.p, 2u);
  EXPECT_EQ(planar.q, 2u);
  EXPECT_EQ(planar.s, 3u);
  // Same vertex counts through the printed bijection
  // x_{j,k} = x_{1,j,k} = x_{2,3-j,k}.
  auto cv = enumerate_vertices(classical);
  auto pv = enumerate_vertices(planar);
  EXPECT_EQ(cv.size(), pv.size());
  for (const auto& vert : cv) {
    Vector vals(planar.cells());
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t j = 0; j < 2; ++j) {
        Rational x = vert.values[classical.cell_index(k, j)];
        vals[planar.cell_index(0, j, k)] = x;
        vals[planar.cell_index(1, 1 - j, k)] = x;
      }
    EXPECT_TRUE(is_vertex(Table(planar, vals)));
  }
}

TEST(BoundedEntries, Plan22nView) {
  // 2 x 2 x 3 planar spec -> 2 x 3 bounded system; vertex counts match
  // through the projection x -> x_{1,.,.}.
  Matrix U(2, 3), V(2, 3), W(2, 2);
  Matrix paste{{5, 2, 4}, {1, 6, 3}};  // x_{1,j,k}
  Matrix paste2{{2, 3, 1}, {4, 2, 5}};
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 3; ++k) {
      Rational x1 = paste(j, k), x2 = paste2(j, k);
      U(j, k) = x1 + x2;
      V(0, k) += x1;
      V(1, k) += x2;
      W(0, j) += x1;
      W(1, j) += x2;
    }
  auto spec = TransportSpec::planar(U, V, W);
  auto bt = planar_2pq_to_bounded(spec);
  EXPECT_EQ(bt.p, 2u);
  EXPECT_EQ(bt.q, 3u);
  auto verts = enumerate_vertices(spec);
  std::set<Vector> projected;
  for (const auto& vert : verts) {
    Vector y(bt.p * bt.q);
    for (std::size_t j = 0; j < bt.p; ++j)
      for (std::size_t k = 0; k < bt.q; ++k)
        y[j * bt.q + k] = vert.values[spec.cell_index(0, j, k)];
    // Projection lands inside the bounded system.
    for (std::size_t j = 0; j < bt.p; ++j) {
      Rational rowsum = 0;
      for (std::size_t k = 0; k < bt.q; ++k) {
        EXPECT_GE(y[j * bt.q + k], 0);
        EXPECT_LE(y[j * bt.q + k], bt.bounds(j, k));
        rowsum += y[j * bt.q + k];
      }
      EXPECT_EQ(rowsum, bt.row_sums[j]);
    }
    projected.insert(y);
  }
  // Injective on vertices (it is an affine bijection).
  EXPECT_EQ(projected.size(), verts.size());

  // Round trip through the converse marginal formulas.
  auto back = bounded_to_planar(bt);
  EXPECT_EQ(enumerate_vertices(back).size(), verts.size());
}

TEST(BoundedEntries, AllZeroBounds) {
  BoundedTransport bt;
  bt.p = 2;
  bt.q = 2;
  bt.row_sums = vec({0, 0});
  bt.col_sums = vec({0, 0});
  bt.bounds = Matrix(2, 2);
  auto spec = bounded_to_planar(bt);
  auto verts = enumerate_vertices(spec);
  ASSERT_EQ(verts.size(), 1u);
  for (const auto& x : verts[0].values) EXPECT_EQ(x, 0);
}

TEST(Perturb, DegenerateClassicalBecomesGeneric) {
  auto t = TransportSpec::classical(vec({1, 1}), vec({1, 1}));
  auto p = perturb(t);
  EXPECT_TRUE(is_generic_classical(p.u, p.v));
  EXPECT_TRUE(is_nonempty(p));
}

TEST(Perturb, DegenerateAxialBecomesNondegenerate) {
  auto t = TransportSpec::axial(vec({4, 4}), vec({4, 4}), vec({4, 4}));
  auto p = perturb(t);
  EXPECT_TRUE(is_nondegenerate(p));
}

TEST(PermuteAxes, PreservesVertexCount) {
  auto t = TransportSpec::axial(vec({7, 3}), vec({4, 6}), vec({5, 5}));
  auto t2 = permute_axes(t, {2, 0, 1});
  EXPECT_EQ(enumerate_vertices(t).size(), enumerate_vertices(t2).size());
}

}  // namespace
