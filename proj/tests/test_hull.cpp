#include "tpoly/hull.hpp"

#include <gtest/gtest.h>

using namespace tpoly;

namespace {

Rational Q(long n, long d = 1) { return Rational(n) / d; }

std::vector<Vector> simplex_points(int d) {
  std::vector<Vector> pts(d + 1, Vector(d, Q(0)));
  for (int i = 0; i < d; ++i) pts[i + 1][i] = 1;
  return pts;
}

std::vector<Vector> cube_points(int d) {
  std::vector<Vector> pts;
  for (int mask = 0; mask < (1 << d); ++mask) {
    Vector p(d);
    for (int i = 0; i < d; ++i) p[i] = (mask >> i) & 1;
    pts.push_back(p);
  }
  return pts;
}

TEST(Facets, Tetrahedron) {
  auto f = facets_brute_force(simplex_points(3));
  ASSERT_EQ(f.size(), 4u);
  for (const auto& facet : f) EXPECT_EQ(facet.size(), 3u);
}

TEST(Facets, SquareHasFourEdges) {
  std::vector<Vector> sq = {{Q(0), Q(0)}, {Q(1), Q(0)}, {Q(0), Q(1)}, {Q(1), Q(1)}};
  auto f = facets_brute_force(sq);
  EXPECT_EQ(f.size(), 4u);
}

TEST(Facets, SimplicesAndCubesUpToDim4) {
  for (int d = 2; d <= 4; ++d) {
    EXPECT_EQ(facets_brute_force(simplex_points(d)).size(),
              static_cast<std::size_t>(d + 1));
    EXPECT_EQ(facets_brute_force(cube_points(d)).size(),
              static_cast<std::size_t>(2 * d));
  }
}

TEST(Facets, DegenerateInputThrows) {
  std::vector<Vector> pt = {{Q(1), Q(1)}, {Q(1), Q(1)}};
  EXPECT_THROW(facets_brute_force(pt), TpolyError);
}

TEST(Facets, LowerDimensionalEmbeddingHandled) {
  // A triangle embedded in R^3.
  std::vector<Vector> tri = {{Q(0), Q(0), Q(1)}, {Q(1), Q(0), Q(1)}, {Q(0), Q(1), Q(1)}};
  auto f = facets_brute_force(tri);
  EXPECT_EQ(f.size(), 3u);
}

TEST(HPolytope, UnitSquareVerticesAndGraph) {
  std::vector<std::pair<Vector, Rational>> rows = {
      {{Q(1), Q(0)}, Q(0)},  {{Q(0), Q(1)}, Q(0)},
      {{Q(-1), Q(0)}, Q(-1)}, {{Q(0), Q(-1)}, Q(-1)}};
  auto verts = h_polytope_vertices(rows);
  ASSERT_EQ(verts.size(), 4u);
  auto adj = h_polytope_graph(rows, verts);
  EXPECT_EQ(graph_diameter(adj), 2);
}

TEST(Graph, DiameterOfPath) {
  std::vector<std::vector<std::size_t>> adj = {{1}, {0, 2}, {1}};
  EXPECT_EQ(graph_diameter(adj), 2);
  EXPECT_EQ(bfs_distance(adj, 0, 2), 2);
}

}  // namespace
