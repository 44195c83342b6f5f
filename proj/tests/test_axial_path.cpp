#include "tpoly/axial_path.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "test_util.hpp"

using namespace tpoly;
using tpoly_test::random_generic_axial;

namespace {

Rational Q(long n) { return Rational(n); }
Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (auto x : xs) v.push_back(Q(x));
  return v;
}

TransportSpec axial333() {
  return TransportSpec::axial(vec({112, 18, 30}), vec({40, 6, 114}),
                              vec({82, 44, 34}));
}

Table table_from_cells(
    const TransportSpec& spec,
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, long>>& cells) {
  Vector vals(spec.cells(), Q(0));
  for (const auto& [i, j, k, x] : cells)
    vals[spec.cell_index(i - 1, j - 1, k - 1)] = Q(x);  // 1-based input
  return Table(spec, vals);
}

// Staircase-reduction example vertex: one rectangle pivot clears the
// cell (3,3,2).
Table reduction_example_vertex() {
  return table_from_cells(axial333(), {{1, 1, 2, 28},
                                       {2, 1, 2, 12},
                                       {2, 2, 3, 6},
                                       {1, 3, 2, 2},
                                       {1, 3, 1, 82},
                                       {3, 3, 2, 2},
                                       {3, 3, 3, 28}});
}

// Octagon example vertex: the six-cell move lands inside an edge of a
// quadrilateral 2-face.
Table octagon_example_vertex() {
  return table_from_cells(axial333(), {{1, 1, 3, 25},
                                       {3, 1, 1, 15},
                                       {3, 2, 1, 6},
                                       {1, 3, 1, 61},
                                       {1, 3, 2, 26},
                                       {2, 3, 2, 18},
                                       {3, 3, 3, 9}});
}

TEST(WellOrderedLevel, KnownValues) {
  auto spec = axial333();
  EXPECT_EQ(well_ordered_level(northwest_corner_axial(spec)).value(), 3u);
  EXPECT_EQ(well_ordered_level(reduction_example_vertex()).value(), 9u);
  EXPECT_EQ(well_ordered_level(octagon_example_vertex()).value(), 9u);
}

TEST(WellOrderedLevel, AbsentTopCornerHasNoLevel) {
  auto spec = TransportSpec::axial(vec({7, 3}), vec({4, 6}), vec({5, 5}));
  for (const auto& vert : enumerate_vertices(spec)) {
    auto lvl = well_ordered_level(vert);
    bool has_top = vert.values[spec.cell_index(1, 1, 1)] > 0;
    EXPECT_EQ(lvl.has_value(), has_top);
  }
}

TEST(ReduceLevel, RectanglePivotExample) {
  // alpha=(3,3,3), beta=(3,3,2), gamma=(2,2,3), delta=(2,2,2); one
  // pivot clears x_beta. (The printed V' lists x_{3,3,3}=28, which is
  // inconsistent with the marginals; the pivot forces 30.)
  auto st = make_level_state(reduction_example_vertex());
  ASSERT_EQ(st.z, 9u);
  auto [next, steps] = reduce_level(st);
  ASSERT_GE(steps.size(), 1u);
  const auto& spec = st.vertex.spec;
  EXPECT_EQ(steps[0].entering, spec.cell_index(1, 1, 1));  // (2,2,2)
  EXPECT_EQ(steps[0].leaving, spec.cell_index(2, 2, 1));   // (3,3,2)
  auto expected = table_from_cells(spec, {{1, 1, 2, 28},
                                          {2, 1, 2, 12},
                                          {2, 2, 3, 4},
                                          {1, 3, 2, 2},
                                          {1, 3, 1, 82},
                                          {2, 2, 2, 2},
                                          {3, 3, 3, 30}});
  EXPECT_EQ(steps[0].to.values, expected.values);
  EXPECT_LE(steps.size(), 2u * (9 - 4));
  EXPECT_LE(next.z, 8u);
}

TEST(ReduceLevel, OctagonExampleOneEdgeToTheCloserEndpoint) {
  auto st = make_level_state(octagon_example_vertex());
  ASSERT_EQ(st.z, 9u);
  auto [next, steps] = reduce_level(st);
  ASSERT_GE(steps.size(), 1u);
  // The edge E on which W lies has one endpoint adjacent to V; the walk
  // takes that single edge. Its coordinates are printed in the paper.
  auto expected = table_from_cells(st.vertex.spec, {{1, 1, 3, 22},
                                                    {3, 1, 1, 18},
                                                    {2, 2, 1, 6},
                                                    {3, 3, 3, 12},
                                                    {1, 3, 2, 32},
                                                    {2, 3, 2, 12},
                                                    {1, 3, 1, 58}});
  EXPECT_EQ(steps[0].to.values, expected.values);
  EXPECT_TRUE(adjacent(steps[0].from, steps[0].to));
  EXPECT_LE(next.z, 8u);
}

TEST(PathToWellOrdered, FixedPoint) {
  auto vhat = northwest_corner_axial(axial333());
  EXPECT_TRUE(path_to_well_ordered(vhat).empty());
}

void validate_path(const std::vector<PivotStep>& steps, const Table& from,
                   const Table& target) {
  const Table* cur = &from;
  for (const auto& s : steps) {
    EXPECT_EQ(s.from.values, cur->values);
    EXPECT_TRUE(is_vertex(s.to));
    EXPECT_TRUE(adjacent(s.from, s.to));
    EXPECT_GT(s.from.values[s.leaving], 0);
    EXPECT_EQ(s.from.values[s.entering], 0);
    EXPECT_GT(s.to.values[s.entering], 0);
    EXPECT_EQ(s.to.values[s.leaving], 0);
    cur = &s.to;
  }
  EXPECT_EQ(cur->values, target.values);
}

TEST(PathToWellOrdered, ExampleVerticesReachVhat) {
  auto spec = axial333();
  auto vhat = northwest_corner_axial(spec);
  for (const auto& start : {reduction_example_vertex(), octagon_example_vertex()}) {
    auto steps = path_to_well_ordered(start);
    EXPECT_LE(steps.size(), 36u);  // (3+3+3-3)^2
    validate_path(steps, start, vhat);
  }
}

TEST(PathToWellOrdered, StaircasePrefixNeverRemoved) {
  // Along the reduction, staircase cells at levels >= the working level
  // stay in the support with unchanged values.
  auto start = octagon_example_vertex();
  auto st = make_level_state(start);
  while (st.z >= 5) {
    auto [next, steps] = reduce_level(st);
    for (auto c : st.staircase_prefix) {
      auto cell = st.vertex.spec.cell_of(c);
      if (cell[0] + cell[1] + cell[2] + 3 > st.z) {
        for (const auto& s : steps) EXPECT_GT(s.to.values[c], 0);
        EXPECT_EQ(next.vertex.values[c], st.vertex.values[c]);
      }
    }
    st = std::move(next);
  }
}

TEST(PathBetween, TrivialAndBounds) {
  auto spec = axial333();
  auto vhat = northwest_corner_axial(spec);
  EXPECT_TRUE(path_between(vhat, vhat).empty());
  auto steps = path_between(reduction_example_vertex(), octagon_example_vertex());
  EXPECT_LE(steps.size(), 2u * 36u);
  validate_path(steps, reduction_example_vertex(), octagon_example_vertex());
}

TEST(PathBetween, RandomSmallInstancesAgainstBfs) {
  std::mt19937 rng(77);
  for (int inst = 0; inst < 4; ++inst) {
    std::size_t s = 2 + inst % 2;  // 2x2x2 and 2x2x3
    auto spec = random_generic_axial(rng, 2, 2, s, 50);
    auto g = polytope_graph(spec);
    const std::size_t bound1 = (2 + 2 + s - 3) * (2 + 2 + s - 3);
    std::map<Vector, std::size_t> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
      index[g.vertices[i].values] = i;
    std::vector<std::size_t> lengths(g.vertices.size());
    auto vhat = northwest_corner_axial(spec);
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      auto steps = path_to_well_ordered(g.vertices[i]);
      validate_path(steps, g.vertices[i], vhat);
      EXPECT_LE(steps.size(), bound1);
      lengths[i] = steps.size();
    }
    // Pairwise: concatenated length within 2(p+q+s-3)^2 and at least
    // the BFS distance.
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      std::vector<int> dist(g.vertices.size(), -1);
      std::vector<std::size_t> queue{i};
      dist[i] = 0;
      for (std::size_t head = 0; head < queue.size(); ++head)
        for (auto y : g.adjacency[queue[head]])
          if (dist[y] < 0) {
            dist[y] = dist[queue[head]] + 1;
            queue.push_back(y);
          }
      for (std::size_t j = 0; j < g.vertices.size(); ++j) {
        EXPECT_LE(static_cast<std::size_t>(dist[j]), lengths[i] + lengths[j]);
        EXPECT_LE(lengths[i] + lengths[j], 2 * bound1);
      }
    }
  }
}

TEST(Errors, DegenerateSpecRefused) {
  auto tie = TransportSpec::axial(vec({4, 4}), vec({4, 4}), vec({4, 4}));
  auto verts = enumerate_vertices(tie);
  ASSERT_FALSE(verts.empty());
  bool found_degenerate = false;
  for (const auto& vert : verts) {
    if (vert.values[tie.cell_index(1, 1, 1)] > 0) {
      try {
        path_to_well_ordered(vert);
      } catch (const DegenerateError&) {
        found_degenerate = true;
      }
    }
  }
  EXPECT_TRUE(found_degenerate);
}

}  // namespace
