#include "tpoly/vertex_enum.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tpoly;

namespace {

Rational Q(long n, long d = 1) { return Rational(n) / d; }
Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (auto x : xs) v.push_back(Q(x));
  return v;
}

TransportSpec p33() {
  return TransportSpec::classical(vec({5, 5, 1}), vec({2, 7, 2}));
}

// The twelve vertices z1..z12 of P_{3x3}.
std::vector<Vector> p33_vertices() {
  std::vector<std::vector<long>> z = {
      {2, 2, 1, 0, 5, 0, 0, 0, 1}, {2, 1, 2, 0, 5, 0, 0, 1, 0},
      {1, 2, 2, 0, 5, 0, 1, 0, 0}, {1, 4, 0, 0, 3, 2, 1, 0, 0},
      {2, 3, 0, 0, 3, 2, 0, 1, 0}, {2, 3, 0, 0, 4, 1, 0, 0, 1},
      {0, 4, 1, 2, 3, 0, 0, 0, 1}, {0, 3, 2, 2, 3, 0, 0, 1, 0},
      {0, 3, 2, 1, 4, 0, 1, 0, 0}, {0, 5, 0, 2, 2, 1, 0, 0, 1},
      {0, 5, 0, 2, 1, 2, 0, 1, 0}, {0, 5, 0, 1, 2, 2, 1, 0, 0}};
  std::vector<Vector> out;
  for (const auto& row : z) {
    Vector v;
    for (auto x : row) v.push_back(Q(x));
    out.push_back(v);
  }
  return out;
}

TEST(NorthwestCorner, Identity3x5GeneralizedBirkhoff) {
  auto t = northwest_corner(vec({5, 5, 5}), vec({3, 3, 3, 3, 3}));
  Vector expected = {3, 2, 0, 0, 0, 0, 1, 3, 1, 0, 0, 0, 0, 2, 3};
  EXPECT_EQ(t.values, expected);
  EXPECT_TRUE(is_vertex(t));
}

TEST(NorthwestCorner, Permuted3x5) {
  // sigma = (1->2, 2->3, 3->1), tau = (1->5, 2->1, 3->2, 4->3, 5->4),
  // zero-based below.
  std::vector<std::size_t> sigma = {1, 2, 0};
  std::vector<std::size_t> tau = {4, 0, 1, 2, 3};
  auto t = northwest_corner(vec({5, 5, 5}), vec({3, 3, 3, 3, 3}), sigma, tau);
  Vector expected = {0, 0, 2, 3, 0, 2, 0, 0, 0, 3, 1, 3, 1, 0, 0};
  EXPECT_EQ(t.values, expected);
  EXPECT_TRUE(is_vertex(t));
}

TEST(NorthwestCorner, SingleCell) {
  auto t = northwest_corner(vec({7}), vec({7}));
  EXPECT_EQ(t.values, vec({7}));
}

TEST(NorthwestCorner, InfeasibleThrows) {
  EXPECT_THROW(northwest_corner(vec({1}), vec({2})), InfeasibleError);
}

TEST(NorthwestCorner, AlwaysAVertexEvenWithTies) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> val(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t p = 1 + rng() % 4, q = 1 + rng() % 4;
    Vector u(p), v(q, Q(0));
    Rational su = 0;
    for (auto& x : u) {
      x = val(rng);
      su += x;
    }
    // Random composition of the same total (ties likely).
    for (std::size_t j = 0; j + 1 < q; ++j) {
      long cap = static_cast<long>(su.convert_to<double>());
      (void)cap;
      v[j] = 0;
    }
    v[q - 1] = su;
    for (std::size_t j = 0; j + 1 < q; ++j) {
      Rational take = Q(val(rng));
      if (take > v[q - 1]) take = v[q - 1];
      v[j] += take;
      v[q - 1] -= take;
    }
    std::vector<std::size_t> sigma(p), tau(q);
    for (std::size_t i = 0; i < p; ++i) sigma[i] = i;
    for (std::size_t j = 0; j < q; ++j) tau[j] = j;
    std::shuffle(sigma.begin(), sigma.end(), rng);
    std::shuffle(tau.begin(), tau.end(), rng);
    bool zero_fine = true;
    for (const auto& x : v)
      if (x < 0) zero_fine = false;
    if (!zero_fine) continue;
    auto t = northwest_corner(u, v, sigma, tau);
    EXPECT_TRUE(is_vertex(t));
  }
}

TEST(NorthwestCornerAxial, Example333) {
  auto spec = TransportSpec::axial(vec({112, 18, 30}), vec({40, 6, 114}),
                                   vec({82, 44, 34}));
  auto t = northwest_corner_axial(spec);
  EXPECT_EQ(t.at(0, 0, 0), 40);
  EXPECT_EQ(t.at(0, 1, 0), 6);
  EXPECT_EQ(t.at(0, 2, 0), 36);
  EXPECT_EQ(t.at(0, 2, 1), 30);
  EXPECT_EQ(t.at(1, 2, 1), 14);
  EXPECT_EQ(t.at(1, 2, 2), 4);
  EXPECT_EQ(t.at(2, 2, 2), 30);
  EXPECT_EQ(t.support().size(), 7u);
  EXPECT_TRUE(is_vertex(t));
}

TEST(NorthwestCornerAxial, SingleCellAndTie) {
  auto one = TransportSpec::axial(vec({3}), vec({3}), vec({3}));
  EXPECT_EQ(northwest_corner_axial(one).values, vec({3}));
  auto tie = TransportSpec::axial(vec({4, 4}), vec({4, 4}), vec({4, 4}));
  EXPECT_THROW(northwest_corner_axial(tie), DegenerateError);
}

TEST(IsVertex, P33Cases) {
  auto spec = p33();
  auto zs = p33_vertices();
  EXPECT_TRUE(is_vertex(Table(spec, zs[0])));
  // Midpoint of z1 and z2 is not a vertex.
  Vector mid(9);
  for (int i = 0; i < 9; ++i) mid[i] = (zs[0][i] + zs[1][i]) / 2;
  EXPECT_FALSE(is_vertex(Table(spec, mid)));
}

TEST(IsVertex, BirkhoffCenterIsNotAVertex) {
  auto b3 = TransportSpec::classical(vec({1, 1, 1}), vec({1, 1, 1}));
  Vector center(9, Q(1, 3));
  EXPECT_FALSE(is_vertex(Table(b3, center)));
}

TEST(Enumerate, P33TwelveVertices) {
  auto verts = enumerate_vertices(p33());
  ASSERT_EQ(verts.size(), 12u);
  std::set<Vector> got, expected;
  for (const auto& t : verts) got.insert(t.values);
  for (const auto& z : p33_vertices()) expected.insert(z);
  EXPECT_EQ(got, expected);
}

TEST(Enumerate, TwoByTwo) {
  auto verts = enumerate_vertices(TransportSpec::classical(vec({3, 1}), vec({2, 2})));
  EXPECT_EQ(verts.size(), 2u);
}

TEST(Enumerate, BirkhoffB3PermutationMatrices) {
  auto verts = enumerate_vertices(
      TransportSpec::classical(vec({1, 1, 1}), vec({1, 1, 1})));
  ASSERT_EQ(verts.size(), 6u);
  for (const auto& t : verts) {
    for (const auto& x : t.values) EXPECT_TRUE(x == 0 || x == 1);
    EXPECT_TRUE(is_vertex(t));
  }
}

TEST(Enumerate, PivotAndSubsetRoutesAgree) {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> val(1, 30);
  int nondeg_seen = 0;
  for (int trial = 0; trial < 12; ++trial) {
    Vector u(2), v(2), w(2 + trial % 2);
    Rational su = 0, sv = 0;
    for (auto& x : u) {
      x = val(rng);
      su += x;
    }
    v[0] = val(rng);
    while (v[0] >= su) v[0] = val(rng);
    v[1] = su - v[0];
    Rational rest = su;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      w[k] = Q(1 + static_cast<long>(rng() % 9));
      rest -= w[k];
    }
    if (rest <= 0) continue;
    w[w.size() - 1] = rest;
    auto spec = TransportSpec::axial(u, v, w);
    auto rs = detail::reduce_system(spec);
    auto by_subsets = detail::subset_enumerate(spec, rs);
    auto general = enumerate_vertices(spec);
    ASSERT_EQ(general.size(), by_subsets.size());
    for (std::size_t i = 0; i < general.size(); ++i)
      EXPECT_EQ(general[i].values, by_subsets[i].values);
    try {
      Table start = detail::start_vertex(spec, rs);
      auto by_pivots = detail::pivot_enumerate(spec, rs, start);
      std::sort(by_pivots.begin(), by_pivots.end());
      ASSERT_EQ(by_pivots.size(), by_subsets.size());
      ++nondeg_seen;
    } catch (const DegenerateError&) {
    }
  }
  EXPECT_GT(nondeg_seen, 0);
}

TEST(Adjacent, P33KnownPairsAndOracle) {
  auto spec = p33();
  auto zs = p33_vertices();
  Table z1(spec, zs[0]), z2(spec, zs[1]);
  EXPECT_TRUE(adjacent(z1, z2));
  EXPECT_FALSE(adjacent(z1, z1));
  // Unique-cycle criterion agrees with the rank test on all pairs.
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = i + 1; j < zs.size(); ++j) {
      Table a(spec, zs[i]), b(spec, zs[j]);
      EXPECT_EQ(adjacent(a, b), adjacent_unique_cycle_test(a, b));
    }
}

TEST(Adjacent, B3AllPairsAdjacent) {
  // In S3 the quotient of any two distinct permutations is a single
  // cycle (a transposition or a 3-cycle), so the graph of B3 is the
  // complete graph K6: 15 edges. Verified here by the rank-test oracle
  // and cross-checked by the unique-cycle criterion.
  auto b3 = TransportSpec::classical(vec({1, 1, 1}), vec({1, 1, 1}));
  auto verts = enumerate_vertices(b3);
  int adjacent_pairs = 0;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (adjacent(verts[i], verts[j])) {
        ++adjacent_pairs;
        EXPECT_TRUE(adjacent_unique_cycle_test(verts[i], verts[j]));
      }
  EXPECT_EQ(adjacent_pairs, 15);
}

TEST(Graph, P33FourRegularDiameterThree) {
  auto g = polytope_graph(p33());
  ASSERT_EQ(g.vertices.size(), 12u);
  for (const auto& nbrs : g.adjacency) EXPECT_EQ(nbrs.size(), 4u);
  EXPECT_EQ(diameter(g), 3);
}

TEST(Graph, SingleVertex) {
  auto g = polytope_graph(TransportSpec::classical(vec({9}), vec({4, 5})));
  EXPECT_EQ(g.vertices.size(), 1u);
  EXPECT_EQ(diameter(g), 0);
}

TEST(Graph, GeneralizedBirkhoff3x5DiameterSeven) {
  auto g = polytope_graph(
      TransportSpec::classical(vec({5, 5, 5}), vec({3, 3, 3, 3, 3})));
  EXPECT_EQ(diameter(g), 7);
}

TEST(CountFacets, KnownValues) {
  // x_{1,2} and x_{2,2} can never vanish on P_{3x3}: the other two rows
  // sum to 6 < v_2 = 7. Only the remaining seven cell hyperplanes are
  // facet-defining.
  EXPECT_EQ(count_facets(p33()), 7u);
  // Generalized Birkhoff p x q with gcd(p,q)=1, p,q >= 3: exactly pq.
  EXPECT_EQ(count_facets(TransportSpec::classical(vec({5, 5, 5}),
                                                  vec({3, 3, 3, 3, 3}))),
            15u);
  // A segment has two facets (its endpoints).
  EXPECT_EQ(count_facets(TransportSpec::classical(vec({3, 1}), vec({2, 2}))), 2u);
}

TEST(Properties, GenericSupportSizeAndGcdAndRegularity) {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> val(1, 40);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 12; ++trial) {
    std::size_t p = 2 + rng() % 3, q = 2 + rng() % 3;
    Vector u(p), v(q);
    Rational su = 0;
    for (auto& x : u) {
      x = val(rng);
      su += x;
    }
    Rational rest = su;
    bool ok = true;
    for (std::size_t j = 0; j + 1 < q; ++j) {
      v[j] = val(rng);
      rest -= v[j];
    }
    v[q - 1] = rest;
    if (rest <= 0) ok = false;
    if (!ok) continue;
    if (!is_generic_classical(u, v)) continue;
    ++checked;
    auto spec = TransportSpec::classical(u, v);
    auto g = polytope_graph(spec);
    const std::size_t dim = dimension(spec);
    for (const auto& t : g.vertices)
      EXPECT_EQ(t.support().size(), p + q - 1);
    for (const auto& nbrs : g.adjacency) EXPECT_EQ(nbrs.size(), dim);
    EXPECT_EQ(g.vertices.size() % std::gcd(p, q), 0u);
  }
  EXPECT_GE(checked, 5);
}

TEST(Properties, ForestTestAgreesWithBasicSolutionTest) {
  std::mt19937 rng(59);
  std::uniform_int_distribution<int> val(1, 12);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t p = 2 + rng() % 3, q = 2 + rng() % 2;  // pq <= 16
    Vector u(p), v(q);
    Rational su = 0;
    for (auto& x : u) {
      x = val(rng);
      su += x;
    }
    Rational rest = su;
    for (std::size_t j = 0; j + 1 < q; ++j) {
      v[j] = val(rng);
      rest -= v[j];
    }
    if (rest <= 0) continue;
    v[q - 1] = rest;
    auto spec = TransportSpec::classical(u, v);
    auto verts = enumerate_vertices(spec);
    for (const auto& t : verts) {
      EXPECT_TRUE(is_vertex(t));
      EXPECT_TRUE(is_vertex_basic_solution_test(t));
    }
    // Non-vertex points agree too: midpoints of distinct vertices.
    if (verts.size() >= 2) {
      Vector mid(spec.cells());
      for (std::size_t c = 0; c < mid.size(); ++c)
        mid[c] = (verts[0].values[c] + verts[1].values[c]) / 2;
      Table m(spec, mid);
      EXPECT_EQ(is_vertex(m), is_vertex_basic_solution_test(m));
    }
  }
}

TEST(Properties, BalinskiSpotCheck) {
  // Removing any dim-1 vertices keeps the graph connected (P_{3x3}:
  // remove all 3-subsets of its 12 vertices).
  auto g = polytope_graph(p33());
  const std::size_t n = g.vertices.size();
  const std::size_t k = dimension(p33()) - 1;
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                          std::size_t next) {
    if (pos == k) {
      std::vector<bool> removed(n, false);
      for (auto i : idx) removed[i] = true;
      std::size_t start = n;
      for (std::size_t i = 0; i < n; ++i)
        if (!removed[i]) {
          start = i;
          break;
        }
      std::vector<bool> seen(n, false);
      std::vector<std::size_t> stack{start};
      seen[start] = true;
      std::size_t count = 1;
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : g.adjacency[v])
          if (!removed[w] && !seen[w]) {
            seen[w] = true;
            ++count;
            stack.push_back(w);
          }
      }
      EXPECT_EQ(count, n - k);
      return;
    }
    for (std::size_t i = next; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

TEST(Errors, DegenerateAndGuards) {
  EXPECT_THROW(enumerate_vertices(TransportSpec::classical(vec({1}), vec({2}))),
               InfeasibleError);
  auto big = TransportSpec::axial(Vector(4, Q(12)), Vector(4, Q(12)),
                                  Vector(3, Q(16)));
  EXPECT_THROW(enumerate_vertices(big), GuardError);
}

}  // namespace
