#ifndef TPOLY_HULL_HPP
#define TPOLY_HULL_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "tpoly/linalg.hpp"
#include "tpoly/lp.hpp"

namespace tpoly {

namespace detail {

/// Coordinate columns whose projection is injective on the affine hull
/// of the points (the pivot columns of the difference matrix).
inline std::vector<std::size_t> affine_coordinate_basis(
    const std::vector<Vector>& points) {
  Matrix diffs(points.size() - 1, points[0].size());
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t j = 0; j < points[0].size(); ++j)
      diffs(i - 1, j) = points[i][j] - points[0][j];
  auto ech = fraction_free_echelon(clear_row_denominators(diffs));
  return ech.pivot_cols;
}

inline std::vector<Vector> project_to_coords(
    const std::vector<Vector>& points, const std::vector<std::size_t>& coords) {
  std::vector<Vector> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    Vector q(coords.size());
    for (std::size_t j = 0; j < coords.size(); ++j) q[j] = p[coords[j]];
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace detail

/// Every maximal index set S such that aff(points[S]) is a hyperplane
/// of the affine span with all remaining points weakly on one side.
/// Enumerates d-subsets and merges coplanar ones, so non-simplicial
/// facets come out as a single vertex set.
/// Desk-scale guard: affine dimension <= 6 and at most 20 points.
inline std::vector<std::vector<std::size_t>> facets_brute_force(
    const std::vector<Vector>& points) {
  const std::size_t n = points.size();
  if (n > 20) throw GuardError("facets_brute_force: more than 20 points");
  const int d = affine_rank(points);
  if (d < 1)
    throw TpolyError("facets_brute_force: degenerate input (affine dim < 1)");
  if (d > 6) throw GuardError("facets_brute_force: affine dimension > 6");

  auto coords = detail::affine_coordinate_basis(points);
  auto pts = detail::project_to_coords(points, coords);

  std::set<std::vector<std::size_t>> facets;
  // Iterate over all d-subsets.
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) idx[i] = i;
  while (true) {
    // Hyperplane through the subset, if it spans one.
    Matrix diffs(d - 1, d);
    for (int i = 1; i < d; ++i)
      for (int j = 0; j < d; ++j)
        diffs(i - 1, j) = pts[idx[i]][j] - pts[idx[0]][j];
    Matrix ker = kernel_basis(diffs);
    if (ker.cols() == 1) {
      Vector normal = ker.col(0);
      Rational offset = dot(normal, pts[idx[0]]);
      int pos = 0, neg = 0;
      std::vector<std::size_t> on;
      for (std::size_t q = 0; q < n; ++q) {
        Rational v = dot(normal, pts[q]) - offset;
        if (v > 0)
          ++pos;
        else if (v < 0)
          ++neg;
        else
          on.push_back(q);
      }
      // Points evaluating to zero all lie on the hyperplane, so their
      // affine span is exactly d-1 dimensional; no further check needed.
      if (pos == 0 || neg == 0) facets.insert(on);
    }
    // Next subset.
    int i = d - 1;
    while (i >= 0 && idx[i] == n - d + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return std::vector<std::vector<std::size_t>>(facets.begin(), facets.end());
}

/// Ridge adjacency between facets: shared vertices span an affine
/// space of dimension exactly dim-2.
inline std::vector<std::vector<std::size_t>> facet_adjacency(
    const std::vector<Vector>& points,
    const std::vector<std::vector<std::size_t>>& facets) {
  const int d = affine_rank(points);
  std::vector<std::vector<std::size_t>> adj(facets.size());
  for (std::size_t i = 0; i < facets.size(); ++i)
    for (std::size_t j = i + 1; j < facets.size(); ++j) {
      std::vector<std::size_t> shared;
      std::set_intersection(facets[i].begin(), facets[i].end(),
                            facets[j].begin(), facets[j].end(),
                            std::back_inserter(shared));
      if (shared.size() < static_cast<std::size_t>(d) - 1) continue;
      std::vector<Vector> sel;
      for (auto q : shared) sel.push_back(points[q]);
      if (affine_rank(sel) == d - 2) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  return adj;
}

/// Vertices of the polytope {x : a.x >= b for all rows}, by brute force
/// over row subsets. Intended for small systems (wedge checks etc).
inline std::vector<Vector> h_polytope_vertices(
    const std::vector<std::pair<Vector, Rational>>& rows) {
  if (rows.empty()) return {};
  const std::size_t dim = rows[0].first.size();
  const std::size_t m = rows.size();
  if (dim > 8 || m > 26) throw GuardError("h_polytope_vertices: too large");
  std::set<Vector> verts;
  std::vector<std::size_t> idx(dim);
  for (std::size_t i = 0; i < dim; ++i) idx[i] = i;
  while (true) {
    Matrix a(dim, dim);
    Vector b(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) a(i, j) = rows[idx[i]].first[j];
      b[i] = rows[idx[i]].second;
    }
    if (rank(a) == dim) {
      auto x = solve(a, b);
      if (x) {
        bool ok = true;
        for (const auto& [av, bv] : rows)
          if (dot(av, *x) < bv) {
            ok = false;
            break;
          }
        if (ok) verts.insert(*x);
      }
    }
    int i = static_cast<int>(dim) - 1;
    while (i >= 0 && idx[i] == m - dim + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (std::size_t j = i + 1; j < dim; ++j) idx[j] = idx[j - 1] + 1;
  }
  return std::vector<Vector>(verts.begin(), verts.end());
}

/// Graph of a (possibly non-simple) H-polytope: two vertices are
/// adjacent iff their common tight rows span an affine line's worth of
/// equations, i.e. rank dim-1.
inline std::vector<std::vector<std::size_t>> h_polytope_graph(
    const std::vector<std::pair<Vector, Rational>>& rows,
    const std::vector<Vector>& verts) {
  const std::size_t dim = rows.empty() ? 0 : rows[0].first.size();
  std::vector<std::vector<std::size_t>> tight(verts.size());
  for (std::size_t v = 0; v < verts.size(); ++v)
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (dot(rows[r].first, verts[v]) == rows[r].second) tight[v].push_back(r);
  std::vector<std::vector<std::size_t>> adj(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      std::vector<std::size_t> shared;
      std::set_intersection(tight[i].begin(), tight[i].end(), tight[j].begin(),
                            tight[j].end(), std::back_inserter(shared));
      if (shared.size() < dim - 1) continue;
      Matrix a(shared.size(), dim);
      for (std::size_t k = 0; k < shared.size(); ++k)
        for (std::size_t c = 0; c < dim; ++c) a(k, c) = rows[shared[k]].first[c];
      if (rank(a) == dim - 1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  return adj;
}

/// All-pairs BFS maximum over a connected adjacency-list graph.
inline int graph_diameter(const std::vector<std::vector<std::size_t>>& adj) {
  int best = 0;
  const std::size_t n = adj.size();
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::vector<std::size_t> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t v = queue[head];
      for (auto w : adj[v])
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
    for (auto d : dist) {
      if (d < 0) throw TpolyError("graph_diameter: disconnected graph");
      best = std::max(best, d);
    }
  }
  return best;
}

inline int bfs_distance(const std::vector<std::vector<std::size_t>>& adj,
                        std::size_t from, std::size_t to) {
  std::vector<int> dist(adj.size(), -1);
  std::vector<std::size_t> queue{from};
  dist[from] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t v = queue[head];
    if (v == to) return dist[v];
    for (auto w : adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return -1;
}

}  // namespace tpoly

#endif
