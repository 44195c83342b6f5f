#ifndef TPOLY_HIRSCH_HPP
#define TPOLY_HIRSCH_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tpoly/axial_path.hpp"
#include "tpoly/hull.hpp"
#include "tpoly/vertex_enum.hpp"

namespace tpoly {

/// The nine vertices of the simplicial Klee-Walkup polytope Q4^D, in
/// the order a, b, c, d, e, f, g, h, w.
inline std::vector<Vector> klee_walkup_points() {
  auto mk = [](long x1, long x2, long x3, long x4) {
    return Vector{Rational(x1), Rational(x2), Rational(x3), Rational(x4)};
  };
  return {mk(-3, 3, 1, 2),  mk(3, -3, 1, 2),  mk(2, -1, 1, 3),
          mk(-2, 1, 1, 3),  mk(3, 3, -1, 2),  mk(-3, -3, -1, 2),
          mk(-1, -2, -1, 3), mk(1, 2, -1, 3), mk(0, 0, 0, -2)};
}

/// BFS distance between two facets in the ridge-adjacency (dual) graph
/// of conv(points).
inline int dual_graph_distance(const std::vector<Vector>& points,
                               const std::vector<std::size_t>& f1,
                               const std::vector<std::size_t>& f2) {
  auto facets = facets_brute_force(points);
  auto find = [&](const std::vector<std::size_t>& f) {
    auto key = f;
    std::sort(key.begin(), key.end());
    for (std::size_t i = 0; i < facets.size(); ++i)
      if (facets[i] == key) return i;
    throw TpolyError("dual_graph_distance: index set is not a facet");
  };
  std::size_t i1 = find(f1), i2 = find(f2);
  auto adj = facet_adjacency(points, facets);
  int d = bfs_distance(adj, i1, i2);
  if (d < 0) throw TpolyError("dual_graph_distance: dual graph disconnected");
  return d;
}

// ---------------------------------------------------------------------
// Wedge (simple side).

/// Wedge of the H-polytope {x : a.x >= b} over its k-th facet: one more
/// variable t, one more facet, with rows (a_i, 0), t >= 0, and
/// (a_k, -1) >= b_k.
inline std::vector<std::pair<Vector, Rational>> wedge(
    const std::vector<std::pair<Vector, Rational>>& rows, std::size_t k) {
  if (k >= rows.size()) throw TpolyError("wedge: no such inequality");
  const std::size_t dim = rows[0].first.size();
  // The chosen inequality must be facet-defining: its tight vertices
  // span an affine space of dimension dim-1.
  auto verts = h_polytope_vertices(rows);
  if (verts.empty()) throw TpolyError("wedge: empty polytope");
  {
    std::vector<Vector> tight;
    for (const auto& v : verts)
      if (dot(rows[k].first, v) == rows[k].second) tight.push_back(v);
    if (tight.empty() || affine_rank(tight) != static_cast<int>(dim) - 1)
      throw TpolyError("wedge: chosen inequality is not facet-defining");
  }
  std::vector<std::pair<Vector, Rational>> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Vector row = rows[i].first;
    row.push_back(i == k ? Rational(-1) : Rational(0));
    out.push_back({std::move(row), rows[i].second});
  }
  Vector tpos(dim + 1, Rational(0));
  tpos[dim] = 1;
  out.push_back({std::move(tpos), Rational(0)});
  return out;
}

// ---------------------------------------------------------------------
// One-point suspension (simplicial side).

/// An abstract simplicial complex given by its maximal faces.
struct SimplicialComplexData {
  std::vector<std::set<std::string>> maximal;

  bool pure() const {
    for (const auto& f : maximal)
      if (f.size() != maximal.front().size()) return false;
    return true;
  }
};

namespace hirsch_detail {

inline std::vector<std::set<std::string>> maximalize(
    std::vector<std::set<std::string>> faces) {
  std::vector<std::set<std::string>> out;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < faces.size() && maximal; ++j) {
      if (i == j) continue;
      if (std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(),
                        faces[i].end()) &&
          faces[j] != faces[i])
        maximal = false;
      if (i > j && faces[j] == faces[i]) maximal = false;  // dedupe
    }
    if (maximal) out.push_back(faces[i]);
  }
  return out;
}

inline std::vector<std::set<std::string>> antistar_max(
    const SimplicialComplexData& l, const std::string& w) {
  std::vector<std::set<std::string>> faces;
  for (auto f : l.maximal) {
    f.erase(w);
    faces.push_back(std::move(f));
  }
  return maximalize(std::move(faces));
}

inline std::vector<std::set<std::string>> link_max(
    const SimplicialComplexData& l, const std::string& w) {
  std::vector<std::set<std::string>> faces;
  for (auto f : l.maximal)
    if (f.count(w)) {
      f.erase(w);
      faces.push_back(std::move(f));
    }
  return maximalize(std::move(faces));
}

}  // namespace hirsch_detail

/// One-point suspension S_w(L) = (ast(w)*w1) u (ast(w)*w2) u
/// (lk(w)*w1w2), with new vertices labelled w_1 and w_2.
inline SimplicialComplexData one_point_suspension(const SimplicialComplexData& l,
                                                  const std::string& w) {
  bool known = false;
  for (const auto& f : l.maximal)
    if (f.count(w)) known = true;
  if (!known) throw TpolyError("one_point_suspension: unknown vertex");
  auto ast = hirsch_detail::antistar_max(l, w);
  auto lk = hirsch_detail::link_max(l, w);
  std::string w1 = w + "_1", w2 = w + "_2";
  std::vector<std::set<std::string>> faces;
  for (auto f : ast) {
    auto g = f;
    g.insert(w1);
    faces.push_back(std::move(g));
    f.insert(w2);
    faces.push_back(std::move(f));
  }
  for (auto f : lk) {
    f.insert(w1);
    f.insert(w2);
    faces.push_back(std::move(f));
  }
  SimplicialComplexData out;
  out.maximal = hirsch_detail::maximalize(std::move(faces));
  return out;
}

/// Closed formula for the k-fold iterated suspension:
/// (ast(w) * boundary(Delta_k)) u (lk(w) * Delta_k) on new vertices
/// w_1 ... w_{k+1}.
inline SimplicialComplexData one_point_suspension_iterated(
    const SimplicialComplexData& l, const std::string& w, std::size_t k) {
  auto ast = hirsch_detail::antistar_max(l, w);
  auto lk = hirsch_detail::link_max(l, w);
  std::vector<std::string> simplex;
  for (std::size_t i = 0; i <= k; ++i)
    simplex.push_back(w + "_" + std::to_string(i + 1));
  std::vector<std::set<std::string>> faces;
  for (const auto& f : ast)
    for (std::size_t drop = 0; drop <= k; ++drop) {
      auto g = f;
      for (std::size_t i = 0; i <= k; ++i)
        if (i != drop) g.insert(simplex[i]);
      faces.push_back(std::move(g));
    }
  for (const auto& f : lk) {
    auto g = f;
    for (const auto& s : simplex) g.insert(s);
    faces.push_back(std::move(g));
  }
  SimplicialComplexData out;
  out.maximal = hirsch_detail::maximalize(std::move(faces));
  return out;
}

// ---------------------------------------------------------------------
// Hirsch-sharp generalized Birkhoff pairs.

/// Two vertices of the p x q generalized Birkhoff polytope at distance
/// >= p+q-1: the identity NW-corner vertex and the half-rotation
/// NW-corner vertex (supports disjoint when q > 2p; the (3,5) instance
/// uses the explicitly printed permutations).
inline std::pair<Table, Table> hirsch_sharp_pair(std::size_t p, std::size_t q) {
  if (std::gcd(p, q) != 1 || std::min(p, q) < 3)
    throw TpolyError("hirsch_sharp_pair: need gcd(p,q) = 1 and min(p,q) >= 3");
  Vector u(p, Rational(static_cast<long>(q)));
  Vector v(q, Rational(static_cast<long>(p)));
  Table first = northwest_corner(u, v);
  std::vector<std::size_t> sigma(p), tau(q);
  for (std::size_t i = 0; i < p; ++i) sigma[i] = i;
  if (q > 2 * p) {
    // Half rotation: odd q sends position j to j + (q-1)/2 mod q,
    // even q to j + q/2 mod q.
    std::size_t shift = q % 2 == 1 ? (q - 1) / 2 : q / 2;
    for (std::size_t j = 0; j < q; ++j) tau[j] = (j + shift) % q;
  } else if (p == 3 && q == 5) {
    sigma = {1, 2, 0};
    tau = {4, 0, 1, 2, 3};
  } else {
    throw TpolyError(
        "hirsch_sharp_pair: only q > 2p and the (3,5) instance are supported");
  }
  Table second = northwest_corner(u, v, sigma, tau);
  return {first, second};
}

// ---------------------------------------------------------------------
// The p x 2 Hirsch walk via side signatures.

/// Side signature of a p x 2 vertex after normalizing the first column
/// to the unit cube: '0' when x_{i,1} = 0, '1' when x_{i,1} = u_i, '*'
/// in between.
inline std::string side_signature(const Table& t) {
  if (t.spec.kind != Kind::Classical || t.spec.q != 2)
    throw TpolyError("side_signature: p x 2 tables only");
  std::string sig(t.spec.p, '*');
  for (std::size_t i = 0; i < t.spec.p; ++i) {
    Rational x = t.values[t.spec.cell_index(i, 0)];
    if (x == 0)
      sig[i] = '0';
    else if (x == t.spec.u[i])
      sig[i] = '1';
  }
  return sig;
}

inline int hamming_signature_distance(const std::string& a, const std::string& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) ++d;
  return d;
}

namespace hirsch_detail {

/// The neighbor of a p x 2 vertex obtained by pivoting on row j (which
/// must carry a 0/1 signature); the unique fractional row compensates.
inline Table px2_pivot(const Table& t, std::size_t star, std::size_t j) {
  const auto& spec = t.spec;
  Vector vals = t.values;
  Rational xj1 = vals[spec.cell_index(j, 0)];
  bool from_zero = xj1 == 0;
  // Moving row j toward the opposite bound; row `star` compensates.
  Rational cap_j = spec.u[j];
  Rational cap_star = from_zero ? vals[spec.cell_index(star, 0)]
                                : vals[spec.cell_index(star, 1)];
  if (cap_j == cap_star)
    throw DegenerateError("px2_pivot: tie in the ratio test");
  Rational delta = cap_j < cap_star ? cap_j : cap_star;
  Rational s = from_zero ? 1 : -1;
  vals[spec.cell_index(j, 0)] += s * delta;
  vals[spec.cell_index(j, 1)] -= s * delta;
  vals[spec.cell_index(star, 0)] -= s * delta;
  vals[spec.cell_index(star, 1)] += s * delta;
  return Table(spec, vals);
}

}  // namespace hirsch_detail

/// Pivot walk between two vertices of a generic p x 2 polytope that
/// strictly decreases the Hamming distance of side signatures at every
/// step; its length is bounded by n - d with n the facet count and
/// d = p - 2.
inline std::vector<PivotStep> px2_path(const Table& t1, const Table& t2) {
  if (!(t1.spec == t2.spec)) throw TpolyError("px2_path: different specs");
  const auto& spec = t1.spec;
  if (spec.kind != Kind::Classical || spec.q != 2)
    throw TpolyError("px2_path: p x 2 specs only");
  if (!is_generic_classical(spec.u, spec.v))
    throw DegenerateError("px2_path: spec is not generic");
  if (!is_vertex(t1) || !is_vertex(t2))
    throw TpolyError("px2_path: inputs must be vertices");

  std::string target = side_signature(t2);
  std::vector<PivotStep> steps;
  Table cur = t1;
  while (cur.values != t2.values) {
    std::string sig = side_signature(cur);
    std::size_t star = sig.find('*');
    if (star == std::string::npos)
      throw DegenerateError("px2_path: vertex without a fractional row");
    int h = hamming_signature_distance(sig, target);
    // A pivot moves one 0/1 row toward its opposite bound; it either
    // flips that row or hands the star over to it, and can improve the
    // Hamming distance by one or two. Take the best improving pivot.
    std::size_t best_j = spec.p;
    int best_h = h;
    for (std::size_t j = 0; j < spec.p; ++j) {
      if (j == star) continue;
      Table next = hirsch_detail::px2_pivot(cur, star, j);
      int nh = hamming_signature_distance(side_signature(next), target);
      if (nh < best_h) {
        best_h = nh;
        best_j = j;
      }
    }
    if (best_j == spec.p)
      throw TpolyError("px2_path: no Hamming-decreasing pivot exists");
    Table next = hirsch_detail::px2_pivot(cur, star, best_j);
    auto sa = cur.support(), sb = next.support();
    std::vector<std::size_t> ent, lvg;
    std::set_difference(sb.begin(), sb.end(), sa.begin(), sa.end(),
                        std::back_inserter(ent));
    std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                        std::back_inserter(lvg));
    PivotStep step;
    step.entering = ent.size() == 1 ? ent[0] : 0;
    step.leaving = lvg.size() == 1 ? lvg[0] : 0;
    step.from = cur;
    step.to = next;
    steps.push_back(step);
    cur = std::move(next);
  }
  return steps;
}

}  // namespace tpoly

#endif
