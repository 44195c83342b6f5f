#ifndef TPOLY_VERTEX_ENUM_HPP
#define TPOLY_VERTEX_ENUM_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "tpoly/table.hpp"
#include "tpoly/transport.hpp"

namespace tpoly {

// ---------------------------------------------------------------------
// Northwest corner constructions.

/// Permuted northwest corner rule. Fills cell (sigma(p), tau(q)) with
/// min(u, v) of the remaining marginals and recurses on the reduced
/// problem; a tie recurses on the (p-1) x (q-1) subproblem. The output
/// is always a basic feasible solution; with generic marginals and
/// identity permutations it is the classical NW-corner vertex.
inline Table northwest_corner(const Vector& u, const Vector& v,
                              const std::vector<std::size_t>& sigma,
                              const std::vector<std::size_t>& tau) {
  const std::size_t p = u.size(), q = v.size();
  auto check_perm = [](const std::vector<std::size_t>& perm, std::size_t n) {
    if (perm.size() != n) return false;
    std::vector<bool> seen(n, false);
    for (auto x : perm) {
      if (x >= n || seen[x]) return false;
      seen[x] = true;
    }
    return true;
  };
  if (!check_perm(sigma, p) || !check_perm(tau, q))
    throw TpolyError("northwest_corner: invalid permutation");
  Rational su = 0, sv = 0;
  for (const auto& x : u) su += x;
  for (const auto& x : v) sv += x;
  if (su != sv) throw InfeasibleError("northwest_corner: marginal sums differ");

  Vector ru = u, rv = v;
  std::vector<std::size_t> rows(sigma), cols(tau);
  Vector vals(p * q, Rational(0));
  auto spec = TransportSpec::classical(u, v);
  while (!rows.empty() && !cols.empty()) {
    std::size_t i = rows.back(), j = cols.back();
    const Rational& a = ru[i];
    const Rational& b = rv[j];
    Rational fill = a < b ? a : b;
    vals[spec.cell_index(i, j)] = fill;
    if (a < b) {
      rv[j] -= a;
      rows.pop_back();
    } else if (b < a) {
      ru[i] -= b;
      cols.pop_back();
    } else {
      rows.pop_back();
      cols.pop_back();
    }
  }
  return Table(spec, vals);
}

inline Table northwest_corner(const Vector& u, const Vector& v) {
  std::vector<std::size_t> sigma(u.size()), tau(v.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) sigma[i] = i;
  for (std::size_t j = 0; j < tau.size(); ++j) tau[j] = j;
  return northwest_corner(u, v, sigma, tau);
}

/// The unique well-ordered vertex of a generic axial spec: fill
/// (p,q,s) with min(u_p, v_q, w_s), drop the exhausted plane, repeat.
/// The support is a monotone staircase from (1,1,1) to (p,q,s).
inline Table northwest_corner_axial(const TransportSpec& t) {
  if (t.kind != Kind::Axial3)
    throw TpolyError("northwest_corner_axial: axial specs only");
  Rational su = 0, sv = 0, sw = 0;
  for (const auto& x : t.u) su += x;
  for (const auto& x : t.v) sv += x;
  for (const auto& x : t.w) sw += x;
  if (su != sv || sv != sw)
    throw InfeasibleError("northwest_corner_axial: marginal sums differ");
  Vector ru = t.u, rv = t.v, rw = t.w;
  std::size_t i = t.p - 1, j = t.q - 1, k = t.s - 1;
  Vector vals(t.cells(), Rational(0));
  while (true) {
    Rational m = ru[i];
    if (rv[j] < m) m = rv[j];
    if (rw[k] < m) m = rw[k];
    int hits = (ru[i] == m) + (rv[j] == m) + (rw[k] == m);
    bool last = (i == 0 && j == 0 && k == 0);
    if (hits > 1 && !last)
      throw DegenerateError("northwest_corner_axial: tie (non-generic marginals)");
    vals[t.cell_index(i, j, k)] = m;
    if (last) break;
    ru[i] -= m;
    rv[j] -= m;
    rw[k] -= m;
    if (ru[i] == 0 && i > 0)
      --i;
    else if (rv[j] == 0 && j > 0)
      --j;
    else
      --k;
  }
  return Table(t, vals);
}

// ---------------------------------------------------------------------
// Enumeration.

namespace detail {

/// Basic solution of a classical spec on a spanning forest: peel
/// leaves, each leaf edge takes the remaining marginal of its node.
/// Returns nullopt when some entry goes negative.
inline std::optional<Vector> tree_solution(
    const TransportSpec& t, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  const std::size_t p = t.p, q = t.q, n = p + q;
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    incident[edges[e].first].push_back(e);
    incident[p + edges[e].second].push_back(e);
  }
  Vector residual(n);
  for (std::size_t i = 0; i < p; ++i) residual[i] = t.u[i];
  for (std::size_t j = 0; j < q; ++j) residual[p + j] = t.v[j];
  std::vector<std::size_t> degree(n);
  for (std::size_t vtx = 0; vtx < n; ++vtx) degree[vtx] = incident[vtx].size();
  std::vector<bool> edge_done(edges.size(), false);
  std::vector<std::size_t> stack;
  for (std::size_t vtx = 0; vtx < n; ++vtx)
    if (degree[vtx] == 1) stack.push_back(vtx);
  Vector vals(t.cells(), Rational(0));
  std::size_t processed = 0;
  while (!stack.empty()) {
    std::size_t vtx = stack.back();
    stack.pop_back();
    if (degree[vtx] != 1) continue;
    std::size_t e = 0;
    for (auto ei : incident[vtx])
      if (!edge_done[ei]) {
        e = ei;
        break;
      }
    const auto& [i, j] = edges[e];
    Rational x = residual[vtx];
    if (x < 0) return std::nullopt;
    vals[t.cell_index(i, j)] = x;
    std::size_t other = (vtx == i) ? p + j : i;
    residual[other] -= x;
    residual[vtx] = 0;
    edge_done[e] = true;
    --degree[vtx];
    --degree[other];
    ++processed;
    if (degree[other] == 1) stack.push_back(other);
  }
  if (processed != edges.size()) return std::nullopt;  // cycle: not a forest
  for (std::size_t vtx = 0; vtx < n; ++vtx)
    if (residual[vtx] != 0) return std::nullopt;
  for (const auto& x : vals)
    if (x < 0) return std::nullopt;
  return vals;
}

inline void spanning_trees_rec(std::size_t p, std::size_t q, std::size_t next_edge,
                               std::vector<std::pair<std::size_t, std::size_t>>& chosen,
                               UnionFind uf,
                               const std::function<void(
                                   const std::vector<std::pair<std::size_t, std::size_t>>&)>& emit) {
  const std::size_t total = p * q, need = p + q - 1;
  if (chosen.size() == need) {
    emit(chosen);
    return;
  }
  if (total - next_edge < need - chosen.size()) return;
  for (std::size_t e = next_edge; e < total; ++e) {
    std::size_t i = e / q, j = e % q;
    UnionFind uf2 = uf;
    if (!uf2.unite(i, p + j)) continue;
    chosen.push_back({i, j});
    spanning_trees_rec(p, q, e + 1, chosen, uf2, emit);
    chosen.pop_back();
  }
}

}  // namespace detail

/// Enumerates the vertices of a transportation polytope, deduplicated
/// and ordered lexicographically by value vector.
///
/// Classical specs enumerate spanning trees of K_{p,q} and keep the
/// feasible basic solutions. Axial and planar specs walk the vertex
/// graph by simplex pivots when the polytope is simple; if degeneracy
/// is detected they fall back to enumerating full-rank column subsets
/// (guarded by `max_cells`).
inline std::vector<Table> enumerate_vertices(const TransportSpec& t,
                                             std::size_t max_cells = 27);

namespace detail {

struct ReducedSystem {
  Matrix a;          // full system
  Vector b;
  Matrix a_red;      // independent rows only
  Vector b_red;
  std::vector<std::size_t> row_basis;
};

inline ReducedSystem reduce_system(const TransportSpec& t) {
  auto cs = build_constraints(t);
  ReducedSystem rs;
  rs.a = cs.a;
  rs.b = cs.b;
  auto ech = fraction_free_echelon(clear_row_denominators(cs.a.transposed()));
  rs.row_basis = ech.pivot_cols;
  rs.a_red = cs.a.select_rows(rs.row_basis);
  rs.b_red = Vector(rs.row_basis.size());
  for (std::size_t i = 0; i < rs.row_basis.size(); ++i)
    rs.b_red[i] = cs.b[rs.row_basis[i]];
  return rs;
}

/// BFS over the vertices of a simple polytope {Ax=b, x>=0} starting
/// from one vertex whose support is a basis. Throws DegenerateError on
/// any sign of degeneracy (zero basic value, ratio tie).
inline std::vector<Table> pivot_enumerate(const TransportSpec& t,
                                          const ReducedSystem& rs,
                                          const Table& start) {
  const std::size_t n = t.cells();
  const std::size_t r = rs.a_red.rows();
  auto supp0 = start.support();
  if (supp0.size() != r)
    throw DegenerateError("pivot_enumerate: start vertex is degenerate");

  std::map<std::vector<std::size_t>, std::size_t> seen;
  std::vector<Table> out;
  std::vector<std::vector<std::size_t>> frontier;
  seen[supp0] = 0;
  out.push_back(start);
  frontier.push_back(supp0);

  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const auto basis = frontier[head];
    const Vector base_vals = out[head].values;  // copy: out grows below
    Matrix ab = rs.a_red.select_cols(basis);
    Matrix inv = inverse(ab);
    std::vector<bool> basic(n, false);
    for (auto c : basis) basic[c] = true;
    for (std::size_t c = 0; c < n; ++c) {
      if (basic[c]) continue;
      // Direction of the edge where x_c enters: d_B = -inv * A_c.
      Vector db(r, Rational(0));
      for (std::size_t i = 0; i < r; ++i)
        if (rs.a_red(i, c) != 0)
          for (std::size_t kk = 0; kk < r; ++kk)
            db[kk] -= inv(kk, i) * rs.a_red(i, c);
      // Ratio test.
      std::size_t leave = r;
      Rational best;
      int ties = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if (db[i] >= 0) continue;
        Rational ratio = base_vals[basis[i]] / -db[i];
        if (leave == r || ratio < best) {
          leave = i;
          best = ratio;
          ties = 1;
        } else if (ratio == best) {
          ++ties;
        }
      }
      if (leave == r)
        throw TpolyError("pivot_enumerate: unbounded edge in a polytope");
      if (ties > 1 || best == 0)
        throw DegenerateError("pivot_enumerate: degenerate pivot");
      std::vector<std::size_t> nb;
      nb.reserve(r);
      for (std::size_t i = 0; i < r; ++i)
        if (i != leave) nb.push_back(basis[i]);
      nb.push_back(c);
      std::sort(nb.begin(), nb.end());
      if (seen.count(nb)) continue;
      Vector vals(n, Rational(0));
      for (std::size_t i = 0; i < r; ++i)
        vals[basis[i]] = base_vals[basis[i]] + best * db[i];
      vals[c] = best;
      vals[basis[leave]] = 0;
      seen[nb] = out.size();
      out.push_back(Table(t, vals));
      frontier.push_back(nb);
    }
  }
  return out;
}

/// Exhaustive basic-feasible-solution enumeration over full-rank column
/// subsets, with dependent prefixes pruned by an incremental echelon.
inline std::vector<Table> subset_enumerate(const TransportSpec& t,
                                           const ReducedSystem& rs) {
  const std::size_t n = t.cells();
  const std::size_t r = rs.a_red.rows();
  std::set<Vector> tables;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t next) {
    if (chosen.size() == r) {
      auto x = solve(rs.a_red.select_cols(chosen), rs.b_red);
      if (!x) return;
      Vector vals(n, Rational(0));
      bool ok = true;
      for (std::size_t i = 0; i < r; ++i) {
        if ((*x)[i] < 0) {
          ok = false;
          break;
        }
        vals[chosen[i]] = (*x)[i];
      }
      if (ok) tables.insert(vals);
      return;
    }
    if (n - next < r - chosen.size()) return;
    for (std::size_t c = next; c < n; ++c) {
      chosen.push_back(c);
      if (rank_01_columns(rs.a_red, chosen) == chosen.size()) rec(c + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  std::vector<Table> out;
  out.reserve(tables.size());
  for (const auto& vals : tables) out.push_back(Table(t, vals));
  return out;
}

/// A starting vertex for the pivot walk: the axial NW-corner vertex, or
/// a phase-1 basic feasible solution for planar specs.
inline Table start_vertex(const TransportSpec& t, const ReducedSystem& rs) {
  if (t.kind == Kind::Axial3) return northwest_corner_axial(t);
  // Optimal basic solutions of an LP are vertices; minimize a fixed
  // positive functional to land on one deterministically.
  const std::size_t n = t.cells();
  Vector cost(n);
  Rational base = 1;
  for (std::size_t c = 0; c < n; ++c) {
    base /= 3;
    cost[c] = base;
  }
  StandardLp lp(rs.a_red, rs.b_red, cost);
  if (lp.solve() != LpStatus::Optimal)
    throw InfeasibleError("start_vertex: empty polytope");
  return Table(t, lp.primal());
}

}  // namespace detail

inline std::vector<Table> enumerate_vertices(const TransportSpec& t,
                                             std::size_t max_cells) {
  if (!is_nonempty(t)) throw InfeasibleError("enumerate_vertices: empty spec");
  if (t.cells() > max_cells && t.kind != Kind::Classical)
    throw GuardError("enumerate_vertices: cell count exceeds guard");

  std::vector<Table> out;
  if (t.kind == Kind::Classical) {
    std::vector<std::pair<std::size_t, std::size_t>> chosen;
    std::set<Vector> tables;
    detail::spanning_trees_rec(
        t.p, t.q, 0, chosen, detail::UnionFind(t.p + t.q),
        [&](const std::vector<std::pair<std::size_t, std::size_t>>& tree) {
          auto vals = detail::tree_solution(t, tree);
          if (vals) tables.insert(*vals);
        });
    for (const auto& vals : tables) out.push_back(Table(t, vals));
    return out;
  }

  auto rs = detail::reduce_system(t);
  try {
    Table start = detail::start_vertex(t, rs);
    if (start.support().size() != rs.a_red.rows())
      throw DegenerateError("degenerate start vertex");
    out = detail::pivot_enumerate(t, rs, start);
    std::sort(out.begin(), out.end());
    return out;
  } catch (const DegenerateError&) {
    out = detail::subset_enumerate(t, rs);
    return out;  // set-ordered, already lexicographic
  }
}

// ---------------------------------------------------------------------
// Graph structure.

/// True iff the segment [t1,t2] is an edge: the face generated by the
/// union of the supports is one-dimensional (support-union nullity 1).
inline bool adjacent(const Table& t1, const Table& t2) {
  if (!(t1.spec == t2.spec)) throw TpolyError("adjacent: different specs");
  if (!is_vertex(t1) || !is_vertex(t2))
    throw TpolyError("adjacent: inputs must be vertices");
  if (t1.values == t2.values) return false;
  auto s1 = t1.support(), s2 = t2.support();
  std::vector<std::size_t> uni;
  std::set_union(s1.begin(), s1.end(), s2.begin(), s2.end(),
                 std::back_inserter(uni));
  auto cs = build_constraints(t1.spec);
  return uni.size() == detail::rank_01_columns(cs.a, uni) + 1;
}

/// Classical-only cross check: adjacency iff the union of the support
/// graphs contains a unique cycle.
inline bool adjacent_unique_cycle_test(const Table& t1, const Table& t2) {
  if (t1.spec.kind != Kind::Classical)
    throw TpolyError("unique-cycle test: classical only");
  if (t1.values == t2.values) return false;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& tt : {t1, t2})
    for (auto e : support_graph(tt)) edges.insert(e);
  // #independent cycles = #edges - #nodes + #components.
  detail::UnionFind uf(t1.spec.p + t1.spec.q);
  std::size_t merges = 0;
  for (const auto& [i, j] : edges)
    if (uf.unite(i, t1.spec.p + j)) ++merges;
  return edges.size() - merges == 1;
}

struct PolytopeGraph {
  std::vector<Table> vertices;
  std::vector<std::vector<std::size_t>> adjacency;
};

inline PolytopeGraph polytope_graph(const TransportSpec& t,
                                    std::size_t max_cells = 27) {
  PolytopeGraph g;
  g.vertices = enumerate_vertices(t, max_cells);
  g.adjacency.resize(g.vertices.size());
  auto cs = build_constraints(t);
  std::vector<std::vector<std::size_t>> supports;
  supports.reserve(g.vertices.size());
  for (const auto& vert : g.vertices) supports.push_back(vert.support());
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      std::vector<std::size_t> uni;
      std::set_union(supports[i].begin(), supports[i].end(),
                     supports[j].begin(), supports[j].end(),
                     std::back_inserter(uni));
      if (uni.size() == detail::rank_01_columns(cs.a, uni) + 1) {
        g.adjacency[i].push_back(j);
        g.adjacency[j].push_back(i);
      }
    }
  return g;
}

/// All-pairs BFS maximum. Throws on a disconnected graph, which would
/// contradict Balinski connectivity and signal an internal bug.
inline int diameter(const PolytopeGraph& g) {
  if (g.vertices.size() <= 1) return 0;
  int best = 0;
  const std::size_t n = g.vertices.size();
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::vector<std::size_t> queue{s};
    dist[s] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t x = queue[head];
      for (auto y : g.adjacency[x])
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          queue.push_back(y);
        }
    }
    for (auto d : dist) {
      if (d < 0) throw TpolyError("diameter: polytope graph disconnected");
      best = std::max(best, d);
    }
  }
  return best;
}

/// Number of geometric facets: cells whose zero-set face has affine
/// dimension exactly dim-1, with cells inducing the same face counted
/// once.
inline std::size_t count_facets(const TransportSpec& t,
                                std::size_t max_cells = 27) {
  auto verts = enumerate_vertices(t, max_cells);
  const int dim = static_cast<int>(dimension(t));
  std::set<std::vector<std::size_t>> faces;
  for (std::size_t c = 0; c < t.cells(); ++c) {
    std::vector<std::size_t> incident;
    std::vector<Vector> pts;
    for (std::size_t vi = 0; vi < verts.size(); ++vi)
      if (verts[vi].values[c] == 0) {
        incident.push_back(vi);
        pts.push_back(verts[vi].values);
      }
    if (incident.empty()) continue;
    if (affine_rank(pts) == dim - 1) faces.insert(incident);
  }
  return faces.size();
}

/// Simple and of maximal dimension: every vertex support has size
/// rank(A).
inline bool is_nondegenerate(const TransportSpec& t, std::size_t max_cells = 27) {
  if (!is_nonempty(t)) throw InfeasibleError("is_nondegenerate: empty spec");
  auto verts = enumerate_vertices(t, max_cells);
  auto cs = build_constraints(t);
  const std::size_t r = rank(cs.a);
  for (const auto& vert : verts)
    if (vert.support().size() != r) return false;
  return true;
}

/// Non-degenerate envelope of a spec: perturbs a feasible table by
/// pairwise-distinct powers of a small epsilon and recomputes the
/// marginals. Classical outputs are verified generic; 3-way outputs
/// are verified non-degenerate when the size guard allows.
inline TransportSpec perturb(const TransportSpec& t, std::size_t max_cells = 27) {
  auto rs = detail::reduce_system(t);
  std::vector<std::pair<Vector, Rational>> ge, eq;
  const std::size_t n = t.cells();
  for (std::size_t c = 0; c < n; ++c) {
    Vector e(n, Rational(0));
    e[c] = 1;
    ge.push_back({std::move(e), Rational(0)});
  }
  for (std::size_t i = 0; i < rs.a_red.rows(); ++i)
    eq.push_back({rs.a_red.row(i), rs.b_red[i]});
  auto x = feasible_point(ge, eq);
  if (!x) throw InfeasibleError("perturb: empty spec");

  Integer d = lcm_of_denominators(*x);
  for (const auto& bv : rs.b) d = lcm(d, denom(bv));
  Rational eps = Rational(1) / (Rational(4) * Rational(d) * Rational(n));
  for (int attempt = 0; attempt < 20; ++attempt, eps /= 16) {
    Vector vals = *x;
    Rational power = 1;
    for (std::size_t c = 0; c < n; ++c) {
      power *= eps;
      vals[c] += power;
    }
    TransportSpec cand;
    if (t.kind == Kind::Classical) {
      Vector u(t.p, Rational(0)), v(t.q, Rational(0));
      for (std::size_t i = 0; i < t.p; ++i)
        for (std::size_t j = 0; j < t.q; ++j) {
          u[i] += vals[t.cell_index(i, j)];
          v[j] += vals[t.cell_index(i, j)];
        }
      cand = TransportSpec::classical(u, v);
      if (is_generic_classical(cand.u, cand.v)) return cand;
      continue;
    }
    Vector u(t.p, Rational(0)), v(t.q, Rational(0)), w(t.s, Rational(0));
    Matrix U(t.q, t.s), V(t.p, t.s), W(t.p, t.q);
    for (std::size_t i = 0; i < t.p; ++i)
      for (std::size_t j = 0; j < t.q; ++j)
        for (std::size_t k = 0; k < t.s; ++k) {
          const Rational& val = vals[t.cell_index(i, j, k)];
          u[i] += val;
          v[j] += val;
          w[k] += val;
          U(j, k) += val;
          V(i, k) += val;
          W(i, j) += val;
        }
    cand = t.kind == Kind::Axial3 ? TransportSpec::axial(u, v, w)
                                  : TransportSpec::planar(U, V, W);
    if (t.cells() <= max_cells) {
      try {
        if (is_nondegenerate(cand, max_cells)) return cand;
      } catch (const GuardError&) {
        return cand;
      }
      continue;
    }
    return cand;
  }
  throw TpolyError("perturb: failed to reach a generic envelope");
}

}  // namespace tpoly

#endif
