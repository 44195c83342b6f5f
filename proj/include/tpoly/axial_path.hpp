#ifndef TPOLY_AXIAL_PATH_HPP
#define TPOLY_AXIAL_PATH_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "tpoly/vertex_enum.hpp"

namespace tpoly {

/// One simplex pivot along an edge of the polytope.
struct PivotStep {
  std::size_t entering = 0;  // cell index entering the support
  std::size_t leaving = 0;   // cell index leaving the support
  Table from, to;
};

/// A vertex of an axial polytope together with the level z at which it
/// is well-ordered: levels z..p+q+s each hold exactly one support
/// triplet, those triplets form a chain, and all other support cells
/// are coordinatewise below the level-z triplet.
struct LevelState {
  Table vertex;
  std::size_t z = 3;
  std::vector<std::size_t> staircase_prefix;  // support cells with sum >= z
};

namespace axial_detail {

using Cell = std::array<std::size_t, 3>;  // 0-based (i,j,k)

inline std::size_t level(const Cell& c) { return c[0] + c[1] + c[2] + 3; }

inline bool dominated(const Cell& a, const Cell& b) {  // a <= b coordinatewise
  return a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
}

inline std::vector<Cell> support_cells(const Table& t) {
  std::vector<Cell> out;
  for (auto c : t.support()) out.push_back(t.spec.cell_of(c));
  return out;
}

}  // namespace axial_detail

/// Minimum z in [3, p+q+s] at which t is well-ordered starting at z, or
/// nullopt when no level qualifies (exactly when (p,q,s) is not in the
/// support).
inline std::optional<std::size_t> well_ordered_level(const Table& t) {
  using namespace axial_detail;
  if (t.spec.kind != Kind::Axial3)
    throw TpolyError("well_ordered_level: axial tables only");
  if (!is_vertex(t)) throw TpolyError("well_ordered_level: not a vertex");
  const std::size_t top = t.spec.p + t.spec.q + t.spec.s;
  auto cells = support_cells(t);
  for (std::size_t z = 3; z <= top; ++z) {
    // Exactly one support cell per level y in [z, top], forming a chain.
    std::vector<Cell> chain;
    bool ok = true;
    for (std::size_t y = z; y <= top && ok; ++y) {
      const Cell* found = nullptr;
      for (const auto& c : cells)
        if (level(c) == y) {
          if (found) {
            ok = false;
            break;
          }
          found = &c;
        }
      if (!found) ok = false;
      if (ok) chain.push_back(*found);
    }
    if (!ok) continue;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (!dominated(chain[i], chain[i + 1])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (const auto& c : cells)
      if (level(c) < z && !dominated(c, chain.front())) {
        ok = false;
        break;
      }
    if (ok) return z;
  }
  return std::nullopt;
}

inline LevelState make_level_state(const Table& t) {
  auto z = well_ordered_level(t);
  if (!z)
    throw TpolyError("make_level_state: top corner not in the support");
  LevelState st;
  st.vertex = t;
  st.z = *z;
  for (auto c : t.support()) {
    auto cell = t.spec.cell_of(c);
    if (cell[0] + cell[1] + cell[2] + 3 >= st.z) st.staircase_prefix.push_back(c);
  }
  return st;
}

namespace axial_detail {

/// Simplex pivot that inserts `cell` into the support of a
/// non-degenerate vertex: the unique edge direction supported on
/// supp(t) + {cell} is followed until the (unique) blocking cell hits
/// zero.
inline PivotStep pivot_insert(const Table& t, std::size_t cell) {
  auto supp = t.support();
  auto rs = tpoly::detail::reduce_system(t.spec);
  const std::size_t r = rs.a_red.rows();
  if (supp.size() != r)
    throw DegenerateError("pivot_insert: degenerate vertex");
  Matrix ab = rs.a_red.select_cols(supp);
  Vector rhs(r);
  for (std::size_t i = 0; i < r; ++i) rhs[i] = -rs.a_red(i, cell);
  auto ds = solve(ab, rhs);
  if (!ds) throw TpolyError("pivot_insert: singular support basis");
  std::size_t leave = r;
  Rational best;
  int ties = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if ((*ds)[i] >= 0) continue;
    Rational ratio = t.values[supp[i]] / -(*ds)[i];
    if (leave == r || ratio < best) {
      leave = i;
      best = ratio;
      ties = 1;
    } else if (ratio == best) {
      ++ties;
    }
  }
  if (leave == r) throw TpolyError("pivot_insert: unbounded direction");
  if (ties > 1 || best == 0)
    throw DegenerateError("pivot_insert: degenerate pivot");
  Vector vals = t.values;
  for (std::size_t i = 0; i < r; ++i) vals[supp[i]] += best * (*ds)[i];
  vals[cell] = best;
  vals[supp[leave]] = 0;
  PivotStep step;
  step.entering = cell;
  step.leaving = supp[leave];
  step.from = t;
  step.to = Table(t.spec, vals);
  return step;
}

struct SSets {
  std::vector<Cell> s1, s2, s3;          // per axis, excluding alpha
  std::vector<Cell> r1, r2, r3;          // exclusive members
  std::vector<Cell> r12, r13, r23;       // pairwise members
};

inline SSets classify(const Table& t, const Cell& alpha) {
  SSets s;
  for (const auto& c : support_cells(t)) {
    if (c == alpha || !dominated(c, alpha)) continue;
    bool in1 = c[0] == alpha[0], in2 = c[1] == alpha[1], in3 = c[2] == alpha[2];
    if (in1) s.s1.push_back(c);
    if (in2) s.s2.push_back(c);
    if (in3) s.s3.push_back(c);
    if (in1 && in2)
      s.r12.push_back(c);
    else if (in1 && in3)
      s.r13.push_back(c);
    else if (in2 && in3)
      s.r23.push_back(c);
    else if (in1)
      s.r1.push_back(c);
    else if (in2)
      s.r2.push_back(c);
    else if (in3)
      s.r3.push_back(c);
  }
  return s;
}

inline Cell lex_min(const std::vector<Cell>& v) {
  return *std::min_element(v.begin(), v.end());
}
inline Cell lex_max(const std::vector<Cell>& v) {
  return *std::max_element(v.begin(), v.end());
}

/// The quadrilateral pivot of the S-reduction: clear the smaller of
/// x_beta, x_gamma while opening their coordinatewise minimum.
inline PivotStep rectangle_pivot(const Table& t, const Cell& alpha,
                                 const Cell& beta, const Cell& gamma) {
  const auto& spec = t.spec;
  Cell delta = {std::min(beta[0], gamma[0]), std::min(beta[1], gamma[1]),
                std::min(beta[2], gamma[2])};
  Cell top = {std::max(beta[0], gamma[0]), std::max(beta[1], gamma[1]),
              std::max(beta[2], gamma[2])};
  if (!(top == alpha))
    throw TpolyError("rectangle_pivot: beta,gamma do not span alpha");
  std::size_t ia = spec.cell_index(alpha[0], alpha[1], alpha[2]);
  std::size_t ib = spec.cell_index(beta[0], beta[1], beta[2]);
  std::size_t ig = spec.cell_index(gamma[0], gamma[1], gamma[2]);
  std::size_t id = spec.cell_index(delta[0], delta[1], delta[2]);
  if (t.values[id] != 0)
    throw TpolyError("rectangle_pivot: delta already in the support");
  const Rational& xb = t.values[ib];
  const Rational& xg = t.values[ig];
  if (xb == xg)
    throw DegenerateError("rectangle_pivot: tie between x_beta and x_gamma");
  Rational m = xb < xg ? xb : xg;
  Vector vals = t.values;
  vals[ia] += m;
  vals[id] += m;
  vals[ib] -= m;
  vals[ig] -= m;
  PivotStep step;
  step.entering = id;
  step.leaving = xb < xg ? ib : ig;
  step.from = t;
  step.to = Table(spec, vals);
  return step;
}

/// Vertices of the polytope with support inside a given cell set (a
/// low-dimensional face), by removing pairs of cells from the set.
inline std::vector<Table> face_vertices(const TransportSpec& spec,
                                        const std::vector<std::size_t>& face_supp,
                                        const tpoly::detail::ReducedSystem& rs) {
  const std::size_t r = rs.a_red.rows();
  std::set<Vector> seen;
  std::vector<Table> out;
  const std::size_t m = face_supp.size();
  for (std::size_t drop1 = 0; drop1 < m; ++drop1)
    for (std::size_t drop2 = drop1 + 1; drop2 < m; ++drop2) {
      std::vector<std::size_t> cols;
      for (std::size_t i = 0; i < m; ++i)
        if (i != drop1 && i != drop2) cols.push_back(face_supp[i]);
      if (cols.size() != r) continue;
      if (tpoly::detail::rank_01_columns(rs.a_red, cols) != r) continue;
      auto x = solve(rs.a_red.select_cols(cols), rs.b_red);
      if (!x) continue;
      bool ok = true;
      Vector vals(spec.cells(), Rational(0));
      for (std::size_t i = 0; i < r; ++i) {
        if ((*x)[i] < 0) {
          ok = false;
          break;
        }
        vals[cols[i]] = (*x)[i];
      }
      if (ok && seen.insert(vals).second) out.push_back(Table(spec, vals));
    }
  return out;
}

}  // namespace axial_detail

/// One application of the level-reduction lemma: from a vertex
/// well-ordered starting at z >= 5, pivot (at most 2(z-4) edges) to a
/// vertex well-ordered starting at z-1.
inline std::pair<LevelState, std::vector<PivotStep>> reduce_level(
    const LevelState& state) {
  using namespace axial_detail;
  if (state.z < 5) throw TpolyError("reduce_level: requires z >= 5");
  const TransportSpec& spec = state.vertex.spec;
  Table cur = state.vertex;

  // The level-z staircase cell is the local top corner.
  Cell alpha{};
  {
    bool found = false;
    for (const auto& c : support_cells(cur))
      if (level(c) == state.z) {
        alpha = c;
        found = true;
        break;
      }
    if (!found) throw TpolyError("reduce_level: level cell missing");
  }

  std::vector<PivotStep> steps;
  const std::size_t budget = 2 * (state.z - 4);
  auto rs = tpoly::detail::reduce_system(spec);

  auto emit = [&](PivotStep s) {
    cur = s.to;
    steps.push_back(std::move(s));
    if (steps.size() > budget)
      throw TpolyError("reduce_level: level budget 2(z-4) exceeded");
  };

  while (true) {
    SSets ss = classify(cur, alpha);
    if (ss.s1.empty() || ss.s2.empty() || ss.s3.empty()) break;

    // Case (1): some exclusive R_i together with the opposite R_jk.
    bool done = false;
    const std::array<std::pair<const std::vector<Cell>*, const std::vector<Cell>*>, 3>
        case1 = {{{&ss.r1, &ss.r23}, {&ss.r2, &ss.r13}, {&ss.r3, &ss.r12}}};
    for (const auto& [ri, rjk] : case1) {
      if (!ri->empty() && !rjk->empty()) {
        emit(rectangle_pivot(cur, alpha, lex_min(*rjk), lex_min(*ri)));
        done = true;
        break;
      }
    }
    if (done) continue;

    if (!ss.r12.empty() && !ss.r13.empty() && !ss.r23.empty()) {
      // Case (2): a rectangle pivot on R_13 x R_23 moves their minimum
      // into R_3, after which case (1) applies.
      emit(rectangle_pivot(cur, alpha, lex_min(ss.r13), lex_min(ss.r23)));
      continue;
    }

    if (!ss.r1.empty() && !ss.r2.empty() && !ss.r3.empty()) {
      // Case (3): the six-cell move. Chosen cells reproduce the
      // printed example: lexicographically largest in each class.
      Cell beta = lex_max(ss.r1), gamma = lex_max(ss.r2), delta = lex_max(ss.r3);
      Cell eps1 = {gamma[0], beta[1], beta[2]};
      Cell eps2 = {delta[0], delta[1], gamma[2]};
      std::size_t ia = spec.cell_index(alpha[0], alpha[1], alpha[2]);
      std::size_t ib = spec.cell_index(beta[0], beta[1], beta[2]);
      std::size_t ig = spec.cell_index(gamma[0], gamma[1], gamma[2]);
      std::size_t idl = spec.cell_index(delta[0], delta[1], delta[2]);
      std::size_t ie1 = spec.cell_index(eps1[0], eps1[1], eps1[2]);
      std::size_t ie2 = spec.cell_index(eps2[0], eps2[1], eps2[2]);
      Rational m = std::min({cur.values[ib], cur.values[ig], cur.values[idl]});
      int hits = (cur.values[ib] == m) + (cur.values[ig] == m) +
                 (cur.values[idl] == m);
      if (hits != 1)
        throw DegenerateError("reduce_level: tie among beta/gamma/delta");
      std::size_t cleared = cur.values[ib] == m ? ib
                            : cur.values[ig] == m ? ig
                                                  : idl;
      bool e1in = cur.values[ie1] > 0, e2in = cur.values[ie2] > 0;
      if (ie1 == ie2 || e1in != e2in || (e1in && e2in && ie1 != ie2)) {
        if (e1in && e2in && ie1 != ie2)
          throw TpolyError("reduce_level: both epsilons already supported");
        // W is itself a vertex: a single edge.
        Vector vals = cur.values;
        vals[ia] += m;
        vals[ib] -= m;
        vals[ig] -= m;
        vals[idl] -= m;
        vals[ie1] += m;
        vals[ie2] += m;  // ie1 == ie2 doubles up as required
        PivotStep step;
        step.entering = e1in ? ie2 : ie1;
        step.leaving = cleared;
        step.from = cur;
        step.to = Table(spec, vals);
        emit(std::move(step));
        continue;
      }
      // Octagon case: W lies inside an edge of the 2-face F spanned by
      // supp(V) + {eps1, eps2}. Walk F to the nearest vertex clearing
      // one of beta/gamma/delta while keeping alpha.
      std::vector<std::size_t> face_supp = cur.support();
      face_supp.push_back(ie1);
      face_supp.push_back(ie2);
      std::sort(face_supp.begin(), face_supp.end());
      auto fverts = face_vertices(spec, face_supp, rs);
      std::size_t self = fverts.size();
      for (std::size_t i = 0; i < fverts.size(); ++i)
        if (fverts[i].values == cur.values) self = i;
      if (self == fverts.size())
        throw TpolyError("reduce_level: current vertex missing from face");
      // Polygon adjacency inside F.
      std::vector<std::vector<std::size_t>> adj(fverts.size());
      for (std::size_t i = 0; i < fverts.size(); ++i)
        for (std::size_t j = i + 1; j < fverts.size(); ++j)
          if (adjacent(fverts[i], fverts[j])) {
            adj[i].push_back(j);
            adj[j].push_back(i);
          }
      std::vector<int> dist(fverts.size(), -1), parent(fverts.size(), -1);
      dist[self] = 0;
      std::vector<std::size_t> queue{self};
      for (std::size_t head = 0; head < queue.size(); ++head) {
        auto x = queue[head];
        for (auto y : adj[x])
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            parent[y] = static_cast<int>(x);
            queue.push_back(y);
          }
      }
      auto is_candidate = [&](std::size_t i) {
        if (i == self || dist[i] < 0 || dist[i] > 2) return false;
        const auto& vals = fverts[i].values;
        if (vals[ia] == 0) return false;
        return vals[ib] == 0 || vals[ig] == 0 || vals[idl] == 0;
      };
      // Prefer the endpoints of the edge E containing W (the vertices
      // of F missing the cleared cell), closest first.
      std::size_t target = fverts.size();
      int best_key = 1 << 20;
      for (std::size_t i = 0; i < fverts.size(); ++i) {
        if (!is_candidate(i)) continue;
        bool on_e = fverts[i].values[cleared] == 0;
        int key = (on_e ? 0 : 100) + dist[i];
        if (key < best_key) {
          best_key = key;
          target = i;
        }
      }
      if (target == fverts.size())
        throw TpolyError("reduce_level: octagon walk found no target");
      std::vector<std::size_t> path;
      for (std::size_t x = target; x != self; x = static_cast<std::size_t>(parent[x]))
        path.push_back(x);
      path.push_back(self);
      std::reverse(path.begin(), path.end());
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const Table& a = fverts[path[i]];
        const Table& b = fverts[path[i + 1]];
        auto sa = a.support(), sb = b.support();
        std::vector<std::size_t> ent, lvg;
        std::set_difference(sb.begin(), sb.end(), sa.begin(), sa.end(),
                            std::back_inserter(ent));
        std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                            std::back_inserter(lvg));
        if (ent.size() != 1 || lvg.size() != 1)
          throw TpolyError("reduce_level: non-elementary polygon edge");
        PivotStep step;
        step.entering = ent[0];
        step.leaving = lvg[0];
        step.from = a;
        step.to = b;
        emit(std::move(step));
      }
      continue;
    }

    // Case (4): everything sits inside one S_i; rectangle pivots drain
    // the two pairwise classes until one empties.
    bool case4 = false;
    const std::array<std::array<const std::vector<Cell>*, 3>, 3> cfg = {{
        {&ss.r1, &ss.r12, &ss.r13},   // S-union inside S1
        {&ss.r2, &ss.r12, &ss.r23},   // inside S2
        {&ss.r3, &ss.r13, &ss.r23},   // inside S3
    }};
    for (const auto& [rown, ra, rb] : cfg) {
      (void)rown;
      if (!ra->empty() && !rb->empty()) {
        emit(rectangle_pivot(cur, alpha, lex_min(*ra), lex_min(*rb)));
        case4 = true;
        break;
      }
    }
    if (case4) continue;
    throw TpolyError("reduce_level: no reduction case applies");
  }

  // A single pivot (if needed) makes z-1 a staircase level.
  SSets ss = classify(cur, alpha);
  std::size_t axis = ss.s1.empty() ? 0 : ss.s2.empty() ? 1 : 2;
  Cell next_cell = alpha;
  next_cell[axis] -= 1;
  std::size_t idx = spec.cell_index(next_cell[0], next_cell[1], next_cell[2]);
  if (cur.values[idx] == 0) emit(pivot_insert(cur, idx));

  auto z2 = well_ordered_level(cur);
  if (!z2 || *z2 > state.z - 1)
    throw TpolyError("reduce_level: did not reach level z-1");
  return {make_level_state(cur), std::move(steps)};
}

/// Explicit walk from a vertex to the well-ordered vertex, of length at
/// most (p+q+s-3)^2: one pivot to bring (p,q,s) into the support, then
/// level reductions from p+q+s down to 3.
inline std::vector<PivotStep> path_to_well_ordered(const Table& t) {
  using namespace axial_detail;
  if (t.spec.kind != Kind::Axial3)
    throw TpolyError("path_to_well_ordered: axial tables only");
  if (!is_vertex(t)) throw TpolyError("path_to_well_ordered: not a vertex");
  std::vector<PivotStep> steps;
  Table cur = t;
  std::size_t top = t.spec.cell_index(t.spec.p - 1, t.spec.q - 1, t.spec.s - 1);
  if (cur.values[top] == 0) {
    auto step = axial_detail::pivot_insert(cur, top);
    cur = step.to;
    steps.push_back(std::move(step));
  }
  LevelState st = make_level_state(cur);
  while (st.z >= 5) {
    auto [next, level_steps] = reduce_level(st);
    for (auto& s : level_steps) steps.push_back(std::move(s));
    st = std::move(next);
  }
  const std::size_t bound = (t.spec.p + t.spec.q + t.spec.s - 3) *
                            (t.spec.p + t.spec.q + t.spec.s - 3);
  if (steps.size() > bound)
    throw TpolyError("path_to_well_ordered: bound (p+q+s-3)^2 exceeded");
  return steps;
}

/// Walk between two vertices through the well-ordered vertex; length at
/// most 2 (p+q+s-3)^2.
inline std::vector<PivotStep> path_between(const Table& t1, const Table& t2) {
  if (!(t1.spec == t2.spec)) throw TpolyError("path_between: different specs");
  auto fwd = path_to_well_ordered(t1);
  auto back = path_to_well_ordered(t2);
  std::vector<PivotStep> steps = std::move(fwd);
  for (auto it = back.rbegin(); it != back.rend(); ++it) {
    PivotStep rev;
    rev.entering = it->leaving;
    rev.leaving = it->entering;
    rev.from = it->to;
    rev.to = it->from;
    steps.push_back(std::move(rev));
  }
  return steps;
}

}  // namespace tpoly

#endif
