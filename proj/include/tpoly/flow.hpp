#ifndef TPOLY_FLOW_HPP
#define TPOLY_FLOW_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "tpoly/linalg.hpp"
#include "tpoly/matrix.hpp"
#include "tpoly/table.hpp"

namespace tpoly {

/// A directed acyclic graph with node demands; arcs follow the
/// convention that an arc (i,j) runs from the higher label i to the
/// lower label j.
struct FlowNetwork {
  std::size_t nodes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  Vector demand;  // outflow - inflow at each node

  bool acyclic() const {
    // With arbitrary arc lists, check for directed cycles by DFS.
    std::vector<std::vector<std::size_t>> out(nodes);
    for (const auto& [i, j] : arcs) out[i].push_back(j);
    std::vector<int> state(nodes, 0);
    std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
      state[v] = 1;
      for (auto w : out[v]) {
        if (state[w] == 1) return false;
        if (state[w] == 0 && !dfs(w)) return false;
      }
      state[v] = 2;
      return true;
    };
    for (std::size_t v = 0; v < nodes; ++v)
      if (state[v] == 0 && !dfs(v)) return false;
    return true;
  }
};

/// The complete "banded" graph G_{n,k}: an arc from i to j whenever
/// 1 <= i - j <= k (labels 0-based internally).
inline FlowNetwork gnk_network(std::size_t n, std::size_t k, Vector demand) {
  FlowNetwork net;
  net.nodes = n;
  net.demand = std::move(demand);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t gap = 1; gap <= k && gap <= i; ++gap)
      net.arcs.push_back({i, i - gap});
  return net;
}

/// Equation system of the singly-capacitated network flow polytope: one
/// conservation row per node over one variable per arc.
struct FlowSystem {
  FlowNetwork net;
  Matrix a;  // nodes x arcs, entries in {-1, 0, +1}
  Vector b;
};

inline FlowSystem flow_polytope(const FlowNetwork& net) {
  if (!net.acyclic())
    throw TpolyError("flow_polytope: directed cycle makes the polyhedron unbounded");
  if (net.demand.size() != net.nodes)
    throw TpolyError("flow_polytope: demand size mismatch");
  Rational total = 0;
  for (const auto& d : net.demand) total += d;
  if (total != 0) throw InfeasibleError("flow_polytope: demands do not balance");
  FlowSystem fs;
  fs.net = net;
  fs.a = Matrix(net.nodes, net.arcs.size());
  fs.b = net.demand;
  for (std::size_t e = 0; e < net.arcs.size(); ++e) {
    fs.a(net.arcs[e].first, e) = 1;
    fs.a(net.arcs[e].second, e) = -1;
  }
  return fs;
}

/// A feasible flow, dense over the arc list.
struct Flow {
  FlowSystem sys;
  Vector values;

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t e = 0; e < values.size(); ++e)
      if (values[e] > 0) s.push_back(e);
    return s;
  }
};

inline bool is_flow_feasible(const Flow& f) {
  for (const auto& x : f.values)
    if (x < 0) return false;
  return f.sys.a.mul(f.values) == f.sys.b;
}

/// Vertex test: the support is (undirected) acyclic, i.e. a forest.
inline bool is_flow_vertex(const Flow& f) {
  if (!is_flow_feasible(f)) return false;
  detail::UnionFind uf(f.sys.net.nodes);
  for (auto e : f.support())
    if (!uf.unite(f.sys.net.arcs[e].first, f.sys.net.arcs[e].second))
      return false;
  return true;
}

namespace flow_detail {

/// Signed basic solution on a spanning forest, by leaf elimination.
inline std::optional<Vector> forest_solution(const FlowSystem& fs,
                                             const std::vector<std::size_t>& edges) {
  const std::size_t n = fs.net.nodes;
  std::vector<std::vector<std::size_t>> incident(n);
  for (auto e : edges) {
    incident[fs.net.arcs[e].first].push_back(e);
    incident[fs.net.arcs[e].second].push_back(e);
  }
  Vector residual = fs.net.demand;
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = incident[v].size();
  std::vector<bool> done(fs.net.arcs.size(), false);
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1) stack.push_back(v);
  Vector vals(fs.net.arcs.size(), Rational(0));
  std::size_t processed = 0;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    if (degree[v] != 1) continue;
    std::size_t e = 0;
    for (auto ei : incident[v])
      if (!done[ei]) {
        e = ei;
        break;
      }
    auto [from, to] = fs.net.arcs[e];
    // Outflow - inflow = demand: at node v the arc carries the whole
    // residual, signed by orientation.
    Rational x = from == v ? residual[v] : -residual[v];
    vals[e] = x;
    std::size_t other = from == v ? to : from;
    residual[other] += from == v ? x : -x;
    residual[v] = 0;
    done[e] = true;
    --degree[v];
    --degree[other];
    ++processed;
    if (degree[other] == 1) stack.push_back(other);
  }
  if (processed != edges.size()) return std::nullopt;
  for (std::size_t v = 0; v < n; ++v)
    if (residual[v] != 0) return std::nullopt;
  return vals;
}

}  // namespace flow_detail

/// All vertices of the flow polytope: feasible basic solutions over
/// spanning forests of the underlying undirected graph.
inline std::vector<Flow> enumerate_flow_vertices(const FlowSystem& fs) {
  const std::size_t m = fs.net.arcs.size();
  std::set<Vector> seen;
  std::vector<Flow> out;
  std::vector<std::size_t> chosen;
  std::size_t want = fs.net.nodes - 1;
  std::function<void(std::size_t, detail::UnionFind)> rec =
      [&](std::size_t next, detail::UnionFind uf) {
        if (chosen.size() == want) {
          auto vals = flow_detail::forest_solution(fs, chosen);
          if (!vals) return;
          for (const auto& x : *vals)
            if (x < 0) return;
          if (seen.insert(*vals).second) out.push_back({fs, *vals});
          return;
        }
        if (m - next < want - chosen.size()) return;
        for (std::size_t e = next; e < m; ++e) {
          detail::UnionFind uf2 = uf;
          if (!uf2.unite(fs.net.arcs[e].first, fs.net.arcs[e].second)) continue;
          chosen.push_back(e);
          rec(e + 1, uf2);
          chosen.pop_back();
        }
      };
  rec(0, detail::UnionFind(fs.net.nodes));
  return out;
}

struct FlowPivotStep {
  std::size_t entering = 0, leaving = 0;  // arc indices
  Flow from, to;
};

namespace flow_detail {

/// Simplex pivot inserting an arc into a spanning-tree vertex: push
/// flow around the unique undirected cycle until the first arc empties.
inline FlowPivotStep pivot_insert_arc(const Flow& f, std::size_t arc) {
  const auto& fs = f.sys;
  auto supp = f.support();
  if (supp.size() != fs.net.nodes - 1)
    throw DegenerateError("pivot_insert_arc: vertex support is not a spanning tree");
  // Path in the tree from arcs' head to tail.
  const std::size_t n = fs.net.nodes;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> incident(n);
  for (auto e : supp) {
    incident[fs.net.arcs[e].first].push_back({e, fs.net.arcs[e].second});
    incident[fs.net.arcs[e].second].push_back({e, fs.net.arcs[e].first});
  }
  auto [tail, head] = fs.net.arcs[arc];  // flow runs tail -> head
  // BFS from head to tail through the tree.
  std::vector<int> parent_edge(n, -1), parent_node(n, -1);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> queue{head};
  seen[head] = true;
  for (std::size_t qh = 0; qh < queue.size(); ++qh) {
    auto v = queue[qh];
    for (auto [e, w] : incident[v])
      if (!seen[w]) {
        seen[w] = true;
        parent_edge[w] = static_cast<int>(e);
        parent_node[w] = static_cast<int>(v);
        queue.push_back(w);
      }
  }
  if (!seen[tail]) throw TpolyError("pivot_insert_arc: disconnected support");
  // The inserted arc carries +t from tail to head; the tree path
  // returns that flow from head back to tail. Walking tail -> head,
  // the return direction runs against the walk, so arcs oriented along
  // the walk lose flow and arcs oriented against it gain.
  Vector delta(fs.net.arcs.size(), Rational(0));
  delta[arc] = 1;
  std::size_t v = tail;
  while (v != head) {
    std::size_t e = static_cast<std::size_t>(parent_edge[v]);
    std::size_t next = static_cast<std::size_t>(parent_node[v]);
    delta[e] += fs.net.arcs[e].first == v ? -1 : 1;
    v = next;
  }
  std::size_t leave = fs.net.arcs.size();
  Rational best;
  int ties = 0;
  for (auto e : supp) {
    if (delta[e] >= 0) continue;
    Rational ratio = f.values[e] / -delta[e];
    if (leave == fs.net.arcs.size() || ratio < best) {
      leave = e;
      best = ratio;
      ties = 1;
    } else if (ratio == best) {
      ++ties;
    }
  }
  if (leave == fs.net.arcs.size())
    throw TpolyError("pivot_insert_arc: unbounded direction in a polytope");
  if (ties > 1 || best == 0)
    throw DegenerateError("pivot_insert_arc: degenerate pivot");
  FlowPivotStep step;
  step.entering = arc;
  step.leaving = leave;
  step.from = f;
  Vector vals = f.values;
  for (std::size_t e = 0; e < vals.size(); ++e) vals[e] += best * delta[e];
  step.to = {fs, vals};
  return step;
}

}  // namespace flow_detail

/// Checks the structural hypothesis used by the canonical-path
/// theorem: consecutive arcs (i+1, i) all exist, node i is a sink of
/// the graph restricted to {i, ..., n-1}, and an arc (j, i-1) forces
/// the arc (j, i).
inline bool has_intermediate_property(const FlowNetwork& net) {
  std::set<std::pair<std::size_t, std::size_t>> arcset(net.arcs.begin(),
                                                       net.arcs.end());
  for (std::size_t i = 0; i + 1 < net.nodes; ++i)
    if (!arcset.count({i + 1, i})) return false;
  for (const auto& [i, j] : net.arcs)
    if (i <= j) return false;  // sink condition under the i > j convention
  for (const auto& [j, i] : net.arcs)
    if (i + 1 < j && !arcset.count({j, i + 1})) return false;
  return true;
}

/// The unique vertex supported on the consecutive arcs (i+1, i); its
/// flows are the negated prefix sums of the demands.
inline Flow canonical_flow_vertex(const FlowSystem& fs) {
  Vector vals(fs.net.arcs.size(), Rational(0));
  Rational prefix = 0;
  std::vector<std::size_t> arc_of(fs.net.nodes, fs.net.arcs.size());
  for (std::size_t e = 0; e < fs.net.arcs.size(); ++e)
    if (fs.net.arcs[e].first == fs.net.arcs[e].second + 1)
      arc_of[fs.net.arcs[e].second] = e;
  for (std::size_t i = 0; i + 1 < fs.net.nodes; ++i) {
    prefix += fs.net.demand[i];
    if (arc_of[i] == fs.net.arcs.size())
      throw TpolyError("canonical_flow_vertex: missing consecutive arc");
    if (prefix > 0)
      throw InfeasibleError("canonical_flow_vertex: positive prefix demand");
    vals[arc_of[i]] = -prefix;
  }
  return {fs, vals};
}

/// The canonical monotone path: for i = 1, 2, ... pivot in the arc
/// (i+1, i) if absent. At most |E| steps; arcs (2,1), ..., (i, i-1)
/// are never lost once acquired.
inline std::vector<FlowPivotStep> gnk_canonical_path(const Flow& start) {
  const auto& fs = start.sys;
  if (!has_intermediate_property(fs.net))
    throw TpolyError("gnk_canonical_path: graph lacks the intermediate property");
  if (!is_flow_vertex(start))
    throw TpolyError("gnk_canonical_path: start is not a vertex");
  std::vector<FlowPivotStep> steps;
  Flow cur = start;
  std::vector<std::size_t> arc_of(fs.net.nodes, fs.net.arcs.size());
  for (std::size_t e = 0; e < fs.net.arcs.size(); ++e)
    if (fs.net.arcs[e].first == fs.net.arcs[e].second + 1)
      arc_of[fs.net.arcs[e].second] = e;
  for (std::size_t i = 0; i + 1 < fs.net.nodes; ++i) {
    std::size_t e = arc_of[i];
    if (cur.values[e] > 0) continue;
    auto step = flow_detail::pivot_insert_arc(cur, e);
    cur = step.to;
    steps.push_back(std::move(step));
    // Proof invariant: the acquired consecutive arcs stay positive.
    for (std::size_t ii = 0; ii <= i; ++ii)
      if (!(cur.values[arc_of[ii]] > 0))
        throw TpolyError("gnk_canonical_path: invariant lost");
  }
  if (cur.values != canonical_flow_vertex(fs).values)
    throw TpolyError("gnk_canonical_path: did not reach the canonical vertex");
  if (steps.size() > fs.net.arcs.size())
    throw TpolyError("gnk_canonical_path: bound |E| exceeded");
  return steps;
}

/// Walk between two vertices through the canonical vertex; at most
/// 2|E| steps.
inline std::vector<FlowPivotStep> flow_path_between(const Flow& f1,
                                                    const Flow& f2) {
  auto fwd = gnk_canonical_path(f1);
  auto back = gnk_canonical_path(f2);
  std::vector<FlowPivotStep> steps = std::move(fwd);
  for (auto it = back.rbegin(); it != back.rend(); ++it) {
    FlowPivotStep rev;
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
