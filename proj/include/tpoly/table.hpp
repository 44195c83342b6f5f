#ifndef TPOLY_TABLE_HPP
#define TPOLY_TABLE_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "tpoly/transport.hpp"

namespace tpoly {

/// A feasible point of a transportation polytope, stored densely in
/// cell_index order.
struct Table {
  TransportSpec spec;
  Vector values;

  Table() = default;
  Table(TransportSpec s, Vector vals) : spec(std::move(s)), values(std::move(vals)) {
    if (values.size() != spec.cells())
      throw TpolyError("table has wrong number of cells");
  }

  Rational at(std::size_t i, std::size_t j, std::size_t k = 0) const {
    return values[spec.cell_index(i, j, k)];
  }

  /// Sorted cell indices carrying strictly positive values.
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t c = 0; c < values.size(); ++c)
      if (values[c] > 0) s.push_back(c);
    return s;
  }

  bool operator==(const Table& o) const { return values == o.values; }
  bool operator<(const Table& o) const { return values < o.values; }
};

/// Exact feasibility: non-negative and all marginal equations hold.
inline bool is_feasible(const Table& t) {
  for (const auto& x : t.values)
    if (x < 0) return false;
  auto cs = build_constraints(t.spec);
  Vector lhs = cs.a.mul(t.values);
  return lhs == cs.b;
}

/// Support graph edges of a classical table: one (i,j) pair per
/// strictly positive cell of the p x q table.
inline std::vector<std::pair<std::size_t, std::size_t>> support_graph(
    const Table& t) {
  if (t.spec.kind != Kind::Classical)
    throw TpolyError("support_graph: classical tables only");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto c : t.support()) {
    auto cell = t.spec.cell_of(c);
    edges.push_back({cell[0], cell[1]});
  }
  return edges;
}

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  /// Returns false if x and y were already connected.
  bool unite(std::size_t x, std::size_t y) {
    std::size_t a = find(x), b = find(y);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

/// Rank of a set of 0-1 columns of the constraint matrix, in machine
/// integers. Safe by the Hadamard bound at these sizes.
inline std::size_t rank_01_columns(const Matrix& a,
                                   const std::vector<std::size_t>& cols) {
  MatrixT<long long> m(a.rows(), cols.size());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      m(i, j) = a(i, cols[j]) == 0 ? 0 : 1;
  if (a.rows() > 24) {
    Matrix exact = a.select_cols(cols);
    return rank(exact);
  }
  return rank(m);
}

}  // namespace detail

/// Vertex test. Classical tables are vertices iff the support graph is
/// acyclic (a spanning forest); other kinds iff the support columns of
/// the constraint matrix are linearly independent.
inline bool is_vertex(const Table& t) {
  if (!is_feasible(t)) return false;
  auto supp = t.support();
  if (t.spec.kind == Kind::Classical) {
    detail::UnionFind uf(t.spec.p + t.spec.q);
    for (auto c : supp) {
      auto cell = t.spec.cell_of(c);
      if (!uf.unite(cell[0], t.spec.p + cell[1])) return false;
    }
    return true;
  }
  auto cs = build_constraints(t.spec);
  return detail::rank_01_columns(cs.a, supp) == supp.size();
}

/// Classical-only cross-check for the vertex test: acyclicity of the
/// union is equivalent to linear independence of the support columns.
inline bool is_vertex_basic_solution_test(const Table& t) {
  if (!is_feasible(t)) return false;
  auto cs = build_constraints(t.spec);
  auto supp = t.support();
  return detail::rank_01_columns(cs.a, supp) == supp.size();
}

}  // namespace tpoly

#endif
