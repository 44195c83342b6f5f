#ifndef TPOLY_TRANSPORT_HPP
#define TPOLY_TRANSPORT_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tpoly/linalg.hpp"
#include "tpoly/lp.hpp"
#include "tpoly/matrix.hpp"
#include "tpoly/rational.hpp"

namespace tpoly {

enum class Kind { Classical, Axial3, Planar3 };

/// A transportation polytope {x >= 0 : marginal sums fixed}.
///
/// Classical(p,q): u in Q^p (row sums), v in Q^q (column sums).
/// Axial3(p,q,s): 1-marginals u, v, w (sums over the other two axes).
/// Planar3(p,q,s): 2-marginals U (q x s, sums over i), V (p x s, sums
/// over j), W (p x q, sums over k).
struct TransportSpec {
  Kind kind = Kind::Classical;
  std::size_t p = 1, q = 1, s = 1;
  Vector u, v, w;       // classical: u,v; axial: u,v,w
  Matrix U, V, W;       // planar

  static TransportSpec classical(Vector u, Vector v) {
    TransportSpec t;
    t.kind = Kind::Classical;
    t.p = u.size();
    t.q = v.size();
    t.u = std::move(u);
    t.v = std::move(v);
    t.validate();
    return t;
  }

  static TransportSpec axial(Vector u, Vector v, Vector w) {
    TransportSpec t;
    t.kind = Kind::Axial3;
    t.p = u.size();
    t.q = v.size();
    t.s = w.size();
    t.u = std::move(u);
    t.v = std::move(v);
    t.w = std::move(w);
    t.validate();
    return t;
  }

  static TransportSpec planar(Matrix U, Matrix V, Matrix W) {
    TransportSpec t;
    t.kind = Kind::Planar3;
    t.p = V.rows();
    t.q = U.rows();
    t.s = U.cols();
    if (V.cols() != t.s || W.rows() != t.p || W.cols() != t.q)
      throw TpolyError("planar marginal shapes inconsistent");
    t.U = std::move(U);
    t.V = std::move(V);
    t.W = std::move(W);
    t.validate();
    return t;
  }

  std::size_t cells() const {
    switch (kind) {
      case Kind::Classical: return p * q;
      case Kind::Axial3:
      case Kind::Planar3: return p * q * s;
    }
    return 0;
  }

  /// Row-major cell index: i outer, then j, then k.
  std::size_t cell_index(std::size_t i, std::size_t j, std::size_t k = 0) const {
    if (kind == Kind::Classical) return i * q + j;
    return (i * q + j) * s + k;
  }

  std::array<std::size_t, 3> cell_of(std::size_t idx) const {
    if (kind == Kind::Classical) return {idx / q, idx % q, 0};
    return {idx / (q * s), (idx / s) % q, idx % s};
  }

  bool operator==(const TransportSpec& o) const {
    return kind == o.kind && p == o.p && q == o.q && s == o.s && u == o.u &&
           v == o.v && w == o.w && U == o.U && V == o.V && W == o.W;
  }

 private:
  void validate() const {
    if (p < 1 || q < 1 || (kind != Kind::Classical && s < 1))
      throw TpolyError("all sizes must be >= 1");
    auto nonneg = [](const Vector& m) {
      for (const auto& x : m)
        if (x < 0) throw TpolyError("marginal entries must be >= 0");
    };
    nonneg(u);
    nonneg(v);
    nonneg(w);
    for (const Matrix* m : {&U, &V, &W})
      for (std::size_t i = 0; i < m->rows(); ++i)
        for (std::size_t j = 0; j < m->cols(); ++j)
          if ((*m)(i, j) < 0) throw TpolyError("marginal entries must be >= 0");
  }
};

/// The equation system Ax = b of a spec, with redundant rows retained.
/// Row order follows the printed examples: classical lists the column
/// sums (v) before the row sums (u); axial lists u, v, w; planar lists
/// the U block, then V, then W.
struct ConstraintSystem {
  Matrix a;
  Vector b;
  TransportSpec spec;
};

inline ConstraintSystem build_constraints(const TransportSpec& t) {
  ConstraintSystem cs;
  cs.spec = t;
  const std::size_t n = t.cells();
  switch (t.kind) {
    case Kind::Classical: {
      cs.a = Matrix(t.q + t.p, n);
      cs.b = Vector(t.q + t.p);
      for (std::size_t j = 0; j < t.q; ++j) {
        for (std::size_t i = 0; i < t.p; ++i) cs.a(j, t.cell_index(i, j)) = 1;
        cs.b[j] = t.v[j];
      }
      for (std::size_t i = 0; i < t.p; ++i) {
        for (std::size_t j = 0; j < t.q; ++j)
          cs.a(t.q + i, t.cell_index(i, j)) = 1;
        cs.b[t.q + i] = t.u[i];
      }
      break;
    }
    case Kind::Axial3: {
      cs.a = Matrix(t.p + t.q + t.s, n);
      cs.b = Vector(t.p + t.q + t.s);
      for (std::size_t i = 0; i < t.p; ++i) cs.b[i] = t.u[i];
      for (std::size_t j = 0; j < t.q; ++j) cs.b[t.p + j] = t.v[j];
      for (std::size_t k = 0; k < t.s; ++k) cs.b[t.p + t.q + k] = t.w[k];
      for (std::size_t i = 0; i < t.p; ++i)
        for (std::size_t j = 0; j < t.q; ++j)
          for (std::size_t k = 0; k < t.s; ++k) {
            std::size_t c = t.cell_index(i, j, k);
            cs.a(i, c) = 1;
            cs.a(t.p + j, c) = 1;
            cs.a(t.p + t.q + k, c) = 1;
          }
      break;
    }
    case Kind::Planar3: {
      const std::size_t rows = t.q * t.s + t.p * t.s + t.p * t.q;
      cs.a = Matrix(rows, n);
      cs.b = Vector(rows);
      std::size_t r = 0;
      for (std::size_t j = 0; j < t.q; ++j)
        for (std::size_t k = 0; k < t.s; ++k, ++r) {
          for (std::size_t i = 0; i < t.p; ++i) cs.a(r, t.cell_index(i, j, k)) = 1;
          cs.b[r] = t.U(j, k);
        }
      for (std::size_t i = 0; i < t.p; ++i)
        for (std::size_t k = 0; k < t.s; ++k, ++r) {
          for (std::size_t j = 0; j < t.q; ++j) cs.a(r, t.cell_index(i, j, k)) = 1;
          cs.b[r] = t.V(i, k);
        }
      for (std::size_t i = 0; i < t.p; ++i)
        for (std::size_t j = 0; j < t.q; ++j, ++r) {
          for (std::size_t k = 0; k < t.s; ++k) cs.a(r, t.cell_index(i, j, k)) = 1;
          cs.b[r] = t.W(i, j);
        }
      break;
    }
  }
  return cs;
}

inline bool is_nonempty(const TransportSpec& t) {
  auto sum = [](const Vector& m) {
    Rational s = 0;
    for (const auto& x : m) s += x;
    return s;
  };
  switch (t.kind) {
    case Kind::Classical:
      return sum(t.u) == sum(t.v);
    case Kind::Axial3:
      return sum(t.u) == sum(t.v) && sum(t.v) == sum(t.w);
    case Kind::Planar3: {
      // Only necessary conditions are known in closed form; decide
      // feasibility by exact LP on the full system.
      auto cs = build_constraints(t);
      std::vector<std::pair<Vector, Rational>> ge, eq;
      const std::size_t n = t.cells();
      for (std::size_t c = 0; c < n; ++c) {
        Vector e(n, Rational(0));
        e[c] = 1;
        ge.push_back({std::move(e), Rational(0)});
      }
      for (std::size_t r = 0; r < cs.a.rows(); ++r)
        eq.push_back({cs.a.row(r), cs.b[r]});
      return feasible_point(ge, eq).has_value();
    }
  }
  return false;
}

inline std::size_t dimension(const TransportSpec& t) {
  if (!is_nonempty(t)) throw InfeasibleError("dimension of an empty spec");
  switch (t.kind) {
    case Kind::Classical: return t.p * t.q - t.p - t.q + 1;
    case Kind::Axial3: return t.p * t.q * t.s - t.p - t.q - t.s + 2;
    case Kind::Planar3: return (t.p - 1) * (t.q - 1) * (t.s - 1);
  }
  return 0;
}

/// Expected rank of the constraint matrix of a non-empty spec.
inline std::size_t expected_rank(const TransportSpec& t) {
  switch (t.kind) {
    case Kind::Classical: return t.p + t.q - 1;
    case Kind::Axial3: return t.p + t.q + t.s - 2;
    case Kind::Planar3:
      return t.p * t.q + t.p * t.s + t.q * t.s - t.p - t.q - t.s + 1;
  }
  return 0;
}

/// No proper non-empty subset of u sums to a proper non-empty subset
/// sum of v. Exhaustive subset-sum comparison, guarded at p,q <= 12.
inline bool is_generic_classical(const Vector& u, const Vector& v) {
  if (u.size() > 12 || v.size() > 12)
    throw GuardError("is_generic_classical: sizes beyond 12 not supported");
  auto proper_subset_sums = [](const Vector& m) {
    std::set<Rational> sums;
    const std::size_t n = m.size();
    for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << n); ++mask) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t(1) << i)) s += m[i];
      sums.insert(s);
    }
    return sums;
  };
  auto su = proper_subset_sums(u);
  auto sv = proper_subset_sums(v);
  for (const auto& x : su)
    if (sv.count(x)) return false;
  return true;
}

// ---------------------------------------------------------------------
// Size-class isomorphisms.

/// Axis permutation helper for 3-way specs: new axis t is old axis
/// perm[t].
inline TransportSpec permute_axes(const TransportSpec& t,
                                  const std::array<std::size_t, 3>& perm) {
  if (t.kind == Kind::Classical)
    throw TpolyError("permute_axes: 3-way specs only");
  std::array<std::size_t, 3> size = {t.p, t.q, t.s};
  if (t.kind == Kind::Axial3) {
    std::array<const Vector*, 3> m = {&t.u, &t.v, &t.w};
    return TransportSpec::axial(*m[perm[0]], *m[perm[1]], *m[perm[2]]);
  }
  // Planar: marginal over old axis a, as a function of the other two
  // old axes in increasing order.
  auto marg = [&](std::size_t a) -> const Matrix& {
    return a == 0 ? t.U : (a == 1 ? t.V : t.W);
  };
  auto build = [&](std::size_t over, std::size_t r, std::size_t c) {
    const Matrix& m = marg(perm[over]);
    bool transpose = perm[r] > perm[c];
    Matrix out(size[perm[r]], size[perm[c]]);
    for (std::size_t x = 0; x < out.rows(); ++x)
      for (std::size_t y = 0; y < out.cols(); ++y)
        out(x, y) = transpose ? m(y, x) : m(x, y);
    return out;
  };
  return TransportSpec::planar(build(0, 1, 2), build(1, 0, 2), build(2, 0, 1));
}

/// Affine bijection between a planar spec with two sizes equal to 2 and
/// a classical p x 2 spec (one slack column per slice).
struct PlanarClassicalIso {
  TransportSpec original;   // as given
  TransportSpec planar;     // axes permuted to sizes (2, 2, p)
  TransportSpec classical;  // p x 2
  std::array<std::size_t, 3> perm;  // planar axis t = original axis perm[t]
  Vector alpha, beta;       // per-slice translation and upper width

  /// Planar table (in the original axis order) -> classical table.
  Vector to_classical(const Vector& planar_values_original) const;
  /// Classical table -> planar table in the original axis order.
  Vector to_planar(const Vector& classical_values) const;
};

namespace detail {
inline Vector apply_axis_perm(const TransportSpec& from, const TransportSpec& to,
                              const std::array<std::size_t, 3>& perm,
                              const Vector& values) {
  // values indexed by `from` cells; result indexed by `to` cells where
  // to-axis t is from-axis perm[t].
  Vector out(values.size());
  std::array<std::size_t, 3> fc;
  for (std::size_t i = 0; i < to.p; ++i)
    for (std::size_t j = 0; j < to.q; ++j)
      for (std::size_t k = 0; k < to.s; ++k) {
        std::array<std::size_t, 3> tc = {i, j, k};
        for (std::size_t a = 0; a < 3; ++a) fc[perm[a]] = tc[a];
        out[to.cell_index(i, j, k)] = values[from.cell_index(fc[0], fc[1], fc[2])];
      }
  return out;
}
}  // namespace detail

inline PlanarClassicalIso planar_2x2xp_to_classical(const TransportSpec& t) {
  if (t.kind != Kind::Planar3)
    throw TpolyError("planar_2x2xp_to_classical: spec is not planar");
  std::array<std::size_t, 3> size = {t.p, t.q, t.s};
  int twos = 0;
  for (auto x : size) twos += (x == 2);
  if (twos < 2)
    throw TpolyError("planar_2x2xp_to_classical: need two sizes equal to 2");
  // Put a non-2 axis last if there is one.
  std::array<std::size_t, 3> perm = {0, 1, 2};
  for (std::size_t a = 0; a < 3; ++a)
    if (size[a] != 2) {
      perm = {(a + 1) % 3, (a + 2) % 3, a};
      if (perm[0] > perm[1]) std::swap(perm[0], perm[1]);
      break;
    }
  PlanarClassicalIso iso;
  iso.original = t;
  iso.perm = perm;
  iso.planar = permute_axes(t, perm);
  const TransportSpec& pl = iso.planar;
  const std::size_t n = pl.s;
  iso.alpha = Vector(n);
  iso.beta = Vector(n);
  Vector cu(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (pl.U(0, k) + pl.U(1, k) != pl.V(0, k) + pl.V(1, k))
      throw InfeasibleError("slice sums of U and V disagree");
    Rational a1 = pl.U(0, k) - pl.V(1, k);
    iso.alpha[k] = a1 > 0 ? a1 : Rational(0);
    iso.beta[k] = pl.V(0, k) < pl.U(0, k) ? pl.V(0, k) : pl.U(0, k);
    if (iso.beta[k] < iso.alpha[k])
      throw InfeasibleError("empty slice in 2x2xp planar spec");
    cu[k] = iso.beta[k] - iso.alpha[k];
  }
  Rational total = 0, t1 = pl.W(0, 0);
  for (std::size_t k = 0; k < n; ++k) {
    total += cu[k];
    t1 -= iso.alpha[k];
  }
  if (t1 < 0 || total - t1 < 0)
    throw InfeasibleError("2x2xp planar spec is empty");
  iso.classical = TransportSpec::classical(cu, {t1, total - t1});
  return iso;
}

inline Vector PlanarClassicalIso::to_classical(
    const Vector& planar_values_original) const {
  Vector vals =
      detail::apply_axis_perm(original, planar, perm, planar_values_original);
  Vector out(classical.cells());
  for (std::size_t k = 0; k < planar.s; ++k) {
    Rational x11k = vals[planar.cell_index(0, 0, k)];
    out[classical.cell_index(k, 0)] = x11k - alpha[k];
    out[classical.cell_index(k, 1)] = beta[k] - x11k;
  }
  return out;
}

inline Vector PlanarClassicalIso::to_planar(const Vector& classical_values) const {
  Vector vals(planar.cells());
  for (std::size_t k = 0; k < planar.s; ++k) {
    Rational x11k = classical_values[classical.cell_index(k, 0)] + alpha[k];
    vals[planar.cell_index(0, 0, k)] = x11k;
    vals[planar.cell_index(0, 1, k)] = planar.V(0, k) - x11k;
    vals[planar.cell_index(1, 0, k)] = planar.U(0, k) - x11k;
    vals[planar.cell_index(1, 1, k)] = x11k + planar.U(1, k) - planar.V(0, k);
  }
  std::array<std::size_t, 3> inv{};
  for (std::size_t a = 0; a < 3; ++a) inv[perm[a]] = a;
  return detail::apply_axis_perm(planar, original, inv, vals);
}

/// Converse construction of the p x 2 <-> 2 x 2 x p correspondence: a
/// classical p x 2 spec embeds as a planar 2 x 2 x p spec via
/// x_{j,k} = x_{1,j,k} = x_{2,3-j,k}.
inline TransportSpec classical_px2_to_planar(const TransportSpec& t) {
  if (t.kind != Kind::Classical || t.q != 2)
    throw TpolyError("classical_px2_to_planar: need a classical p x 2 spec");
  const std::size_t n = t.p;
  Matrix U(2, n), V(2, n), W(2, 2);
  for (std::size_t k = 0; k < n; ++k) {
    U(0, k) = t.u[k];
    U(1, k) = t.u[k];
    V(0, k) = t.u[k];
    V(1, k) = t.u[k];
  }
  W(0, 0) = t.v[0];
  W(0, 1) = t.v[1];
  W(1, 0) = t.v[1];
  W(1, 1) = t.v[0];
  return TransportSpec::planar(U, V, W);
}

/// Lemma-level view of a 2 x p x q planar spec: a p x q transportation
/// system with entrywise upper bounds, image of the projection
/// x_{i,j,k} -> x_{1,j,k}.
struct BoundedTransport {
  std::size_t p = 0, q = 0;
  Vector row_sums, col_sums;
  Matrix bounds;
};

inline BoundedTransport planar_2pq_to_bounded(const TransportSpec& t) {
  if (t.kind != Kind::Planar3)
    throw TpolyError("planar_2pq_to_bounded: spec is not planar");
  TransportSpec pl = t;
  if (t.p != 2) {
    if (t.q == 2)
      pl = permute_axes(t, {1, 0, 2});
    else if (t.s == 2)
      pl = permute_axes(t, {2, 0, 1});
    else
      throw TpolyError("planar_2pq_to_bounded: no axis of size 2");
  }
  BoundedTransport bt;
  bt.p = pl.q;
  bt.q = pl.s;
  bt.row_sums = Vector(bt.p);
  bt.col_sums = Vector(bt.q);
  for (std::size_t j = 0; j < bt.p; ++j) bt.row_sums[j] = pl.W(0, j);
  for (std::size_t k = 0; k < bt.q; ++k) bt.col_sums[k] = pl.V(0, k);
  bt.bounds = pl.U;
  return bt;
}

inline TransportSpec bounded_to_planar(const BoundedTransport& bt) {
  Matrix U = bt.bounds, V(2, bt.q), W(2, bt.p);
  for (std::size_t k = 0; k < bt.q; ++k) {
    Rational colsum = 0;
    for (std::size_t j = 0; j < bt.p; ++j) colsum += bt.bounds(j, k);
    V(0, k) = bt.col_sums[k];
    V(1, k) = colsum - bt.col_sums[k];
    if (V(1, k) < 0) throw InfeasibleError("bounded system infeasible");
  }
  for (std::size_t j = 0; j < bt.p; ++j) {
    Rational rowsum = 0;
    for (std::size_t k = 0; k < bt.q; ++k) rowsum += bt.bounds(j, k);
    W(0, j) = bt.row_sums[j];
    W(1, j) = rowsum - bt.row_sums[j];
    if (W(1, j) < 0) throw InfeasibleError("bounded system infeasible");
  }
  return TransportSpec::planar(U, V, W);
}

}  // namespace tpoly

#endif
