#ifndef TPOLY_CATALOGUE_HPP
#define TPOLY_CATALOGUE_HPP

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "tpoly/chambers.hpp"
#include "tpoly/hull.hpp"

namespace tpoly {

/// The chamber machinery of one transportation family: the reduced
/// full-row-rank configuration plus the bookkeeping to rebuild full
/// marginal vectors from reduced right-hand sides.
struct FamilyConfig {
  TransportSpec shape;   // marginal values irrelevant; kind and sizes only
  Matrix full;           // all marginal rows
  Matrix reduced;        // independent rows
  std::vector<std::size_t> row_basis;
  std::vector<std::pair<std::size_t, Vector>> lifts;  // dropped row -> coeffs

  Vector reduce_rhs(const Vector& b_full) const {
    Vector out(row_basis.size());
    for (std::size_t i = 0; i < row_basis.size(); ++i) out[i] = b_full[row_basis[i]];
    return out;
  }

  Vector lift_rhs(const Vector& b_red) const {
    Vector out(full.rows(), Rational(0));
    for (std::size_t i = 0; i < row_basis.size(); ++i) out[row_basis[i]] = b_red[i];
    for (const auto& [row, coeffs] : lifts) {
      Rational s = 0;
      for (std::size_t i = 0; i < coeffs.size(); ++i) s += coeffs[i] * b_red[i];
      out[row] = s;
    }
    return out;
  }

  TransportSpec spec_from_rhs(const Vector& b_full) const {
    const auto& t = shape;
    switch (t.kind) {
      case Kind::Classical: {
        Vector v(b_full.begin(), b_full.begin() + t.q);
        Vector u(b_full.begin() + t.q, b_full.begin() + t.q + t.p);
        return TransportSpec::classical(u, v);
      }
      case Kind::Axial3: {
        Vector u(b_full.begin(), b_full.begin() + t.p);
        Vector v(b_full.begin() + t.p, b_full.begin() + t.p + t.q);
        Vector w(b_full.begin() + t.p + t.q, b_full.begin() + t.p + t.q + t.s);
        return TransportSpec::axial(u, v, w);
      }
      case Kind::Planar3: {
        Matrix U(t.q, t.s), V(t.p, t.s), W(t.p, t.q);
        std::size_t r = 0;
        for (std::size_t j = 0; j < t.q; ++j)
          for (std::size_t k = 0; k < t.s; ++k, ++r) U(j, k) = b_full[r];
        for (std::size_t i = 0; i < t.p; ++i)
          for (std::size_t k = 0; k < t.s; ++k, ++r) V(i, k) = b_full[r];
        for (std::size_t i = 0; i < t.p; ++i)
          for (std::size_t j = 0; j < t.q; ++j, ++r) W(i, j) = b_full[r];
        return TransportSpec::planar(U, V, W);
      }
    }
    throw TpolyError("spec_from_rhs: unknown kind");
  }
};

inline FamilyConfig family_config(Kind kind, std::size_t p, std::size_t q,
                                  std::size_t s = 1) {
  TransportSpec shape;
  switch (kind) {
    case Kind::Classical:
      shape = TransportSpec::classical(Vector(p, Rational(1) * q),
                                       Vector(q, Rational(1) * p));
      break;
    case Kind::Axial3:
      shape = TransportSpec::axial(Vector(p, Rational(1) * (q * s)),
                                   Vector(q, Rational(1) * (p * s)),
                                   Vector(s, Rational(1) * (p * q)));
      break;
    case Kind::Planar3: {
      Matrix U(q, s), V(p, s), W(p, q);
      for (std::size_t j = 0; j < q; ++j)
        for (std::size_t k = 0; k < s; ++k) U(j, k) = Rational(1) * p;
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t k = 0; k < s; ++k) V(i, k) = Rational(1) * q;
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < q; ++j) W(i, j) = Rational(1) * s;
      shape = TransportSpec::planar(U, V, W);
      break;
    }
  }
  FamilyConfig fc;
  fc.shape = shape;
  auto cs = build_constraints(shape);
  fc.full = cs.a;
  auto ech = fraction_free_echelon(clear_row_denominators(cs.a.transposed()));
  fc.row_basis = ech.pivot_cols;
  fc.reduced = cs.a.select_rows(fc.row_basis);
  Matrix reduced_t = fc.reduced.transposed();
  std::vector<bool> kept(fc.full.rows(), false);
  for (auto r : fc.row_basis) kept[r] = true;
  for (std::size_t r = 0; r < fc.full.rows(); ++r) {
    if (kept[r]) continue;
    auto coeffs = solve(reduced_t, fc.full.row(r));
    if (!coeffs)
      throw TpolyError("family_config: dependent row not in the row space");
    fc.lifts.push_back({r, *coeffs});
  }
  return fc;
}

/// Scales a rational marginal vector to the primitive integer vector on
/// the same ray.
inline Vector primitive_rhs(const Vector& b) {
  Integer l = lcm_of_denominators(b);
  Integer g = 0;
  for (const auto& x : b) g = gcd(g, numer(x) * (l / denom(x)));
  if (g == 0) g = 1;
  Vector out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    out[i] = b[i] * Rational(l) / Rational(g);
  return out;
}

struct CatalogueRow {
  std::size_t chamber_id = 0;
  std::size_t f0 = 0;
  std::size_t facets = 0;
  int diameter = 0;
  TransportSpec representative;
};

struct Catalogue {
  FamilyConfig family;
  ChamberComplex complex;
  std::vector<CatalogueRow> rows;
};

namespace chamber_detail {

/// Per-chamber combinatorics from the member bases alone: for right-
/// hand sides inside a chamber the polytope is simple, its vertices are
/// the member bases, edges are single swaps, and the face spanned by a
/// vertex set has dimension |union of bases| - rank.
struct ChamberStats {
  std::size_t f0 = 0, facets = 0;
  int diameter = 0;
};

inline ChamberStats chamber_stats(const ChamberComplex& cc,
                                  const std::vector<std::size_t>& mem,
                                  std::size_t n_cells) {
  ChamberStats st;
  st.f0 = mem.size();
  const std::size_t r = mem.empty() ? 0 : cc.bases[mem[0]].size();
  std::map<std::vector<std::size_t>, std::size_t> id;
  for (std::size_t i = 0; i < mem.size(); ++i) id[cc.bases[mem[i]]] = i;
  std::vector<std::vector<std::size_t>> adj(mem.size());
  for (std::size_t i = 0; i < mem.size(); ++i) {
    const auto& b = cc.bases[mem[i]];
    std::vector<bool> inb(n_cells, false);
    for (auto c : b) inb[c] = true;
    for (std::size_t drop = 0; drop < r; ++drop)
      for (std::size_t c = 0; c < n_cells; ++c) {
        if (inb[c]) continue;
        auto nb = b;
        nb[drop] = c;
        std::sort(nb.begin(), nb.end());
        auto it = id.find(nb);
        if (it != id.end() && it->second > i) {
          adj[i].push_back(it->second);
          adj[it->second].push_back(i);
        }
      }
  }
  st.diameter = mem.size() <= 1 ? 0 : graph_diameter(adj);

  // Facets: cell c is facet-defining iff the union of the member bases
  // avoiding c covers every other cell.
  std::uint64_t all = n_cells == 64 ? ~0ull : ((1ull << n_cells) - 1);
  std::vector<std::uint64_t> masks(mem.size(), 0);
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (auto c : cc.bases[mem[i]]) masks[i] |= 1ull << c;
  for (std::size_t c = 0; c < n_cells; ++c) {
    std::uint64_t uni = 0;
    for (std::size_t i = 0; i < mem.size(); ++i)
      if (!(masks[i] & (1ull << c))) uni |= masks[i];
    if (uni == (all ^ (1ull << c))) ++st.facets;
  }
  return st;
}

}  // namespace chamber_detail

/// Complete catalogue of the combinatorial types of a family: one row
/// per chamber with vertex count, facet count, diameter and an integer
/// representative marginal vector.
inline Catalogue catalogue(Kind kind, std::size_t p, std::size_t q,
                           std::size_t s = 1, const ChamberGuards& guards = {}) {
  Catalogue cat;
  cat.family = family_config(kind, p, q, s);
  cat.complex = enumerate_chambers(cat.family.reduced, guards);
  const std::size_t n_cells = cat.family.shape.cells();
  for (std::size_t i = 0; i < cat.complex.chambers.size(); ++i) {
    const auto& ch = cat.complex.chambers[i];
    auto st = chamber_detail::chamber_stats(cat.complex, ch.members, n_cells);
    CatalogueRow row;
    row.chamber_id = i;
    row.f0 = st.f0;
    row.facets = st.facets;
    row.diameter = st.diameter;
    row.representative = cat.family.spec_from_rhs(
        primitive_rhs(cat.family.lift_rhs(ch.representative)));
    cat.rows.push_back(std::move(row));
  }
  return cat;
}

/// Random sampling over a family: draws positive integer tables, takes
/// their marginals, and reports the same statistics. Completeness is
/// not claimed; duplicate combinatorial types are not merged.
inline std::vector<CatalogueRow> sample_catalogue(Kind kind, std::size_t p,
                                                  std::size_t q, std::size_t s,
                                                  std::size_t count,
                                                  unsigned seed,
                                                  std::size_t max_cells = 27) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> val(1, 1 << 20);
  std::vector<CatalogueRow> rows;
  for (std::size_t trial = 0; rows.size() < count && trial < 50 * count + 100;
       ++trial) {
    TransportSpec shape = family_config(kind, p, q, s).shape;
    Vector cells(shape.cells());
    for (auto& x : cells) x = val(rng);
    Vector b_full = build_constraints(shape).a.mul(cells);
    auto fam = family_config(kind, p, q, s);
    TransportSpec spec = fam.spec_from_rhs(b_full);
    try {
      auto g = polytope_graph(spec, max_cells);
      bool simple = true;
      auto cs = build_constraints(spec);
      std::size_t r = rank(cs.a);
      for (const auto& vert : g.vertices)
        if (vert.support().size() != r) simple = false;
      if (!simple) continue;
      CatalogueRow row;
      row.chamber_id = rows.size();
      row.f0 = g.vertices.size();
      row.facets = count_facets(spec, max_cells);
      row.diameter = diameter(g);
      row.representative = spec;
      rows.push_back(std::move(row));
    } catch (const DegenerateError&) {
    }
  }
  return rows;
}

// ---------------------------------------------------------------------
// The gcd machinery on D_{p,q} = vertices of a product of simplices.

/// Marginals of a point inside the lexicographic chamber of D_{p,q},
/// built by the recursion: start from D_{p,1} and repeatedly attach a
/// new column cell (p,q) with a small enough weight.
inline std::pair<Vector, Vector> lex_chamber_marginals(std::size_t p,
                                                       std::size_t q) {
  Vector u(p);
  Rational total = 0;
  for (std::size_t i = 0; i < p; ++i) {
    u[i] = Rational(Integer(1) << (i + 1));  // 2, 4, 8, ...: any positive values
    total += u[i];
  }
  Vector v = {total};
  for (std::size_t qq = 2; qq <= q; ++qq) {
    FamilyConfig fam = family_config(Kind::Classical, p, qq);
    auto walls = chamber_detail::build_walls(fam.reduced,
                                             ChamberGuards{20, 100000});
    // Embed (u, v') at v_qq = 0 and push along the cell column (p, qq).
    Vector b_full(qq + p, Rational(0));
    for (std::size_t j = 0; j + 1 < qq; ++j) b_full[j] = v[j];
    for (std::size_t i = 0; i < p; ++i) b_full[qq + i] = u[i];
    Vector b0 = fam.reduce_rhs(b_full);
    Vector col = fam.reduced.col(fam.shape.cell_index(p - 1, qq - 1));
    Rational eps = -1;
    for (std::size_t w = 0; w < walls.normals.size(); ++w) {
      Rational num = walls.eval(w, b0);
      Rational den = walls.eval(w, col);
      if (num == 0) {
        if (den == 0)
          throw TpolyError("lex_chamber_marginals: direction stays on a wall");
        continue;
      }
      if (den == 0) continue;
      Rational bound = abs(num) / abs(den);
      if (eps < 0 || bound < eps) eps = bound;
    }
    if (eps < 0) eps = 1;
    eps /= 2;
    u[p - 1] += eps;
    v.push_back(eps);
    total += eps;
  }
  return {u, v};
}

struct GcdStepReport {
  std::size_t wall = 0;
  std::size_t card_plus = 0, card_minus = 0, card_wall = 0;
  long columns_plus = 0, columns_minus = 0;
  bool identity_holds = false;
  bool divisible = false;
};

/// Verifies |c+| - |c-| = |c0| (|C+| - |C-|) on two adjacent chambers,
/// and that the given divisor divides |C+| - |C-|.
inline GcdStepReport gcd_step_check(const ChamberComplex& cc,
                                    const Matrix& config, std::size_t i,
                                    std::size_t j, long divisor) {
  const auto& c1 = cc.chambers[i];
  const auto& c2 = cc.chambers[j];
  std::size_t w = cc.walls.normals.size();
  for (const auto& e : cc.edges)
    if ((e.a == i && e.b == j) || (e.a == j && e.b == i)) {
      w = e.wall;
      break;
    }
  if (w == cc.walls.normals.size())
    throw TpolyError("gcd_step_check: chambers do not share a wall");
  const std::size_t r = config.rows();

  // Relative-interior point of the shared facet.
  HalfspaceSystem sys;
  Vector normal(r);
  for (std::size_t k = 0; k < r; ++k)
    normal[k] = Rational(cc.walls.normals[w][k]);
  sys.equalities.push_back({normal, Rational(0)});
  for (std::size_t v = 0; v < c1.signature.size(); ++v) {
    if (v == w) continue;
    Vector row(r);
    for (std::size_t k = 0; k < r; ++k)
      row[k] = Rational(cc.walls.normals[v][k]) * c1.signature[v];
    sys.weak.push_back({std::move(row), Rational(1)});
  }
  auto res = strict_feasible(sys);
  if (!res.feasible) throw TpolyError("gcd_step_check: chambers not adjacent");
  const Vector& y0 = res.point;

  GcdStepReport rep;
  rep.wall = w;
  const auto& upper = c1.signature[w] > 0 ? c1 : c2;
  const auto& lower = c1.signature[w] > 0 ? c2 : c1;
  rep.card_plus = upper.basis_count;
  rep.card_minus = lower.basis_count;

  // Columns on each side of the wall, and the boundary-chamber count:
  // bases of the on-wall subconfiguration whose cone strictly contains
  // y0.
  std::vector<std::size_t> on_wall;
  for (std::size_t c = 0; c < config.cols(); ++c) {
    Rational val = 0;
    for (std::size_t k = 0; k < r; ++k)
      if (cc.walls.normals[w][k] != 0)
        val += Rational(cc.walls.normals[w][k]) * config(k, c);
    if (val > 0)
      ++rep.columns_plus;
    else if (val < 0)
      ++rep.columns_minus;
    else
      on_wall.push_back(c);
  }
  std::vector<std::size_t> cur;
  chamber_detail::subsets_rec(
      on_wall.size(), r - 1, 0, cur, [&](const std::vector<std::size_t>& pick) {
        std::vector<std::size_t> cols;
        for (auto idx : pick) cols.push_back(on_wall[idx]);
        Matrix sub = config.select_cols(cols);
        if (rank(sub) != r - 1) return;
        auto x = solve(sub, y0);
        if (!x) return;
        for (const auto& coef : *x)
          if (!(coef > 0)) return;
        ++rep.card_wall;
      });

  long lhs = static_cast<long>(rep.card_plus) - static_cast<long>(rep.card_minus);
  long rhs = static_cast<long>(rep.card_wall) *
             (rep.columns_plus - rep.columns_minus);
  rep.identity_holds = lhs == rhs;
  rep.divisible = (rep.columns_plus - rep.columns_minus) % divisor == 0;
  return rep;
}

}  // namespace tpoly

#endif
