#ifndef TPOLY_BIRKHOFF_HPP
#define TPOLY_BIRKHOFF_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tpoly/birkhoff_data.hpp"
#include "tpoly/chambers.hpp"
#include "tpoly/hull.hpp"
#include "tpoly/lp.hpp"

namespace tpoly {

/// The face F of the fourth Birkhoff polytope with x_{1,1}=x_{4,4}=0:
/// 14 permutation-matrix vertices, the homogenized configuration, a
/// Gale transform, and the distinguished triangulation into 32
/// simplices.
struct B4FaceData {
  std::vector<Matrix> vertices;                       // 14 matrices, 4x4
  Matrix homogenized;                                 // 17 x 14
  Matrix gale;                                        // 6 x 14
  std::vector<std::vector<std::size_t>> triangulation;  // 32 label sets
};

inline B4FaceData load_b4() {
  using namespace b4_data;
  B4FaceData d;
  for (int v = 0; v < 14; ++v) {
    Matrix x(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) x(i, j) = kVertexMatrices[v][i][j];
    // Permutation matrix with zero corners.
    for (int i = 0; i < 4; ++i) {
      Rational row = 0, col = 0;
      for (int j = 0; j < 4; ++j) {
        row += x(i, j);
        col += x(j, i);
      }
      if (row != 1 || col != 1)
        throw TpolyError("load_b4: vertex is not a permutation matrix");
    }
    if (x(0, 0) != 0 || x(3, 3) != 0)
      throw TpolyError("load_b4: vertex not on the face");
    d.vertices.push_back(std::move(x));
  }
  d.homogenized = Matrix(17, 14);
  for (int i = 0; i < 17; ++i)
    for (int j = 0; j < 14; ++j) d.homogenized(i, j) = kHomogenizedConfig[i][j];
  for (int v = 0; v < 14; ++v) {
    if (d.homogenized(0, v) != 1)
      throw TpolyError("load_b4: missing homogenizing coordinate");
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (d.homogenized(1 + 4 * i + j, v) != d.vertices[v](i, j))
          throw TpolyError("load_b4: configuration does not match vertices");
  }
  d.gale = Matrix(6, 14);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 14; ++j) d.gale(i, j) = kGale[i][j];
  // Kernel relation: config . gale^T = 0, exactly.
  Matrix prod = d.homogenized.mul(d.gale.transposed());
  for (std::size_t i = 0; i < prod.rows(); ++i)
    for (std::size_t j = 0; j < prod.cols(); ++j)
      if (prod(i, j) != 0)
        throw TpolyError("load_b4: gale transform fails the kernel relation");
  for (int s = 0; s < 32; ++s) {
    std::vector<std::size_t> simplex(kSimplices[s], kSimplices[s] + 8);
    d.triangulation.push_back(std::move(simplex));
  }
  return d;
}

/// Classification of one facet of one maximal simplex.
struct FacetClassification {
  std::size_t simplex = 0;   // 0-based
  std::size_t dropped = 0;   // slot in the simplex label set
  bool on_boundary = false;
  std::size_t boundary_cell = 0;  // 4*i + j, 0-based, when on_boundary
  std::size_t shared_with = 0;    // 0-based simplex otherwise
};

struct SubdivisionReport {
  std::vector<FacetClassification> classifications;
  std::vector<std::string> failures;
  bool matches_printed_ledger = false;
  Rational triangulation_volume;  // in projected coordinates, times 7!
  Rational hull_volume;           // same normalization
  bool passed() const { return failures.empty(); }
};

namespace birkhoff_detail {

/// Projected point list (affine-injective coordinate selection), one
/// point per configuration column.
inline std::vector<Vector> projected_points(const Matrix& homogenized) {
  std::vector<Vector> pts;
  for (std::size_t v = 0; v < homogenized.cols(); ++v) {
    Vector p(homogenized.rows() - 1);
    for (std::size_t i = 1; i < homogenized.rows(); ++i)
      p[i - 1] = homogenized(i, v);
    pts.push_back(std::move(p));
  }
  auto coords = detail::affine_coordinate_basis(pts);
  return detail::project_to_coords(pts, coords);
}

/// Homogeneous determinant of d+1 projected points, i.e. d! times the
/// simplex volume.
inline Rational simplex_det(const std::vector<Vector>& pts,
                            const std::vector<std::size_t>& cell) {
  const std::size_t d = pts[0].size();
  Matrix m(d + 1, d + 1);
  for (std::size_t r = 0; r < cell.size(); ++r) {
    m(r, 0) = 1;
    for (std::size_t c = 0; c < d; ++c) m(r, c + 1) = pts[cell[r]][c];
  }
  Rational dd = det(m);
  return dd < 0 ? -dd : dd;
}

/// Total volume (times d!) of the regular subdivision induced by a
/// generic lifting, an oracle independent of any given triangulation.
inline Rational lifted_subdivision_volume(const std::vector<Vector>& pts) {
  const std::size_t n = pts.size();
  const std::size_t d = pts[0].size();
  for (int attempt = 0; attempt < 10; ++attempt) {
    Vector w(n);
    for (std::size_t j = 0; j < n; ++j) {
      w[j] = Rational(static_cast<long>((j + 1) * (j + 1)));
      for (int a = 0; a < attempt; ++a) w[j] *= Rational(j + 2) / Rational(j + 1);
    }
    Rational total = 0;
    bool generic = true;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t next) {
      if (!generic) return;
      if (cur.size() == d + 1) {
        // Affine functional through the lifted cell.
        Matrix m(d + 1, d + 1);
        Vector rhs(d + 1);
        for (std::size_t r = 0; r <= d; ++r) {
          m(r, 0) = 1;
          for (std::size_t c = 0; c < d; ++c) m(r, c + 1) = pts[cur[r]][c];
          rhs[r] = w[cur[r]];
        }
        if (rank(m) != d + 1) return;  // affinely dependent
        auto coeff = solve(m, rhs);
        for (std::size_t k = 0; k < n && generic; ++k) {
          if (std::find(cur.begin(), cur.end(), k) != cur.end()) continue;
          Rational lift = (*coeff)[0];
          for (std::size_t c = 0; c < d; ++c) lift += (*coeff)[c + 1] * pts[k][c];
          if (lift == w[k]) generic = false;   // degenerate lifting
          if (lift >= w[k]) return;            // not a lower cell
        }
        if (generic) total += simplex_det(pts, cur);
        return;
      }
      if (n - next < d + 1 - cur.size()) return;
      for (std::size_t i = next; i < n; ++i) {
        cur.push_back(i);
        rec(i + 1);
        cur.pop_back();
        if (!generic) return;
      }
    };
    rec(0);
    if (generic) return total;
  }
  throw TpolyError("lifted_subdivision_volume: no generic lifting found");
}

}  // namespace birkhoff_detail

/// Checks that the 32 simplices are the maximal cells of a polyhedral
/// subdivision of the face: every facet of every simplex either lies on
/// a boundary hyperplane x_{i,j} = 0 of B4 or is shared with exactly
/// one other simplex; each simplex is full-dimensional; and the
/// volumes add up to the hull volume computed by an independent
/// lifting decomposition. The computed classifications are compared
/// entry by entry against the printed ledger.
inline SubdivisionReport verify_triangulation(const B4FaceData& data) {
  SubdivisionReport rep;
  const auto& t = data.triangulation;

  for (std::size_t s = 0; s < t.size(); ++s) {
    Matrix cols = data.homogenized.select_cols(t[s]);
    if (rank(cols) != 8)
      rep.failures.push_back("simplex " + std::to_string(s + 1) +
                             " is not full-dimensional");
  }

  // Boundary hyperplanes of the face: cells (i,j) other than the two
  // corners fixed to zero.
  std::vector<std::size_t> boundary_cells;
  for (std::size_t c = 0; c < 16; ++c)
    if (c != 0 && c != 15) boundary_cells.push_back(c);

  bool all_match = true;
  for (std::size_t s = 0; s < t.size(); ++s) {
    for (std::size_t drop = 0; drop < 8; ++drop) {
      std::vector<std::size_t> facet;
      for (std::size_t k = 0; k < 8; ++k)
        if (k != drop) facet.push_back(t[s][k]);
      FacetClassification fc;
      fc.simplex = s;
      fc.dropped = drop;
      // Shared with which other simplices?
      std::vector<std::size_t> shared;
      for (std::size_t s2 = 0; s2 < t.size(); ++s2) {
        if (s2 == s) continue;
        if (std::includes(t[s2].begin(), t[s2].end(), facet.begin(), facet.end()))
          shared.push_back(s2);
      }
      // On which boundary hyperplanes? (All vertices of F have
      // non-negative entries, so containment in the hyperplane is the
      // whole condition.)
      std::vector<std::size_t> on;
      for (auto c : boundary_cells) {
        bool zero = true;
        for (auto v : facet)
          if (data.homogenized(1 + c, v) != 0) {
            zero = false;
            break;
          }
        if (zero) on.push_back(c);
      }
      std::string name = "facet " + std::to_string(s + 1) + "/" +
                         std::to_string(drop);
      if (shared.size() > 1)
        rep.failures.push_back(name + " shared by more than two simplices");
      else if (shared.size() == 1 && !on.empty())
        rep.failures.push_back(name + " both shared and on the boundary");
      else if (shared.empty() && on.empty())
        rep.failures.push_back(name + " neither shared nor on the boundary");
      else if (shared.size() == 1) {
        fc.on_boundary = false;
        fc.shared_with = shared[0];
      } else {
        fc.on_boundary = true;
        fc.boundary_cell = on[0];
      }
      // Compare to the printed ledger.
      bool kind_boundary = b4_data::kFacetKind[s][drop] == 0;
      int value = b4_data::kFacetValue[s][drop];
      if (kind_boundary != fc.on_boundary ||
          (fc.on_boundary && value != static_cast<int>(fc.boundary_cell)) ||
          (!fc.on_boundary && value != static_cast<int>(fc.shared_with))) {
        all_match = false;
        rep.failures.push_back(name + " disagrees with the printed ledger");
      }
      rep.classifications.push_back(fc);
    }
  }
  rep.matches_printed_ledger = all_match && rep.failures.empty();

  // Volume conservation against an independent decomposition.
  auto pts = birkhoff_detail::projected_points(data.homogenized);
  rep.triangulation_volume = 0;
  for (const auto& cell : t)
    rep.triangulation_volume += birkhoff_detail::simplex_det(pts, cell);
  rep.hull_volume = birkhoff_detail::lifted_subdivision_volume(pts);
  if (rep.triangulation_volume != rep.hull_volume)
    rep.failures.push_back("triangulation volume differs from hull volume");
  return rep;
}

/// Outcome of the regularity decision, with both deciders' artifacts.
struct RegularityResult {
  bool regular = false;
  Vector cone_point;        // interior point of the cone intersection
  Vector lifting;           // lifting weights realizing the triangulation
  // Certificate for non-regularity: weights on the strict facet rows of
  // the cone system whose left-hand sides cancel.
  Vector certificate;
  std::vector<std::pair<Vector, Rational>> certificate_rows;
};

/// Decides regularity of a triangulation of a vector configuration two
/// ways: non-emptiness of the intersection of the relative interiors
/// of the complementary Gale cones, and the standard lifting-weight LP.
/// Throws if the two deciders disagree.
inline RegularityResult is_regular(const Matrix& config,
                                   const std::vector<std::vector<std::size_t>>& t) {
  const std::size_t n = config.cols();
  Matrix gale = kernel_basis(config).transposed();
  const std::size_t g = gale.rows();

  // Route 1: strict feasibility of all facet inequalities of all
  // complementary cones.
  HalfspaceSystem cones;
  for (const auto& cell : t) {
    std::vector<std::size_t> comp;
    for (std::size_t j = 0; j < n; ++j)
      if (std::find(cell.begin(), cell.end(), j) == cell.end()) comp.push_back(j);
    if (comp.size() != g)
      throw TpolyError("is_regular: cell complement has the wrong size");
    Matrix gen = gale.select_cols(comp);
    Matrix inv = inverse(gen);  // throws when the cone is not simple
    for (std::size_t i = 0; i < g; ++i)
      cones.strict.push_back({inv.row(i), Rational(0)});
  }
  auto cone_res = strict_feasible(cones);

  // Route 2: lifting weights whose lower envelope induces t.
  auto pts = birkhoff_detail::projected_points(config);
  const std::size_t d = pts[0].size();
  HalfspaceSystem lift;
  for (const auto& cell : t) {
    Matrix m(d + 1, d + 1);
    for (std::size_t r = 0; r <= d; ++r) {
      m(r, 0) = 1;
      for (std::size_t c = 0; c < d; ++c) m(r, c + 1) = pts[cell[r]][c];
    }
    Matrix minv = inverse(m);
    for (std::size_t k = 0; k < n; ++k) {
      if (std::find(cell.begin(), cell.end(), k) != cell.end()) continue;
      // Barycentric coordinates of point k in the cell.
      Vector hom(d + 1);
      hom[0] = 1;
      for (std::size_t c = 0; c < d; ++c) hom[c + 1] = pts[k][c];
      Vector lambda(d + 1, Rational(0));
      for (std::size_t r = 0; r <= d; ++r)
        for (std::size_t c = 0; c <= d; ++c)
          lambda[c] += hom[r] * minv(r, c);
      // w_k - sum lambda_j w_j > 0.
      Vector row(n, Rational(0));
      row[k] += 1;
      for (std::size_t r = 0; r <= d; ++r) row[cell[r]] -= lambda[r];
      lift.strict.push_back({std::move(row), Rational(0)});
    }
  }
  auto lift_res = strict_feasible(lift);

  if (cone_res.feasible != lift_res.feasible)
    throw TpolyError("is_regular: the two deciders disagree");

  RegularityResult res;
  res.regular = cone_res.feasible;
  if (res.regular) {
    res.cone_point = cone_res.point;
    res.lifting = lift_res.point;
  } else {
    res.certificate = cone_res.strict_weights;
    for (std::size_t i = 0; i < cones.strict.size(); ++i)
      if (cone_res.strict_weights[i] != 0)
        res.certificate_rows.push_back(cones.strict[i]);
  }
  return res;
}

/// Description of the intersection of the closed complementary cones.
/// The printed expectation is compared against, never assumed: the
/// computed generator is authoritative.
struct ConeIntersection {
  std::size_t dimension = 0;
  bool single_ray = false;
  Vector ray;                  // generator when single_ray
  Vector printed_expectation;  // the ray coordinates stated in print
  bool matches_printed = false;
};

namespace birkhoff_detail {

inline std::vector<std::pair<Vector, Rational>> closed_cone_rows(
    const Matrix& gale, const std::vector<std::vector<std::size_t>>& t) {
  const std::size_t n = gale.cols(), g = gale.rows();
  std::vector<std::pair<Vector, Rational>> rows;
  for (const auto& cell : t) {
    std::vector<std::size_t> comp;
    for (std::size_t j = 0; j < n; ++j)
      if (std::find(cell.begin(), cell.end(), j) == cell.end()) comp.push_back(j);
    Matrix inv = inverse(gale.select_cols(comp));
    for (std::size_t i = 0; i < g; ++i) rows.push_back({inv.row(i), Rational(0)});
  }
  return rows;
}

}  // namespace birkhoff_detail

/// The constraints of {y : row . y >= 0} forced to equality over the
/// whole cone.
inline std::vector<Vector> forced_equalities(
    const std::vector<std::pair<Vector, Rational>>& rows) {
  std::vector<Vector> forced;
  for (const auto& [normal, off] : rows) {
    (void)off;
    std::vector<std::pair<Vector, Rational>> ge = rows;
    Vector bound = normal;
    for (auto& x : bound) x = -x;
    ge.push_back({bound, Rational(-1)});  // normal . y <= 1
    auto res = maximize_over_system(ge, {}, normal);
    if (res.status == LpStatus::Optimal && res.value == 0) forced.push_back(normal);
  }
  return forced;
}

/// Dimension of the cone {y : row . y >= 0 for all rows}: the ambient
/// dimension minus the rank of the constraints forced to equality.
inline std::size_t cone_dimension(const std::vector<std::pair<Vector, Rational>>& rows,
                                  std::size_t dim) {
  auto forced = forced_equalities(rows);
  if (forced.empty()) return dim;
  Matrix m(forced.size(), dim);
  for (std::size_t i = 0; i < forced.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = forced[i][j];
  return dim - rank(m);
}

/// Exact intersection of the 32 closed complementary cones of the B4
/// triangulation. The computed generator is compared against the
/// printed coordinates; a mismatch is reported, not asserted away.
inline ConeIntersection closed_cone_intersection(const B4FaceData& data) {
  const std::size_t g = data.gale.rows();
  auto rows = birkhoff_detail::closed_cone_rows(data.gale, data.triangulation);
  ConeIntersection out;
  out.printed_expectation = Vector(g, Rational(0));
  out.printed_expectation[g - 1] = 1;

  auto forced = forced_equalities(rows);
  Matrix m(forced.size(), g);
  for (std::size_t i = 0; i < forced.size(); ++i)
    for (std::size_t j = 0; j < g; ++j) m(i, j) = forced[i][j];
  out.dimension = g - rank(m);
  if (out.dimension != 1) return out;

  Matrix ker = kernel_basis(m);
  if (ker.cols() != 1)
    throw TpolyError("closed_cone_intersection: inconsistent equality rank");
  auto canon = canonical_direction(ker.col(0));
  for (int sign : {1, -1}) {
    Vector dir(g);
    for (std::size_t j = 0; j < g; ++j) dir[j] = Rational(canon[j]) * sign;
    bool inside = true;
    for (const auto& [normal, off] : rows)
      if (dot(normal, dir) < off) {
        inside = false;
        break;
      }
    if (inside) {
      if (out.single_ray) {
        // Both orientations inside: a line, not a ray.
        out.single_ray = false;
        return out;
      }
      out.single_ray = true;
      out.ray = dir;
    }
  }
  out.matches_printed = out.single_ray && out.ray == out.printed_expectation;
  return out;
}

}  // namespace tpoly

#endif
