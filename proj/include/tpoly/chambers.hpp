#ifndef TPOLY_CHAMBERS_HPP
#define TPOLY_CHAMBERS_HPP

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "tpoly/lp.hpp"
#include "tpoly/transport.hpp"
#include "tpoly/vertex_enum.hpp"

namespace tpoly {

/// Gale transform of a full-row-rank configuration: a basis of the
/// right kernel, transposed to a configuration of cols(a) vectors of
/// rank cols - rank.
inline Matrix gale_transform(const Matrix& a) {
  if (rank(a) != a.rows())
    throw TpolyError("gale_transform: configuration must have full row rank");
  return kernel_basis(a).transposed();
}

/// The deduplicated wall hyperplanes of a configuration: every normal
/// is orthogonal to rank-1 linearly independent columns, stored as a
/// primitive integer vector with positive leading entry.
struct WallArrangement {
  Matrix a;                                   // r x n, full row rank
  std::vector<std::vector<Integer>> normals;  // canonical forms

  Rational eval(std::size_t wall, const Vector& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < y.size(); ++i)
      if (normals[wall][i] != 0) s += Rational(normals[wall][i]) * y[i];
    return s;
  }
};

struct Chamber {
  std::vector<std::int8_t> signature;   // +1/-1 per wall, at the representative
  Vector representative;                // strictly inside, reduced coordinates
  std::size_t basis_count = 0;
  std::vector<std::size_t> members;     // bases whose cone contains the chamber
};

struct ChamberGuards {
  std::size_t max_rank = 6;
  std::size_t max_walls = 1000;
};

/// Chamber adjacency discovered during the breadth-first search.
struct ChamberEdge {
  std::size_t a = 0, b = 0;
  std::size_t wall = 0;
};

struct ChamberComplex {
  WallArrangement walls;
  std::vector<std::vector<std::size_t>> bases;
  // For basis b and slot i: basis_conditions[b][i] = (wall, sign); a
  // point lies strictly inside cone(bases[b]) iff all r signed wall
  // values are positive.
  std::vector<std::vector<std::pair<std::size_t, std::int8_t>>> basis_conditions;
  std::vector<Chamber> chambers;
  std::vector<ChamberEdge> edges;
};

namespace chamber_detail {

inline void subsets_rec(std::size_t n, std::size_t k, std::size_t next,
                        std::vector<std::size_t>& cur,
                        const std::function<void(const std::vector<std::size_t>&)>& emit) {
  if (cur.size() == k) {
    emit(cur);
    return;
  }
  if (n - next < k - cur.size()) return;
  for (std::size_t i = next; i < n; ++i) {
    cur.push_back(i);
    subsets_rec(n, k, i + 1, cur, emit);
    cur.pop_back();
  }
}

inline WallArrangement build_walls(const Matrix& a, const ChamberGuards& guards) {
  WallArrangement wa;
  wa.a = a;
  const std::size_t r = a.rows(), n = a.cols();
  std::set<std::vector<Integer>> seen;
  std::vector<std::size_t> cur;
  subsets_rec(n, r - 1, 0, cur, [&](const std::vector<std::size_t>& idx) {
    Matrix rows(r - 1, r);
    for (std::size_t i = 0; i + 1 < r; ++i)
      for (std::size_t j = 0; j < r; ++j) rows(i, j) = a(j, idx[i]);
    Matrix ker = kernel_basis(rows);
    if (ker.cols() != 1) return;  // columns do not span a hyperplane
    auto canon = canonical_direction(ker.col(0));
    if (seen.insert(canon).second) wa.normals.push_back(std::move(canon));
  });
  std::sort(wa.normals.begin(), wa.normals.end());
  if (wa.normals.size() > guards.max_walls)
    throw GuardError("chamber walls exceed the configured guard");
  return wa;
}

}  // namespace chamber_detail

/// Enumerates the chambers of cone(A) by breadth-first search on the
/// chamber complex itself: a chamber is the set of bases whose cones
/// contain it, its closure is cut out by the facet conditions of those
/// cones, facets are found by exact LP over that condition system, and
/// crossing a facet updates the membership set combinatorially.
inline ChamberComplex enumerate_chambers(const Matrix& a,
                                         const ChamberGuards& guards = {}) {
  using namespace chamber_detail;
  const std::size_t r = a.rows(), n = a.cols();
  if (rank(a) != r)
    throw TpolyError("enumerate_chambers: configuration must have full row rank");
  if (r > guards.max_rank)
    throw GuardError("enumerate_chambers: rank exceeds the configured guard");

  const bool progress = std::getenv("TPOLY_CHAMBER_PROGRESS") != nullptr;
  ChamberComplex cc;
  cc.walls = build_walls(a, guards);
  const std::size_t nw = cc.walls.normals.size();
  if (progress) std::fprintf(stderr, "[chambers] %zu walls\n", nw);

  // All column bases with the wall/sign conditions of their cones, and
  // per-wall incidence lists for the crossing updates.
  std::vector<std::vector<std::pair<std::size_t, std::int8_t>>> on_wall(nw);
  {
    std::map<std::vector<Integer>, std::size_t> wall_ids;
    for (std::size_t w = 0; w < nw; ++w) wall_ids[cc.walls.normals[w]] = w;
    std::vector<std::size_t> cur;
    subsets_rec(n, r, 0, cur, [&](const std::vector<std::size_t>& idx) {
      Matrix ab = a.select_cols(idx);
      if (rank(ab) != r) return;
      Matrix inv = inverse(ab);
      std::vector<std::pair<std::size_t, std::int8_t>> conds;
      for (std::size_t i = 0; i < r; ++i) {
        Vector row = inv.row(i);
        auto canon = canonical_direction(row);
        auto it = wall_ids.find(canon);
        if (it == wall_ids.end())
          throw TpolyError("enumerate_chambers: basis facet is not a wall");
        std::int8_t sign = 0;
        for (std::size_t j = 0; j < r; ++j)
          if (row[j] != 0) {
            sign = (row[j] > 0) == (cc.walls.normals[it->second][j] > 0) ? 1 : -1;
            break;
          }
        conds.push_back({it->second, sign});
      }
      for (const auto& [w, s] : conds)
        on_wall[w].push_back({cc.bases.size(), s});
      cc.bases.push_back(idx);
      cc.basis_conditions.push_back(std::move(conds));
    });
  }

  if (progress) std::fprintf(stderr, "[chambers] %zu bases\n", cc.bases.size());
  auto eval_all = [&](const Vector& y) {
    std::vector<Rational> vals(nw);
    for (std::size_t w = 0; w < nw; ++w) vals[w] = cc.walls.eval(w, y);
    return vals;
  };
  auto signature_of = [&](const Vector& y) {
    std::vector<std::int8_t> sig(nw);
    for (std::size_t w = 0; w < nw; ++w) {
      int s = sign(cc.walls.eval(w, y));
      if (s == 0) throw TpolyError("enumerate_chambers: point on a wall");
      sig[w] = static_cast<std::int8_t>(s);
    }
    return sig;
  };
  auto members_of_signature = [&](const std::vector<std::int8_t>& sig) {
    std::vector<std::size_t> m;
    for (std::size_t b = 0; b < cc.bases.size(); ++b) {
      bool in = true;
      for (const auto& [w, s] : cc.basis_conditions[b])
        if (sig[w] != s) {
          in = false;
          break;
        }
      if (in) m.push_back(b);
    }
    return m;
  };

  // Seed: sum of columns, jittered coordinatewise by 1/2, 1/3, 1/5, ...
  // until no wall sign vanishes.
  Vector seed(r, Rational(0));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < r; ++i) seed[i] += a(i, j);
  {
    static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37,
                                  41, 43, 47, 53, 59, 61, 67, 71};
    Rational scale = 1;
    for (int attempt = 0; attempt < 64; ++attempt) {
      bool clean = true;
      for (std::size_t w = 0; w < nw && clean; ++w)
        if (cc.walls.eval(w, seed) == 0) clean = false;
      if (clean) break;
      scale /= 64;
      for (std::size_t i = 0; i < r; ++i)
        seed[i] += scale / primes[i % (sizeof(primes) / sizeof(primes[0]))];
    }
  }

  struct Witness {
    Vector point;
    std::vector<Rational> wall_values;  // cached evaluations at the point
  };
  std::vector<std::vector<Witness>> witness_cache(nw);
  struct Denial {
    std::vector<std::pair<std::size_t, std::int8_t>> support;
  };
  std::vector<std::vector<Denial>> denial_cache(nw);

  if (progress) std::fprintf(stderr, "[chambers] seeding done\n");
  // Pairwise products of wall normals, so ray slopes are lookups.
  std::vector<std::vector<Rational>> gram(nw, std::vector<Rational>(nw));
  for (std::size_t v = 0; v < nw; ++v)
    for (std::size_t w = v; w < nw; ++w) {
      Integer s = 0;
      for (std::size_t i = 0; i < r; ++i)
        s += cc.walls.normals[v][i] * cc.walls.normals[w][i];
      gram[v][w] = gram[w][v] = Rational(s);
    }

  // Spanning directions of each wall hyperplane, built on demand.
  std::vector<Matrix> hyper_basis(nw);
  auto hyperplane_basis = [&](std::size_t w) -> const Matrix& {
    if (hyper_basis[w].cols() == 0) {
      Matrix row(1, r);
      for (std::size_t i = 0; i < r; ++i)
        row(0, i) = Rational(cc.walls.normals[w][i]);
      hyper_basis[w] = kernel_basis(row);
    }
    return hyper_basis[w];
  };

  // Moves a point on wall w off every other wall hyperplane while
  // keeping the signed conditions strict: add geometrically decaying
  // multiples of the hyperplane's spanning directions, scaled below
  // the smallest condition slack. Some epsilon in the halving sequence
  // avoids the finitely many roots where another wall vanishes.
  auto clean_on_wall = [&](std::size_t w, const Vector& y0,
                           const std::vector<std::int8_t>& active) -> Witness {
    const Matrix& dirs = hyperplane_basis(w);
    Rational eps;
    {
      Rational bound = -1;
      for (std::size_t v = 0; v < nw; ++v) {
        if (v == w || active[v] == 0) continue;
        Rational slack = Rational(active[v]) * cc.walls.eval(v, y0);
        Rational weight = 1;
        for (std::size_t i = 0; i < dirs.cols(); ++i) {
          Rational d = 0;
          for (std::size_t j = 0; j < r; ++j)
            if (cc.walls.normals[v][j] != 0)
              d += Rational(cc.walls.normals[v][j]) * dirs(j, i);
          weight += d < 0 ? -d : d;
        }
        Rational cap = slack / weight;
        if (bound < 0 || cap < bound) bound = cap;
      }
      eps = bound < 0 ? Rational(1) : bound / 2;
      if (eps > Rational(1) / 2) eps = Rational(1) / 2;
    }
    for (int attempt = 0; attempt < 128; ++attempt, eps /= 2) {
      Vector y = y0;
      Rational power = 1;
      for (std::size_t i = 0; i < dirs.cols(); ++i) {
        power *= eps;
        for (std::size_t j = 0; j < r; ++j)
          if (dirs(j, i) != 0) y[j] += power * dirs(j, i);
      }
      Witness cand;
      cand.wall_values.resize(nw);
      bool clean = true;
      for (std::size_t v = 0; v < nw; ++v) {
        cand.wall_values[v] = cc.walls.eval(v, y);
        if (v != w && cand.wall_values[v] == 0) clean = false;
        if (v != w && active[v] != 0 &&
            !(Rational(active[v]) * cand.wall_values[v] > 0))
          throw TpolyError("enumerate_chambers: jitter broke a condition");
      }
      if (cand.wall_values[w] != 0)
        throw TpolyError("enumerate_chambers: jitter left the wall");
      if (!clean) continue;
      cand.point = std::move(y);
      return cand;
    }
    throw TpolyError("enumerate_chambers: witness cleanup failed");
  };

  std::map<std::vector<std::size_t>, std::size_t> chamber_ids;
  {
    auto sig0 = signature_of(seed);
    auto mem0 = members_of_signature(sig0);
    if (mem0.empty())
      throw TpolyError("enumerate_chambers: seed point outside the cone");
    Chamber ch;
    ch.signature = std::move(sig0);
    ch.representative = seed;
    ch.members = mem0;
    ch.basis_count = mem0.size();
    chamber_ids[mem0] = 0;
    cc.chambers.push_back(std::move(ch));
  }

  for (std::size_t head = 0; head < cc.chambers.size(); ++head) {
    if (progress && head % 200 == 0)
      std::fprintf(stderr, "[chambers] explored %zu of %zu known\n", head,
                   cc.chambers.size());
    const auto members = cc.chambers[head].members;        // copies
    const auto sig = cc.chambers[head].signature;

    // Facet condition system of this chamber: the union of the member
    // cones' facet conditions.
    std::vector<std::int8_t> active(nw, 0);
    for (auto b : members)
      for (const auto& [w, s] : cc.basis_conditions[b]) {
        if (active[w] != 0 && active[w] != s)
          throw TpolyError("enumerate_chambers: inconsistent member conditions");
        active[w] = s;
      }
    std::vector<std::size_t> cond_walls;
    for (std::size_t w = 0; w < nw; ++w)
      if (active[w] != 0) cond_walls.push_back(w);

    // Fast path: rays from the representative towards each candidate
    // wall exit I(M) through a facet; a unique blocking condition is a
    // facet certificate with a ready-made relative-interior witness.
    const Vector& rep = cc.chambers[head].representative;
    std::vector<Rational> rep_vals = eval_all(rep);
    std::map<std::size_t, Witness> confirmed;
    for (auto w_target : cond_walls) {
      if (confirmed.count(w_target)) continue;
      // Direction -active[w_target] * normal; slopes from the Gram cache.
      std::size_t binding = nw;
      Rational best;
      int ties = 0;
      for (auto v : cond_walls) {
        Rational slope = Rational(-active[w_target] * active[v]) *
                         gram[v][w_target];
        if (slope >= 0) continue;
        Rational ratio = (Rational(active[v]) * rep_vals[v]) / -slope;
        if (binding == nw || ratio < best) {
          binding = v;
          best = ratio;
          ties = 1;
        } else if (ratio == best) {
          ++ties;
        }
      }
      if (binding == nw || ties != 1 || confirmed.count(binding)) continue;
      Vector exit(r);
      for (std::size_t i = 0; i < r; ++i)
        exit[i] = rep[i] + best * Rational(-active[w_target]) *
                               Rational(cc.walls.normals[w_target][i]);
      auto vals = eval_all(exit);
      bool clean = true;
      for (std::size_t v = 0; v < nw && clean; ++v)
        if (v != binding && vals[v] == 0) clean = false;
      if (clean) {
        Witness cand;
        cand.point = std::move(exit);
        cand.wall_values = std::move(vals);
        confirmed.emplace(binding, std::move(cand));
      } else {
        confirmed.emplace(binding, clean_on_wall(binding, exit, active));
      }
    }

    for (auto w : cond_walls) {
      const std::int8_t side = active[w];
      // Facet test: a point with wall_w = 0 and every other condition
      // strictly positive. Ray-confirmed facets and caches first.
      const Witness* witness = nullptr;
      auto conf = confirmed.find(w);
      if (conf != confirmed.end()) witness = &conf->second;
      for (const auto& cand : witness_cache[w]) {
        if (witness) break;
        if (cand.wall_values[w] != 0) continue;
        bool match = true;
        for (auto v : cond_walls) {
          if (v == w) continue;
          if (!(active[v] * cand.wall_values[v] > 0)) {
            match = false;
            break;
          }
        }
        if (match) {
          witness = &cand;
          break;
        }
      }
      bool denied = false;
      if (!witness) {
        for (const auto& cert : denial_cache[w]) {
          bool applies = true;
          for (const auto& [v, s] : cert.support)
            if (active[v] != s) {
              applies = false;
              break;
            }
          if (applies) {
            denied = true;
            break;
          }
        }
      }
      if (!witness && !denied) {
        HalfspaceSystem sys;
        Vector normal_w(r);
        for (std::size_t i = 0; i < r; ++i)
          normal_w[i] = Rational(cc.walls.normals[w][i]);
        sys.equalities.push_back({normal_w, Rational(0)});
        for (auto v : cond_walls) {
          if (v == w) continue;
          Vector row(r);
          for (std::size_t i = 0; i < r; ++i)
            row[i] = Rational(cc.walls.normals[v][i]) * active[v];
          sys.weak.push_back({std::move(row), Rational(1)});
        }
        auto res = strict_feasible(sys);
        if (!res.feasible) {
          // Farkas weights prove the wall is redundant for any chamber
          // sharing the signs it touches.
          Denial cert;
          std::size_t k = 0;
          for (auto v : cond_walls) {
            if (v == w) continue;
            if (res.weak_weights[k] != 0) cert.support.push_back({v, active[v]});
            ++k;
          }
          denial_cache[w].push_back(std::move(cert));
          denied = true;
        } else {
          // LP witnesses are basic solutions and usually sit on other
          // wall hyperplanes; jitter them clean inside the wall.
          witness_cache[w].push_back(clean_on_wall(w, res.point, active));
          witness = &witness_cache[w].back();
        }
      }
      if (denied || !witness) continue;

      // Membership across the facet: members without a w-condition
      // stay; bases conditioned on the far side whose other conditions
      // hold strictly at the witness enter.
      std::vector<std::size_t> nmem;
      for (auto b : members) {
        bool crosses = false;
        for (const auto& [v, s] : cc.basis_conditions[b])
          if (v == w) {
            crosses = true;
            break;
          }
        if (!crosses) nmem.push_back(b);
      }
      for (const auto& [b, s] : on_wall[w]) {
        if (s != -side) continue;
        bool enters = true;
        for (const auto& [v, sv] : cc.basis_conditions[b]) {
          if (v == w) continue;
          if (!(sv * witness->wall_values[v] > 0)) {
            enters = false;
            break;
          }
        }
        if (enters) nmem.push_back(b);
      }
      if (nmem.empty()) continue;  // crossing exits cone(A)
      std::sort(nmem.begin(), nmem.end());

      auto it = chamber_ids.find(nmem);
      if (it != chamber_ids.end()) {
        if (it->second != head) cc.edges.push_back({head, it->second, w});
        continue;
      }

      // Representative of the neighbor: step past the witness along
      // the wall normal, far enough to stay clear of every hyperplane.
      Vector dir(r);
      for (std::size_t i = 0; i < r; ++i)
        dir[i] = Rational(cc.walls.normals[w][i]) * (-side);
      Rational tmax = -1;
      for (std::size_t v = 0; v < nw; ++v) {
        if (v == w) continue;
        Rational den = cc.walls.eval(v, dir);
        if (den == 0) continue;
        Rational bound = abs(witness->wall_values[v]) / abs(den);
        if (tmax < 0 || bound < tmax) tmax = bound;
      }
      Rational t = tmax < 0 ? Rational(1) : tmax / 2;
      Vector npoint(r);
      for (std::size_t i = 0; i < r; ++i)
        npoint[i] = witness->point[i] + t * dir[i];

      Chamber ch;
      ch.signature = signature_of(npoint);
      if (members_of_signature(ch.signature) != nmem)
        throw TpolyError("enumerate_chambers: crossing landed off-target");
      ch.representative = std::move(npoint);
      ch.members = nmem;
      ch.basis_count = nmem.size();
      chamber_ids[nmem] = cc.chambers.size();
      cc.edges.push_back({head, cc.chambers.size(), w});
      cc.chambers.push_back(std::move(ch));
    }
  }

  // Canonical order, with edge endpoints remapped.
  std::vector<std::size_t> order(cc.chambers.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return cc.chambers[x].signature < cc.chambers[y].signature;
  });
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  std::vector<Chamber> sorted;
  sorted.reserve(cc.chambers.size());
  for (auto idx : order) sorted.push_back(std::move(cc.chambers[idx]));
  cc.chambers = std::move(sorted);
  for (auto& e : cc.edges) {
    e.a = pos[e.a];
    e.b = pos[e.b];
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  std::sort(cc.edges.begin(), cc.edges.end(),
            [](const ChamberEdge& x, const ChamberEdge& y) {
              return std::tie(x.a, x.b, x.wall) < std::tie(y.a, y.b, y.wall);
            });
  cc.edges.erase(std::unique(cc.edges.begin(), cc.edges.end(),
                             [](const ChamberEdge& x, const ChamberEdge& y) {
                               return x.a == y.a && x.b == y.b && x.wall == y.wall;
                             }),
                 cc.edges.end());
  return cc;
}

/// Number of bases whose cone strictly contains the given point (all
/// barycentric coordinates positive). Recomputed from scratch as an
/// independent check on the membership bookkeeping.
inline std::size_t chamber_basis_count(const Matrix& a, const Vector& point) {
  const std::size_t r = a.rows(), n = a.cols();
  std::size_t count = 0;
  std::vector<std::size_t> cur;
  chamber_detail::subsets_rec(n, r, 0, cur, [&](const std::vector<std::size_t>& idx) {
    Matrix ab = a.select_cols(idx);
    if (rank(ab) != r) return;
    auto x = solve(ab, point);
    if (!x) return;
    for (const auto& c : *x)
      if (!(c > 0)) return;
    ++count;
  });
  return count;
}

inline std::size_t chamber_basis_count(const Matrix& a, const Chamber& c) {
  return chamber_basis_count(a, c.representative);
}

}  // namespace tpoly

#endif
