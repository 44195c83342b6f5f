#ifndef TPOLY_LP_HPP
#define TPOLY_LP_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tpoly/linalg.hpp"
#include "tpoly/matrix.hpp"
#include "tpoly/rational.hpp"

namespace tpoly {

/// Linear constraints a.y > b (strict), a.y >= b (weak), a.y = b.
struct HalfspaceSystem {
  std::vector<std::pair<Vector, Rational>> strict;
  std::vector<std::pair<Vector, Rational>> weak;
  std::vector<std::pair<Vector, Rational>> equalities;

  std::size_t dim() const {
    if (!strict.empty()) return strict[0].first.size();
    if (!weak.empty()) return weak[0].first.size();
    if (!equalities.empty()) return equalities[0].first.size();
    return 0;
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Exact revised primal simplex on min c.x, Ax = b, x >= 0, with
/// Bland's rule. Row count is expected to be small; column count may
/// be large.
class StandardLp {
 public:
  StandardLp(Matrix a, Vector b, Vector c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  LpStatus solve() {
    const std::size_t m = a_.rows();
    for (std::size_t i = 0; i < m; ++i)
      if (b_[i] < 0) {
        for (std::size_t j = 0; j < a_.cols(); ++j) a_(i, j) = -a_(i, j);
        b_[i] = -b_[i];
        flipped_.push_back(i);
      }
    // Phase 1 with artificial variables.
    n_real_ = a_.cols();
    basis_.resize(m);
    binv_ = Matrix::identity(m);
    xb_ = b_;
    for (std::size_t i = 0; i < m; ++i) basis_[i] = n_real_ + i;
    Vector phase1_cost(n_real_ + m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) phase1_cost[n_real_ + i] = 1;
    run(phase1_cost, /*phase1=*/true);
    Rational art_sum = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (basis_[i] >= n_real_) art_sum += xb_[i];
    if (art_sum != 0) {
      status_ = LpStatus::Infeasible;
      return status_;
    }
    Vector cost(n_real_ + m, Rational(0));
    for (std::size_t j = 0; j < n_real_; ++j) cost[j] = c_[j];
    status_ = run(cost, /*phase1=*/false);
    if (status_ == LpStatus::Optimal) {
      duals_ = Vector(m, Rational(0));
      for (std::size_t i = 0; i < m; ++i) {
        Rational s = 0;
        for (std::size_t k = 0; k < m; ++k)
          if (cost[basis_[k]] != 0) s += cost[basis_[k]] * binv_(k, i);
        duals_[i] = s;
      }
      for (auto i : flipped_) duals_[i] = -duals_[i];
    }
    return status_;
  }

  Rational objective() const {
    Rational v = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] < n_real_) v += c_[basis_[i]] * xb_[i];
    return v;
  }

  Vector primal() const {
    Vector x(n_real_, Rational(0));
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (basis_[i] < n_real_) x[basis_[i]] = xb_[i];
    return x;
  }

  /// Dual prices of the rows (valid after Optimal).
  const Vector& duals() const { return duals_; }

  /// Unbounded ray: index of the entering column and the direction of
  /// basic variables (valid after Unbounded).
  std::size_t ray_col() const { return ray_col_; }

 private:
  Vector column(std::size_t j) const {
    const std::size_t m = a_.rows();
    Vector col(m, Rational(0));
    if (j < n_real_) {
      for (std::size_t i = 0; i < m; ++i) col[i] = a_(i, j);
    } else {
      col[j - n_real_] = 1;
    }
    return col;
  }

  LpStatus run(const Vector& cost, bool phase1) {
    const std::size_t m = a_.rows();
    const std::size_t n_total = n_real_ + m;
    // Dantzig pricing with a permanent switch to Bland's rule after a
    // while, which guarantees termination.
    const long bland_after = 500;
    for (long iter = 0;; ++iter) {
      if (iter > 2000000) throw TpolyError("simplex iteration cap exceeded");
      const bool bland = iter >= bland_after;
      Vector y(m, Rational(0));
      for (std::size_t i = 0; i < m; ++i) {
        Rational s = 0;
        for (std::size_t k = 0; k < m; ++k)
          if (cost[basis_[k]] != 0) s += cost[basis_[k]] * binv_(k, i);
        y[i] = s;
      }
      std::vector<bool> in_basis(n_total, false);
      for (auto bj : basis_) in_basis[bj] = true;
      std::size_t enter = n_total;
      Rational best_red;
      for (std::size_t j = 0; j < n_total; ++j) {
        if (in_basis[j]) continue;
        if (!phase1 && j >= n_real_) continue;  // artificials stay out
        Vector aj = column(j);
        Rational red = cost[j] - dot(y, aj);
        if (red < 0) {
          if (bland) {
            enter = j;
            break;  // smallest index
          }
          if (enter == n_total || red < best_red) {
            enter = j;
            best_red = red;
          }
        }
      }
      if (enter == n_total) return LpStatus::Optimal;
      Vector aj = column(enter);
      Vector d = binv_.mul(aj);
      // Ratio test. Basic artificials held at zero leave as soon as the
      // direction touches them, keeping phase-2 iterates feasible.
      std::size_t leave = m;
      Rational best;
      for (std::size_t i = 0; i < m; ++i) {
        bool blocking = d[i] > 0;
        if (!phase1 && basis_[i] >= n_real_ && d[i] != 0) blocking = true;
        if (!blocking) continue;
        Rational ratio = (d[i] > 0) ? xb_[i] / d[i] : Rational(0);
        if (leave == m || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) {
        ray_col_ = enter;
        return LpStatus::Unbounded;
      }
      pivot(enter, leave, d);
    }
  }

  void pivot(std::size_t enter, std::size_t leave, const Vector& d) {
    const std::size_t m = a_.rows();
    Rational t = d[leave] > 0 ? xb_[leave] / d[leave] : Rational(0);
    for (std::size_t i = 0; i < m; ++i) xb_[i] -= t * d[i];
    xb_[leave] = t;
    Rational piv = d[leave];
    for (std::size_t j = 0; j < m; ++j) binv_(leave, j) /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || d[i] == 0) continue;
      Rational f = d[i];
      for (std::size_t j = 0; j < m; ++j)
        binv_(i, j) -= f * binv_(leave, j);
    }
    basis_[leave] = enter;
  }

  Matrix a_;
  Vector b_, c_;
  std::size_t n_real_ = 0;
  std::vector<std::size_t> basis_;
  Matrix binv_;
  Vector xb_;
  Vector duals_;
  std::vector<std::size_t> flipped_;
  std::size_t ray_col_ = 0;
  LpStatus status_ = LpStatus::Infeasible;
};

/// Result of maximizing c.y over {G y >= h, E y = f} with y free.
struct IneqLpResult {
  LpStatus status;
  Rational value;
  Vector y;
};

/// Maximizes c.y over {G y >= h, E y = f}, y free. Solved through the
/// dual so the simplex works with dim(y)+O(1) rows regardless of the
/// number of constraints. The system is assumed feasible when c != 0
/// callers need a maximum; Infeasible/Unbounded are reported otherwise.
inline IneqLpResult maximize_over_system(
    const std::vector<std::pair<Vector, Rational>>& ge,
    const std::vector<std::pair<Vector, Rational>>& eq, const Vector& c) {
  const std::size_t r = c.size();
  const std::size_t m = ge.size(), k = eq.size();
  // Dual standard form: vars lambda (m) >= 0, mu+ (k), mu- (k);
  // rows: -G^T lambda + E^T mu = c; minimize -h^T lambda + f^T mu.
  Matrix a(r, m + 2 * k);
  Vector cost(m + 2 * k, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < r; ++i) a(i, j) = -ge[j].first[i];
    cost[j] = -ge[j].second;
  }
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      a(i, m + j) = eq[j].first[i];
      a(i, m + k + j) = -eq[j].first[i];
    }
    cost[m + j] = eq[j].second;
    cost[m + k + j] = -eq[j].second;
  }
  StandardLp lp(std::move(a), c, std::move(cost));
  LpStatus st = lp.solve();
  IneqLpResult res;
  if (st == LpStatus::Infeasible) {
    // The dual of the dual is the original problem: dual infeasible
    // means the original LP is unbounded (if feasible) or infeasible.
    res.status = LpStatus::Unbounded;
    return res;
  }
  if (st == LpStatus::Unbounded) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.value = lp.objective();
  res.y = lp.duals();
  return res;
}

/// Outcome of an exact strict-feasibility test. When feasible, `point`
/// satisfies every constraint (strict ones strictly). When infeasible,
/// the weights give a non-negative combination of the strict and weak
/// inequalities (equalities signed) whose left-hand sides cancel to the
/// zero functional while the combined right-hand side is >= 0, strict
/// if no strict inequality carries weight: an identically
/// contradictory statement.
struct StrictResult {
  bool feasible = false;
  Vector point;
  Rational slack;  // the attained minimum slack over strict rows
  Vector strict_weights, weak_weights, eq_weights;
};

/// Decides {a.y > b} x {a.y >= b} x {a.y = b} exactly, per LP duality:
/// maximize the minimum slack eps of the strict rows subject to the
/// weak/equality rows and eps <= 1; strictly feasible iff optimum > 0.
inline StrictResult strict_feasible(const HalfspaceSystem& sys) {
  const std::size_t r = sys.dim();
  const std::size_t ms = sys.strict.size(), mw = sys.weak.size(),
                    k = sys.equalities.size();
  // Variables (y, eps). Constraints: strict rows relaxed by eps, weak
  // rows as-is, eps <= 1 for boundedness.
  std::vector<std::pair<Vector, Rational>> ge;
  ge.reserve(ms + mw + 1);
  for (const auto& [a, b] : sys.strict) {
    Vector row(a);
    row.push_back(-1);
    ge.emplace_back(std::move(row), b);
  }
  for (const auto& [a, b] : sys.weak) {
    Vector row(a);
    row.push_back(0);
    ge.emplace_back(std::move(row), b);
  }
  {
    Vector row(r + 1, Rational(0));
    row[r] = -1;
    ge.emplace_back(std::move(row), Rational(-1));  // -eps >= -1
  }
  std::vector<std::pair<Vector, Rational>> eq;
  for (const auto& [a, b] : sys.equalities) {
    Vector row(a);
    row.push_back(0);
    eq.emplace_back(std::move(row), b);
  }
  Vector c(r + 1, Rational(0));
  c[r] = 1;

  // Dual standard form, built by hand so we can read the multipliers
  // off the primal solution when the system is infeasible.
  const std::size_t m = ge.size();
  Matrix a(r + 1, m + 2 * k);
  Vector cost(m + 2 * k, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < r + 1; ++i) a(i, j) = -ge[j].first[i];
    cost[j] = -ge[j].second;
  }
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < r + 1; ++i) {
      a(i, m + j) = eq[j].first[i];
      a(i, m + k + j) = -eq[j].first[i];
    }
    cost[m + j] = eq[j].second;
    cost[m + k + j] = -eq[j].second;
  }
  StandardLp lp(std::move(a), c, std::move(cost));
  LpStatus st = lp.solve();

  StrictResult res;
  auto fill_certificate = [&](const Vector& mult) {
    res.strict_weights.assign(ms, Rational(0));
    res.weak_weights.assign(mw, Rational(0));
    res.eq_weights.assign(k, Rational(0));
    for (std::size_t j = 0; j < ms; ++j) res.strict_weights[j] = mult[j];
    for (std::size_t j = 0; j < mw; ++j) res.weak_weights[j] = mult[ms + j];
    for (std::size_t j = 0; j < k; ++j)
      res.eq_weights[j] = mult[m + j] - mult[m + k + j];
  };
  if (st == LpStatus::Unbounded) {
    // Even the weak/equality part is infeasible: the unbounded dual ray
    // is a Farkas certificate. Recover it by re-solving the homogeneous
    // certificate LP directly.
    Matrix a2(r + 1 + 1, m + 2 * k);
    Vector b2(r + 2, Rational(0));
    b2[r + 1] = 1;
    Vector cost2(m + 2 * k, Rational(0));
    for (std::size_t j = 0; j < m + 2 * k; ++j) {
      Vector col(j < m ? ge[j].first
                       : (j < m + k ? eq[j - m].first : eq[j - m - k].first));
      Rational rhs = j < m ? ge[j].second
                           : (j < m + k ? eq[j - m].second : -eq[j - m - k].second);
      Rational sgn = (j >= m + k) ? -1 : 1;
      for (std::size_t i = 0; i < r + 1; ++i) a2(i, j) = sgn * col[i];
      a2(r + 1, j) = 1;
      cost2[j] = -rhs;
    }
    StandardLp cert_lp(std::move(a2), b2, std::move(cost2));
    if (cert_lp.solve() != LpStatus::Optimal || cert_lp.objective() >= 0)
      throw TpolyError("internal: certificate recovery failed");
    res.feasible = false;
    fill_certificate(cert_lp.primal());
    return res;
  }
  if (st != LpStatus::Optimal)
    throw TpolyError("internal: strict_feasible dual infeasible");
  Rational opt = lp.objective();  // value of max eps, by strong duality
  Vector yy = lp.duals();          // (y, eps) of the original problem
  if (opt > 0) {
    res.feasible = true;
    res.point.assign(yy.begin(), yy.begin() + r);
    res.slack = opt;
    for (const auto& [av, bv] : sys.strict)
      if (!(dot(av, res.point) > bv))
        throw TpolyError("internal: strict witness fails a strict row");
    for (const auto& [av, bv] : sys.weak)
      if (!(dot(av, res.point) >= bv))
        throw TpolyError("internal: strict witness fails a weak row");
    for (const auto& [av, bv] : sys.equalities)
      if (!(dot(av, res.point) == bv))
        throw TpolyError("internal: strict witness fails an equality");
    return res;
  }
  res.feasible = false;
  res.slack = opt;
  fill_certificate(lp.primal());
  return res;
}

/// Any point of {G y >= h, E y = f}, or nullopt.
inline std::optional<Vector> feasible_point(
    const std::vector<std::pair<Vector, Rational>>& ge,
    const std::vector<std::pair<Vector, Rational>>& eq) {
  HalfspaceSystem sys;
  sys.weak = ge;
  sys.equalities = eq;
  if (sys.dim() == 0) return Vector{};
  // One throwaway strict row keeps the eps machinery trivially
  // satisfiable: 0.y > -1.
  sys.strict.emplace_back(Vector(sys.dim(), Rational(0)), Rational(-1));
  auto res = strict_feasible(sys);
  if (!res.feasible) return std::nullopt;
  return res.point;
}

}  // namespace tpoly

#endif
