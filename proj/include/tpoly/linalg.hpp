#ifndef TPOLY_LINALG_HPP
#define TPOLY_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tpoly/matrix.hpp"
#include "tpoly/rational.hpp"

namespace tpoly {

// Fraction-free (Bareiss) elimination. Entries stay integral when the
// input is integral, which keeps coefficient growth under control; all
// divisions below are exact.

/// Echelon form produced by fraction-free elimination with row pivoting
/// and column skipping. `pivot_cols[i]` is the pivot column of row i.
template <typename T>
struct Echelon {
  MatrixT<T> m;
  std::vector<std::size_t> pivot_cols;
};

template <typename T>
Echelon<T> fraction_free_echelon(MatrixT<T> m) {
  Echelon<T> e;
  const std::size_t rows = m.rows(), cols = m.cols();
  T prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == T(0)) ++piv;
    if (piv == rows) continue;
    m.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m(i, j) = (m(i, j) * m(r, c) - m(i, c) * m(r, j)) / prev;
      m(i, c) = T(0);
    }
    prev = m(r, c);
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.m = std::move(m);
  return e;
}

/// Clears denominators row by row; preserves rank and right kernel.
inline MatrixT<Integer> clear_row_denominators(const Matrix& m) {
  MatrixT<Integer> z(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, denom(m(i, j)));
    for (std::size_t j = 0; j < m.cols(); ++j)
      z(i, j) = numer(m(i, j)) * (l / denom(m(i, j)));
  }
  return z;
}

inline std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return fraction_free_echelon(clear_row_denominators(m)).pivot_cols.size();
}

template <typename T>
std::size_t rank(const MatrixT<T>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return fraction_free_echelon(m).pivot_cols.size();
}

/// Determinant of a square matrix, exact.
inline Rational det(const Matrix& m) {
  if (m.rows() != m.cols()) throw TpolyError("det of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Matrix a = m;
  int sign = 1;
  Rational prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

/// Columns span the exact right kernel of m; column count equals
/// cols(m) - rank(m).
inline Matrix kernel_basis(const Matrix& m) {
  const std::size_t cols = m.cols();
  auto ech = fraction_free_echelon(clear_row_denominators(m));
  const auto& piv = ech.pivot_cols;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix k(cols, free_cols.size());
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    Vector x(cols, Rational(0));
    x[free_cols[fi]] = 1;
    for (std::size_t ri = piv.size(); ri-- > 0;) {
      Rational s = 0;
      for (std::size_t j = piv[ri] + 1; j < cols; ++j)
        if (!(ech.m(ri, j) == 0)) s += Rational(ech.m(ri, j)) * x[j];
      x[piv[ri]] = -s / Rational(ech.m(ri, piv[ri]));
    }
    for (std::size_t c = 0; c < cols; ++c) k(c, fi) = x[c];
  }
  return k;
}

/// One solution of Ax = b, or nullopt if inconsistent. Free variables
/// are set to zero.
inline std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  Matrix aug(rows, cols + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = a(i, j);
    aug(i, cols) = b[i];
  }
  auto ech = fraction_free_echelon(clear_row_denominators(aug));
  const auto& piv = ech.pivot_cols;
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  Vector x(cols, Rational(0));
  for (std::size_t ri = piv.size(); ri-- > 0;) {
    Rational s = Rational(ech.m(ri, cols));
    for (std::size_t j = piv[ri] + 1; j < cols; ++j)
      if (!(ech.m(ri, j) == 0)) s -= Rational(ech.m(ri, j)) * x[j];
    x[piv[ri]] = s / Rational(ech.m(ri, piv[ri]));
  }
  return x;
}

/// Inverse of a nonsingular square matrix.
inline Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw TpolyError("inverse of non-square matrix");
  if (n == 0) return Matrix(0, 0);
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto ech = fraction_free_echelon(clear_row_denominators(aug));
  if (ech.pivot_cols.size() < n || ech.pivot_cols[n - 1] != n - 1)
    throw TpolyError("matrix is singular");
  Matrix inv(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    Vector x(n, Rational(0));
    for (std::size_t ri = n; ri-- > 0;) {
      Rational s = Rational(ech.m(ri, n + col));
      for (std::size_t j = ri + 1; j < n; ++j)
        if (!(ech.m(ri, j) == 0)) s -= Rational(ech.m(ri, j)) * x[j];
      x[ri] = s / Rational(ech.m(ri, ri));
    }
    for (std::size_t i = 0; i < n; ++i) inv(i, col) = x[i];
  }
  return inv;
}

/// Dimension of the affine hull of a point set (-1 for empty input).
inline int affine_rank(const std::vector<Vector>& points) {
  if (points.empty()) return -1;
  if (points.size() == 1) return 0;
  Matrix diffs(points.size() - 1, points[0].size());
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t j = 0; j < points[0].size(); ++j)
      diffs(i - 1, j) = points[i][j] - points[0][j];
  return static_cast<int>(rank(diffs));
}

/// Canonical form of a line through the origin: primitive integer
/// vector whose first nonzero entry is positive. Two rational normals
/// are parallel iff their canonical forms coincide.
inline std::vector<Integer> canonical_direction(const Vector& v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, denom(q));
  std::vector<Integer> w(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    w[i] = numer(v[i]) * (l / denom(v[i]));
    g = gcd(g, w[i]);
  }
  if (g == 0) return w;  // zero vector
  int s = 0;
  for (const auto& z : w)
    if (z != 0) {
      s = z.sign();
      break;
    }
  if (s < 0) g = -g;
  for (auto& z : w) z /= g;
  return w;
}

}  // namespace tpoly

#endif
