#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "effectkit/rational.hpp"

namespace effectkit {

// Row-reduces m in place and returns the pivot column of each pivot row.
inline std::vector<std::size_t> rref(QMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Rat inv = m[r][c];
    for (auto& x : m[r]) x /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rational_rank(QMat m) { return rref(m).size(); }

// One solution of A x = b, if any.
inline std::optional<QVec> solve_rational(const QMat& a, const QVec& b) {
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  QMat aug(rows, QVec(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  auto pivots = rref(aug);
  for (std::size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] == cols) return std::nullopt;  // 0 = 1 row
  QVec x(cols, 0);
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][cols];
  return x;
}

// Basis of the right nullspace of A.
inline QMat nullspace_rational(QMat a) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  QMat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVec v(cols, 0);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Fraction-free determinant (Bareiss).
inline Int determinant(ZMat a) {
  std::size_t n = a.size();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t sel = k + 1;
      while (sel < n && a[sel][k] == 0) ++sel;
      if (sel == n) return 0;
      std::swap(a[sel], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num / prev;  // divides exactly
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// Smith normal form U*A*V = D with U, V unimodular and the diagonal of D
// satisfying d1 | d2 | ... . V tracking is optional: callers that only
// need the generator-side transform (n x n) can skip the potentially much
// larger relation-side one.
struct SmithForm {
  ZMat d;
  ZMat u;                        // rows x rows
  std::optional<ZMat> v;         // cols x cols, if tracked
  std::vector<Int> diagonal;     // all nonzero diagonal entries, in order
  std::vector<Int> invariant_factors;  // diagonal entries > 1
  std::size_t rank = 0;
};

inline SmithForm smith_normal_form(ZMat a, bool track_v = true) {
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  SmithForm s;
  s.u = z_identity(rows);
  if (track_v) s.v = z_identity(cols);

  auto row_op = [&](std::size_t i, std::size_t j, const Int& f) {
    // row_i -= f * row_j
    for (std::size_t c = 0; c < cols; ++c) a[i][c] -= f * a[j][c];
    for (std::size_t c = 0; c < rows; ++c) s.u[i][c] -= f * s.u[j][c];
  };
  auto col_op = [&](std::size_t i, std::size_t j, const Int& f) {
    // col_i -= f * col_j
    for (std::size_t r = 0; r < rows; ++r) a[r][i] -= f * a[r][j];
    if (s.v)
      for (std::size_t r = 0; r < cols; ++r) (*s.v)[r][i] -= f * (*s.v)[r][j];
  };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(s.u[i], s.u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    if (s.v)
      for (std::size_t r = 0; r < cols; ++r) std::swap((*s.v)[r][i], (*s.v)[r][j]);
  };
  auto negate_row = [&](std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : s.u[i]) x = -x;
  };

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Find a smallest-magnitude nonzero pivot in the remaining block.
    std::size_t pi = rows, pj = cols;
    Int best = 0;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] == 0) continue;
        Int m = abs(a[i][j]);
        if (pi == rows || m < best) {
          best = m;
          pi = i;
          pj = j;
        }
      }
    if (pi == rows) break;  // block is zero
    swap_rows(t, pi);
    swap_cols(t, pj);
    if (a[t][t] < 0) negate_row(t);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (a[i][t] == 0) continue;
      Int q = a[i][t] / a[t][t];
      row_op(i, t, q);
      if (a[i][t] != 0) clean = false;  // remainder; another pass will pick it
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (a[t][j] == 0) continue;
      Int q = a[t][j] / a[t][t];
      col_op(j, t, q);
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // re-select pivot in the same block

    // Divisibility: a[t][t] must divide everything below-right.
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols && divides; ++j)
        if (a[i][j] % a[t][t] != 0) {
          // Fold that row in and restart the pivot hunt.
          row_op(t, i, Int(-1));
          divides = false;
        }
    if (!divides) continue;
    ++t;
  }

  s.d = std::move(a);
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) {
    if (s.d[i][i] == 0) break;
    s.diagonal.push_back(s.d[i][i]);
    if (s.d[i][i] > 1) s.invariant_factors.push_back(s.d[i][i]);
  }
  s.rank = s.diagonal.size();
  return s;
}

// Solves A x = b over the integers via the Smith form of A.
inline std::optional<ZVec> solve_integer(const ZMat& a, const ZVec& b) {
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  if (rows == 0) return ZVec(cols, 0);
  SmithForm s = smith_normal_form(a, true);
  ZVec c = mat_vec(s.u, b);
  ZVec y(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (i < s.rank) {
      if (c[i] % s.d[i][i] != 0) return std::nullopt;
      y[i] = c[i] / s.d[i][i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return mat_vec(*s.v, y);
}

}  // namespace effectkit
