#pragma once

// Small dense exact linear algebra over Q.

#include <cstddef>
#include <utility>
#include <vector>

#include "okounkov/rational.hpp"

namespace okounkov::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct Echelon {
  RationalMatrix rows;                // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;    // pivot column of each row
  std::vector<std::size_t> row_order; // original index of the row that produced each pivot
};

/// Reduced row echelon form. Rows are processed in input order, so the
/// reported `row_order` identifies a maximal independent prefix-greedy subset.
inline Echelon echelon(const RationalMatrix& m, std::size_t cols) {
  Echelon e;
  for (std::size_t r = 0; r < m.size(); ++r) {
    std::vector<Rational> v = m[r];
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      const std::size_t pc = e.pivots[i];
      if (v[pc] == 0) continue;
      const Rational f = v[pc];
      for (std::size_t c = 0; c < cols; ++c) v[c] -= f * e.rows[i][c];
    }
    std::size_t pc = cols;
    for (std::size_t c = 0; c < cols; ++c) {
      if (v[c] != 0) {
        pc = c;
        break;
      }
    }
    if (pc == cols) continue;
    const Rational inv = 1 / v[pc];
    for (auto& x : v) x *= inv;
    for (auto& row : e.rows) {
      if (row[pc] == 0) continue;
      const Rational f = row[pc];
      for (std::size_t c = 0; c < cols; ++c) row[c] -= f * v[c];
    }
    e.rows.push_back(std::move(v));
    e.pivots.push_back(pc);
    e.row_order.push_back(r);
  }
  return e;
}

inline std::size_t rank(const RationalMatrix& m, std::size_t cols) {
  return echelon(m, cols).rows.size();
}

/// Basis of {x : M x = 0}.
inline RationalMatrix nullspace(const RationalMatrix& m, std::size_t cols) {
  const Echelon e = echelon(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t pc : e.pivots) is_pivot[pc] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols, Rational(0));
    x[free] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
      x[e.pivots[i]] = -e.rows[i][free];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Solves the square system A x = b exactly; throws InputError if singular.
inline std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InputError("singular linear system");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t c = col; c < n; ++c) a[col][c] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  return b;
}

}  // namespace okounkov::detail
