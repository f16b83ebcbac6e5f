#pragma once

#include <optional>
#include <vector>

#include "svol/matrix.hpp"

namespace svol {

/// Exact rational LP in standard form: min c.x  s.t.  A x = b, x >= 0.
/// Two-phase dense simplex with Bland's rule (no cycling, no floats).
struct LpResult {
  bool feasible = false;
  bool bounded = true;
  Rat value;
  std::vector<Rat> x;
};

namespace detail {

struct Tableau {
  // rows: constraints then objective; columns: variables then rhs
  std::vector<std::vector<Rat>> t;
  std::vector<std::size_t> basis;  // basic variable per constraint row
  std::size_t rows, cols;          // constraint count, variable count
  std::size_t enter_limit;         // columns >= limit never enter the basis

  void pivot(std::size_t r, std::size_t c) {
    Rat inv = Rat(1) / t[r][c];
    for (auto& v : t[r]) v *= inv;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == r || t[i][c] == 0) continue;
      Rat f = t[i][c];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Bland: entering = least index with negative reduced cost; leaving = least
  // ratio, ties by least basic index.
  bool solve() {
    for (;;) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < enter_limit; ++j)
        if (t[rows][j] < 0) {
          enter = j;
          break;
        }
      if (enter == cols) return true;
      std::size_t leave = rows;
      Rat best;
      for (std::size_t i = 0; i < rows; ++i) {
        if (t[i][enter] <= 0) continue;
        Rat ratio = t[i][cols] / t[i][enter];
        if (leave == rows || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows) return false;  // unbounded
      pivot(leave, enter);
    }
  }
};

}  // namespace detail

inline LpResult lp_solve(const std::vector<Rat>& c, const QMat& A, const std::vector<Rat>& b) {
  std::size_t m = A.rows, n = A.cols;
  detail::Tableau tab;
  tab.rows = m;
  tab.cols = n + m;  // artificials appended
  tab.enter_limit = tab.cols;
  tab.t.assign(m + 1, std::vector<Rat>(tab.cols + 1, 0));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    Rat s = b[i] >= 0 ? Rat(1) : Rat(-1);
    for (std::size_t j = 0; j < n; ++j) tab.t[i][j] = s * A.a[i][j];
    tab.t[i][n + i] = 1;
    tab.t[i][tab.cols] = s * b[i];
    tab.basis[i] = n + i;
  }
  // phase 1: minimize sum of artificials
  for (std::size_t j = 0; j < tab.cols; ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (tab.basis[i] >= n) s += tab.t[i][j];
    tab.t[m][j] = (j >= n ? Rat(1) : Rat(0)) - s;
  }
  {
    Rat s = 0;
    for (std::size_t i = 0; i < m; ++i) s += tab.t[i][tab.cols];
    tab.t[m][tab.cols] = -s;
  }
  tab.solve();
  LpResult res;
  if (tab.t[m][tab.cols] != 0) {
    res.feasible = false;
    return res;
  }
  // drive remaining artificials out of the basis
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j)
      if (tab.t[i][j] != 0) {
        enter = j;
        break;
      }
    if (enter < n) tab.pivot(i, enter);
    // a fully zero row is a redundant constraint; its artificial stays basic
    // at zero and never reenters since phase 2 costs exclude artificials
  }
  res.feasible = true;
  // phase 2: artificials are frozen out of the entering rule; any left in the
  // basis sit at zero on redundant rows
  tab.enter_limit = n;
  for (std::size_t j = 0; j <= tab.cols; ++j) tab.t[m][j] = 0;
  for (std::size_t j = 0; j < n; ++j) tab.t[m][j] = c[j];
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] >= n) continue;
    Rat f = tab.t[m][tab.basis[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j <= tab.cols; ++j) tab.t[m][j] -= f * tab.t[i][j];
  }
  if (!tab.solve()) {
    res.bounded = false;
    return res;
  }
  res.x.assign(n, Rat(0));
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] < n) res.x[tab.basis[i]] = tab.t[i][tab.cols];
  res.value = 0;
  for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

/// min sum_i |c + B x|_i over unrestricted rational x (archimedean l1).
/// Encoded as min sum t with t_i >= +-(c + Bx)_i, x = u - v.
struct L1Result {
  Rat value;
  std::vector<Rat> x;
};

inline L1Result l1_minimize_rational(const std::vector<Rat>& c, const IMat& B) {
  std::size_t m = c.size(), k = B.cols;
  // variables: u (k), v (k), t (m), slacks s+ (m), s- (m)
  //   t_i - (c + B(u-v))_i - s+_i = 0   ->  t - Bu + Bv - s+ = c
  //   t_i + (c + B(u-v))_i - s-_i = 0   ->  t + Bu - Bv - s- = -c
  std::size_t n = 2 * k + 3 * m;
  QMat A(2 * m, n);
  std::vector<Rat> b(2 * m), cost(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      A.a[i][j] = Rat(-B.a[i][j]);
      A.a[i][k + j] = Rat(B.a[i][j]);
      A.a[m + i][j] = Rat(B.a[i][j]);
      A.a[m + i][k + j] = Rat(-B.a[i][j]);
    }
    A.a[i][2 * k + i] = 1;
    A.a[m + i][2 * k + i] = 1;
    A.a[i][2 * k + m + i] = -1;
    A.a[m + i][2 * k + 2 * m + i] = -1;
    b[i] = c[i];
    b[m + i] = -c[i];
    cost[2 * k + i] = 1;
  }
  LpResult lp = lp_solve(cost, A, b);
  if (!lp.feasible || !lp.bounded)
    throw domain_error("l1_minimize_rational: LP infeasible or unbounded");
  L1Result r;
  r.value = lp.value;
  r.x.resize(k);
  for (std::size_t j = 0; j < k; ++j) r.x[j] = lp.x[j] - lp.x[k + j];
  return r;
}

}  // namespace svol
