#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "svol/rational.hpp"

namespace svol {

/// Dense matrix with arbitrary-precision integer entries.  SNF intermediate
/// entries can explode, so fixed-width integers are not an option here.
struct IMat {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<Int>> a;  // row-major

  IMat() = default;
  IMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r, std::vector<Int>(c, 0)) {}

  static IMat identity(std::size_t n) {
    IMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.a[i][i] = 1;
    return m;
  }

  Int& operator()(std::size_t i, std::size_t j) { return a[i][j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a[i][j]; }

  bool operator==(const IMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline IMat mat_mul(const IMat& x, const IMat& y) {
  IMat z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x.a[i][k] == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) z.a[i][j] += x.a[i][k] * y.a[k][j];
    }
  return z;
}

inline std::vector<Int> mat_vec(const IMat& m, const std::vector<Int>& v) {
  std::vector<Int> r(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m.a[i][j] != 0) r[i] += m.a[i][j] * v[j];
  return r;
}

/// U*A*V = D with U, V unimodular and D diagonal with the divisibility chain
/// d_1 | d_2 | ... ; divisors are nonnegative.
struct SmithDecomposition {
  IMat U, D, V;
  std::vector<Int> divisors;  // length min(rows, cols)
};

namespace detail {

// Deterministic pivot: smallest nonzero |entry|, ties by (row, col).
inline bool find_pivot(const IMat& m, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best = 0;
  for (std::size_t i = t; i < m.rows; ++i)
    for (std::size_t j = t; j < m.cols; ++j) {
      if (m.a[i][j] == 0) continue;
      Int v = boost::multiprecision::abs(m.a[i][j]);
      if (!found || v < best) {
        found = true;
        best = v;
        pi = i;
        pj = j;
      }
    }
  return found;
}

inline void swap_rows(IMat& m, std::size_t i, std::size_t j) {
  if (i != j) std::swap(m.a[i], m.a[j]);
}
inline void swap_cols(IMat& m, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (auto& row : m.a) std::swap(row[i], row[j]);
}
inline void add_row(IMat& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t j = 0; j < m.cols; ++j) m.a[dst][j] += f * m.a[src][j];
}
inline void add_col(IMat& m, std::size_t dst, std::size_t src, const Int& f) {
  for (std::size_t i = 0; i < m.rows; ++i) m.a[i][dst] += f * m.a[i][src];
}
inline void negate_row(IMat& m, std::size_t i) {
  for (auto& x : m.a[i]) x = -x;
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IMat& A) {
  SmithDecomposition s;
  s.D = A;
  s.U = IMat::identity(A.rows);
  s.V = IMat::identity(A.cols);
  IMat& D = s.D;
  std::size_t n = std::min(A.rows, A.cols);

  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pi = t, pj = t;
    if (!detail::find_pivot(D, t, pi, pj)) break;
    detail::swap_rows(D, t, pi);
    detail::swap_rows(s.U, t, pi);
    detail::swap_cols(D, t, pj);
    detail::swap_cols(s.V, t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < D.rows; ++i) {
        if (D.a[i][t] == 0) continue;
        Int q = D.a[i][t] / D.a[t][t];
        detail::add_row(D, i, t, -q);
        detail::add_row(s.U, i, t, -q);
        if (D.a[i][t] != 0) {
          // remainder became the smaller pivot
          detail::swap_rows(D, t, i);
          detail::swap_rows(s.U, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < D.cols; ++j) {
        if (D.a[t][j] == 0) continue;
        Int q = D.a[t][j] / D.a[t][t];
        detail::add_col(D, j, t, -q);
        detail::add_col(s.V, j, t, -q);
        if (D.a[t][j] != 0) {
          detail::swap_cols(D, t, j);
          detail::swap_cols(s.V, t, j);
          clean = false;
        }
      }
      if (clean) break;
    }
    if (D.a[t][t] < 0) {
      detail::negate_row(D, t);
      detail::negate_row(s.U, t);
    }
  }

  // Enforce the divisibility chain d_t | d_{t+1}.
  for (std::size_t t = 0; t + 1 < n; ++t) {
    for (std::size_t u = t + 1; u < n; ++u) {
      if (D.a[t][t] == 0 && D.a[u][u] != 0) {
        detail::swap_rows(D, t, u);
        detail::swap_rows(s.U, t, u);
        detail::swap_cols(D, t, u);
        detail::swap_cols(s.V, t, u);
      }
      if (D.a[t][t] == 0 || D.a[u][u] % D.a[t][t] == 0) continue;
      // Merge positions t and u into gcd / lcm via a 2x2 SNF step:
      // stack d_u under d_t in column t, run Euclid on the two rows, then
      // clear the fill-in at (t, u).  The pivot is the gcd of the block, so
      // it divides every entry and the final column op is exact.
      detail::add_col(D, t, u, 1);
      detail::add_col(s.V, t, u, 1);
      for (;;) {
        Int q = D.a[u][t] / D.a[t][t];
        detail::add_row(D, u, t, -q);
        detail::add_row(s.U, u, t, -q);
        if (D.a[u][t] == 0) break;
        detail::swap_rows(D, t, u);
        detail::swap_rows(s.U, t, u);
      }
      if (D.a[t][u] != 0) {
        Int q = D.a[t][u] / D.a[t][t];
        detail::add_col(D, u, t, -q);
        detail::add_col(s.V, u, t, -q);
      }
      if (D.a[t][t] < 0) {
        detail::negate_row(D, t);
        detail::negate_row(s.U, t);
      }
      if (D.a[u][u] < 0) {
        detail::negate_row(D, u);
        detail::negate_row(s.U, u);
      }
    }
  }

  s.divisors.resize(n);
  for (std::size_t t = 0; t < n; ++t) s.divisors[t] = D.a[t][t];
  return s;
}

// ---------------------------------------------------------------------------
// Rational linear algebra (dense, exact)
// ---------------------------------------------------------------------------

struct QMat {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<Rat>> a;
  QMat() = default;
  QMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r, std::vector<Rat>(c, 0)) {}
  Rat& operator()(std::size_t i, std::size_t j) { return a[i][j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a[i][j]; }

  static QMat from_int(const IMat& m) {
    QMat q(m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < m.cols; ++j) q.a[i][j] = Rat(m.a[i][j]);
    return q;
  }
};

/// Row-reduces [A | rhs...] in place; returns pivot columns of A.
inline std::vector<std::size_t> rref(QMat& m, std::size_t lhs_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < lhs_cols && r < m.rows; ++c) {
    std::size_t sel = m.rows;
    for (std::size_t i = r; i < m.rows; ++i)
      if (m.a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel == m.rows) continue;
    std::swap(m.a[r], m.a[sel]);
    Rat inv = Rat(1) / m.a[r][c];
    for (std::size_t j = c; j < m.cols; ++j) m.a[r][j] *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.a[i][c] == 0) continue;
      Rat f = m.a[i][c];
      for (std::size_t j = c; j < m.cols; ++j) m.a[i][j] -= f * m.a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank_rational(const QMat& m) {
  QMat c = m;
  return rref(c, c.cols).size();
}

/// Solves A x = b over Q; returns a solution (free variables set to 0).
inline std::optional<std::vector<Rat>> solve_rational(const QMat& A, const std::vector<Rat>& b) {
  QMat aug(A.rows, A.cols + 1);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) aug.a[i][j] = A.a[i][j];
    aug.a[i][A.cols] = b[i];
  }
  auto pivots = rref(aug, A.cols);
  // inconsistency: nonzero rhs in a zero row
  for (std::size_t i = pivots.size(); i < A.rows; ++i)
    if (aug.a[i][A.cols] != 0) return std::nullopt;
  std::vector<Rat> x(A.cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.a[r][A.cols];
  return x;
}

/// Basis of the null space of A over Q.
inline std::vector<std::vector<Rat>> kernel_rational(const QMat& A) {
  QMat m = A;
  auto pivots = rref(m, m.cols);
  std::vector<bool> is_pivot(A.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t c = 0; c < A.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> v(A.cols, 0);
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.a[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Mod-p linear algebra
// ---------------------------------------------------------------------------

inline Int mod_norm(Int x, const Int& p) {
  x %= p;
  if (x < 0) x += p;
  return x;
}

inline Int mod_inverse(const Int& x, const Int& p) {
  Int t0 = 0, t1 = 1, r0 = p, r1 = mod_norm(x, p);
  while (r1 != 0) {
    Int q = r0 / r1;
    Int tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) throw domain_error("mod_inverse: not invertible");
  return mod_norm(t0, p);
}

/// Row-reduces an integer matrix mod prime p; returns pivot columns.
inline std::vector<std::size_t> rref_mod_p(IMat& m, const Int& p) {
  for (auto& row : m.a)
    for (auto& x : row) x = mod_norm(x, p);
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t sel = m.rows;
    for (std::size_t i = r; i < m.rows; ++i)
      if (m.a[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel == m.rows) continue;
    std::swap(m.a[r], m.a[sel]);
    Int inv = mod_inverse(m.a[r][c], p);
    for (std::size_t j = c; j < m.cols; ++j) m.a[r][j] = mod_norm(m.a[r][j] * inv, p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m.a[i][c] == 0) continue;
      Int f = m.a[i][c];
      for (std::size_t j = c; j < m.cols; ++j) m.a[i][j] = mod_norm(m.a[i][j] - f * m.a[r][j], p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank_mod_p(const IMat& m, const Int& p) {
  IMat c = m;
  return rref_mod_p(c, p).size();
}

/// Basis of the null space of A mod p (entries normalized to [0, p)).
inline std::vector<std::vector<Int>> kernel_mod_p(const IMat& A, const Int& p) {
  IMat m = A;
  auto pivots = rref_mod_p(m, p);
  std::vector<bool> is_pivot(A.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Int>> basis;
  for (std::size_t c = 0; c < A.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Int> v(A.cols, 0);
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = mod_norm(-m.a[r][c], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves A x = b mod p; free variables 0.
inline std::optional<std::vector<Int>> solve_mod_p(const IMat& A, const std::vector<Int>& b,
                                                   const Int& p) {
  IMat aug(A.rows, A.cols + 1);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) aug.a[i][j] = A.a[i][j];
    aug.a[i][A.cols] = b[i];
  }
  auto pivots = rref_mod_p(aug, p);
  for (std::size_t i = 0; i < A.rows; ++i) {
    bool zero_lhs = true;
    for (std::size_t j = 0; j < A.cols; ++j)
      if (aug.a[i][j] != 0) zero_lhs = false;
    if (zero_lhs && aug.a[i][A.cols] != 0) return std::nullopt;
  }
  std::vector<Int> x(A.cols, 0);
  std::size_t r = 0;
  for (auto c : pivots) {
    if (c < A.cols) x[c] = aug.a[r][A.cols];
    ++r;
  }
  return x;
}

// ---------------------------------------------------------------------------
// Integer and mod-N solves via SNF
// ---------------------------------------------------------------------------

/// Solves A x = b over Z, or nullopt.  Deterministic given the SNF pivot rule.
inline std::optional<std::vector<Int>> solve_integer(const IMat& A, const std::vector<Int>& b) {
  auto s = smith_normal_form(A);
  std::vector<Int> ub = mat_vec(s.U, b);
  std::size_t n = std::min(A.rows, A.cols);
  std::vector<Int> y(A.cols, 0);
  for (std::size_t i = 0; i < A.rows; ++i) {
    Int d = i < n ? s.divisors[i] : Int(0);
    if (d == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (ub[i] % d != 0) return std::nullopt;
      y[i] = ub[i] / d;
    }
  }
  return mat_vec(s.V, y);
}

/// Solves A x = b mod N (N >= 2, not necessarily prime), or nullopt.
inline std::optional<std::vector<Int>> solve_mod_n(const IMat& A, const std::vector<Int>& b,
                                                   const Int& N) {
  auto s = smith_normal_form(A);
  std::vector<Int> ub = mat_vec(s.U, b);
  std::size_t n = std::min(A.rows, A.cols);
  std::vector<Int> y(A.cols, 0);
  for (std::size_t i = 0; i < A.rows; ++i) {
    Int d = i < n ? s.divisors[i] : Int(0);
    Int g = boost::multiprecision::gcd(d == 0 ? N : d, N);
    Int rhs = mod_norm(ub[i], N);
    if (rhs % g != 0) return std::nullopt;
    if (d == 0) continue;  // rhs divisible by g = gcd(d,N) with d=0 -> rhs % N == 0
    // d * y = rhs (mod N): y = (rhs/g) * inverse(d/g) mod N/g
    Int Ng = N / g;
    if (Ng == 1) {
      y[i] = 0;
      continue;
    }
    y[i] = mod_norm((rhs / g) * mod_inverse(mod_norm(d / g, Ng), Ng), Ng);
  }
  auto x = mat_vec(s.V, y);
  for (auto& v : x) v = mod_norm(v, N);
  return x;
}

/// Z-basis of ker(A) (columns of V at zero divisors).
inline std::vector<std::vector<Int>> kernel_integer(const IMat& A) {
  auto s = smith_normal_form(A);
  std::size_t n = std::min(A.rows, A.cols);
  std::vector<std::vector<Int>> basis;
  for (std::size_t j = 0; j < A.cols; ++j) {
    bool zero = j >= n || s.divisors[j] == 0;
    if (!zero) continue;
    std::vector<Int> v(A.cols);
    for (std::size_t i = 0; i < A.cols; ++i) v[i] = s.V.a[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace svol
