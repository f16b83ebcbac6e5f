#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svol/homology.hpp"
#include "svol/simplex_lp.hpp"

namespace svol {

enum class Strategy { Auto, Exhaustive, BranchAndBound, LpExact };

struct MinimizeOptions {
  Strategy strategy = Strategy::Auto;
  long budget_nodes = 2000000;
  bool any_witness = false;
};

struct MinimizationResult {
  Rat value;
  Chain witness;
  bool optimal = true;
  long nodes = 0;
};

/// min |c + B x|_{1,ring} over x in the carrier; the model-restricted
/// minimization in coordinates.  Columns of B span the homologically trivial
/// directions (boundaries of (d+1)-cells plus boundary-marked top cells).
struct AffineProblem {
  std::vector<std::string> basis;  // row ids (top-dimensional simplices)
  std::vector<Rat> c;
  IMat B;
  int dimension = 0;
};

inline AffineProblem affine_problem(const Model& m, const Chain& class_rep) {
  check_chain(m, class_rep);
  int d = class_rep.dimension;
  AffineProblem p;
  p.dimension = d;
  p.basis = m.ids(d);
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < p.basis.size(); ++i) pos[p.basis[i]] = i;
  p.c.assign(p.basis.size(), Rat(0));
  for (const auto& [id, v] : class_rep.coefficients) p.c[pos[id]] = v;
  IMat bnd = d + 1 <= m.dim ? boundary_matrix(m, d + 1, false) : IMat(p.basis.size(), 0);
  std::vector<std::size_t> marked;
  for (std::size_t i = 0; i < p.basis.size(); ++i)
    if (m.boundary_mark.count(p.basis[i])) marked.push_back(i);
  p.B = IMat(p.basis.size(), bnd.cols + marked.size());
  for (std::size_t i = 0; i < p.basis.size(); ++i)
    for (std::size_t j = 0; j < bnd.cols; ++j) p.B.a[i][j] = bnd.a[i][j];
  for (std::size_t t = 0; t < marked.size(); ++t) p.B.a[marked[t]][bnd.cols + t] = 1;
  return p;
}

namespace detail {

inline Chain make_witness(const AffineProblem& p, const std::vector<Rat>& w) {
  Chain r{p.dimension, {}};
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) r.coefficients[p.basis[i]] = w[i];
  return r;
}

inline std::vector<Rat> apply_offset(const AffineProblem& p, const std::vector<Rat>& x) {
  std::vector<Rat> w = p.c;
  for (std::size_t j = 0; j < p.B.cols; ++j) {
    if (x[j] == 0) continue;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (p.B.a[i][j] != 0) w[i] += x[j] * Rat(p.B.a[i][j]);
  }
  return w;
}

inline Rat vector_norm(const RingSpec& ring, std::vector<Rat>& w) {
  Rat s = 0;
  for (auto& v : w) {
    v = reduce_to_carrier(ring, v);
    s += seminorm(ring, v);
  }
  return s;
}

inline bool lex_less(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

// columns of B forming a basis of its column space over Q
inline IMat rational_column_basis(const IMat& B) {
  QMat q = QMat::from_int(B);
  auto pivots = rref(q, q.cols);
  IMat out(B.rows, pivots.size());
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t i = 0; i < B.rows; ++i) out.a[i][j] = B.a[i][pivots[j]];
  return out;
}

inline IMat mod_p_column_basis(const IMat& B, const Int& p) {
  IMat q = B;
  auto pivots = rref_mod_p(q, p);
  IMat out(B.rows, pivots.size());
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t i = 0; i < B.rows; ++i) out.a[i][j] = mod_norm(B.a[i][pivots[j]], p);
  return out;
}

// Enumerates x over residues [0, q)^cols, calling f on each offset vector;
// returns false if the budget was exhausted.
inline bool enumerate_residues(const AffineProblem& p, const Int& q, long& budget,
                               const std::function<void(const std::vector<Rat>&)>& f) {
  std::vector<Rat> x(p.B.cols, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t j) -> bool {
    if (j == p.B.cols) {
      if (budget-- <= 0) return false;
      f(x);
      return true;
    }
    for (Int t = 0; t < q; ++t) {
      x[j] = Rat(t);
      if (!rec(j + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

}  // namespace detail

inline MinimizationResult minimize_affine(const AffineProblem& p0, const RingSpec& ring,
                                          const MinimizeOptions& opt = {});

namespace detail {

inline MinimizationResult minimize_trivial_subset(const AffineProblem& p, const RingSpec& ring,
                                                  const MinimizeOptions& opt) {
  // support minimization: find the largest set of rows that can be zeroed
  // simultaneously over the carrier
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    bool live = p.c[i] != 0;
    for (std::size_t j = 0; j < p.B.cols && !live; ++j) live = p.B.a[i][j] != 0;
    if (live) rows.push_back(i);
  }
  MinimizationResult res;
  std::vector<Rat> base = p.c;
  res.value = vector_norm(ring, base);
  res.witness = make_witness(p, base);
  if (p.B.cols == 0 || rows.empty()) return res;
  if (rows.size() > 22) throw domain_error("minimize: support search too large");

  auto feasible = [&](const std::vector<std::size_t>& zero) -> std::optional<std::vector<Rat>> {
    IMat A(zero.size(), p.B.cols);
    std::vector<Rat> brat(zero.size());
    for (std::size_t r = 0; r < zero.size(); ++r) {
      for (std::size_t j = 0; j < p.B.cols; ++j) A.a[r][j] = p.B.a[zero[r]][j];
      brat[r] = -p.c[zero[r]];
    }
    std::vector<Rat> x;
    if (ring.carrier == Carrier::Rat) {
      auto s = solve_rational(QMat::from_int(A), brat);
      if (!s) return std::nullopt;
      x = *s;
    } else {
      std::vector<Int> bi(brat.size());
      for (std::size_t r = 0; r < brat.size(); ++r) {
        if (rat_den(brat[r]) != 1 && ring.carrier == Carrier::Int) return std::nullopt;
        bi[r] = rat_num(reduce_to_carrier(ring, brat[r]));
      }
      std::optional<std::vector<Int>> s;
      if (ring.carrier == Carrier::Int)
        s = solve_integer(A, bi);
      else if (ring.carrier == Carrier::FiniteField)
        s = solve_mod_p(A, bi, ring.p);
      else
        s = solve_mod_n(A, bi, ring.modulus());
      if (!s) return std::nullopt;
      x.resize(s->size());
      for (std::size_t j = 0; j < s->size(); ++j) x[j] = Rat((*s)[j]);
    }
    return apply_offset(p, x);
  };

  for (std::size_t z = rows.size(); z > 0; --z) {
    // all subsets of `rows` of size z, lexicographic
    std::vector<std::size_t> idx(z);
    for (std::size_t i = 0; i < z; ++i) idx[i] = i;
    bool done = false;
    std::optional<std::vector<Rat>> best;
    while (!done) {
      ++res.nodes;
      if (res.nodes > opt.budget_nodes) {
        res.optimal = false;
        return res;
      }
      std::vector<std::size_t> zero(z);
      for (std::size_t i = 0; i < z; ++i) zero[i] = rows[idx[i]];
      auto w = feasible(zero);
      if (w) {
        std::vector<Rat> wc = *w;
        Rat v = vector_norm(ring, wc);
        if (!best || v < res.value ||
            (v == res.value && !opt.any_witness && lex_less(wc, *best))) {
          res.value = v;
          res.witness = make_witness(p, wc);
          best = wc;
        }
        if (opt.any_witness) return res;
      }
      // next combination
      long i = static_cast<long>(z) - 1;
      while (i >= 0 && idx[i] == rows.size() - z + i) --i;
      if (i < 0)
        done = true;
      else {
        ++idx[i];
        for (std::size_t t = i + 1; t < z; ++t) idx[t] = idx[t - 1] + 1;
      }
    }
    if (best) return res;  // a support of size |rows| - z (or smaller) is optimal
  }
  return res;
}

inline MinimizationResult minimize_finite_enumeration(const AffineProblem& p, const RingSpec& ring,
                                                      const MinimizeOptions& opt) {
  AffineProblem q = p;
  if (ring.carrier == Carrier::FiniteField) q.B = mod_p_column_basis(p.B, ring.p);
  Int mod = ring.modulus();
  MinimizationResult res;
  std::vector<Rat> base = q.c;
  res.value = vector_norm(ring, base);
  res.witness = make_witness(q, base);
  std::optional<std::vector<Rat>> best = base;
  long budget = opt.budget_nodes;
  bool complete = enumerate_residues(q, mod, budget, [&](const std::vector<Rat>& x) {
    std::vector<Rat> w = apply_offset(q, x);
    Rat v = vector_norm(ring, w);
    ++res.nodes;
    if (v < res.value || (v == res.value && !opt.any_witness && lex_less(w, *best))) {
      res.value = v;
      res.witness = make_witness(q, w);
      best = w;
    }
  });
  res.optimal = complete;
  return res;
}

inline MinimizationResult minimize_rational_l1(const AffineProblem& p,
                                               const MinimizeOptions& opt) {
  AffineProblem q = p;
  q.B = rational_column_basis(p.B);
  L1Result lp = l1_minimize_rational(q.c, q.B);
  MinimizationResult res;
  res.value = lp.value;
  std::vector<Rat> w = apply_offset(q, lp.x);
  if (!opt.any_witness) {
    // lexicographically least optimum: fix coordinates left to right, each
    // time minimizing w_i over the optimal face (norm pinned at the optimum,
    // earlier coordinates pinned at their chosen values)
    std::vector<std::pair<std::size_t, Rat>> fixed;
    for (std::size_t i = 0; i < q.c.size(); ++i) {
      std::size_t k = q.B.cols, m = q.c.size();
      std::vector<Rat> cost(2 * k + 3 * m, 0);
      QMat A(2 * m + 1 + fixed.size(), 2 * k + 3 * m);
      std::vector<Rat> b(2 * m + 1 + fixed.size());
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < k; ++j) {
          A.a[r][j] = Rat(-q.B.a[r][j]);
          A.a[r][k + j] = Rat(q.B.a[r][j]);
          A.a[m + r][j] = Rat(q.B.a[r][j]);
          A.a[m + r][k + j] = Rat(-q.B.a[r][j]);
        }
        A.a[r][2 * k + r] = 1;
        A.a[m + r][2 * k + r] = 1;
        A.a[r][2 * k + m + r] = -1;
        A.a[m + r][2 * k + 2 * m + r] = -1;
        b[r] = q.c[r];
        b[m + r] = -q.c[r];
      }
      for (std::size_t r = 0; r < m; ++r) A.a[2 * m][2 * k + r] = 1;
      b[2 * m] = res.value;
      for (std::size_t f = 0; f < fixed.size(); ++f) {
        std::size_t row = fixed[f].first;
        for (std::size_t j = 0; j < k; ++j) {
          A.a[2 * m + 1 + f][j] = Rat(q.B.a[row][j]);
          A.a[2 * m + 1 + f][k + j] = Rat(-q.B.a[row][j]);
        }
        b[2 * m + 1 + f] = fixed[f].second - q.c[row];
      }
      for (std::size_t j = 0; j < k; ++j) {
        cost[j] = Rat(q.B.a[i][j]);
        cost[k + j] = Rat(-q.B.a[i][j]);
      }
      LpResult sub = lp_solve(cost, A, b);
      if (!sub.feasible) throw domain_error("minimize: lex refinement infeasible");
      Rat wi = q.c[i] + sub.value;
      fixed.emplace_back(i, wi);
    }
    std::vector<Rat> wl(q.c.size());
    for (std::size_t i = 0; i < q.c.size(); ++i) wl[i] = fixed[i].second;
    w = wl;
  }
  RingSpec qa = parse_ring_spec("Q");
  Rat check = vector_norm(qa, w);
  if (check != res.value) throw domain_error("minimize: witness/value mismatch");
  res.witness = make_witness(q, w);
  res.optimal = true;
  return res;
}

inline MinimizationResult minimize_integer_archimedean(const AffineProblem& p,
                                                       const MinimizeOptions& opt) {
  AffineProblem q = p;
  q.B = rational_column_basis(p.B);
  std::size_t k = q.B.cols;
  MinimizationResult res;
  std::vector<Rat> base = q.c;
  RingSpec z = parse_ring_spec("Z");
  res.value = vector_norm(z, base);
  res.witness = make_witness(q, base);
  if (k == 0) return res;
  // bound every coordinate over the polytope |c + Bx|_1 <= |c|_1
  Rat ub = res.value;
  std::vector<long> lo(k), hi(k);
  for (std::size_t j = 0; j < k; ++j) {
    for (int sign : {1, -1}) {
      std::size_t m = q.c.size();
      std::vector<Rat> cost(2 * k + 3 * m + 1, 0);
      QMat A(2 * m + 1, 2 * k + 3 * m + 1);
      std::vector<Rat> b(2 * m + 1);
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t jj = 0; jj < k; ++jj) {
          A.a[r][jj] = Rat(-q.B.a[r][jj]);
          A.a[r][k + jj] = Rat(q.B.a[r][jj]);
          A.a[m + r][jj] = Rat(q.B.a[r][jj]);
          A.a[m + r][k + jj] = Rat(-q.B.a[r][jj]);
        }
        A.a[r][2 * k + r] = 1;
        A.a[m + r][2 * k + r] = 1;
        A.a[r][2 * k + m + r] = -1;
        A.a[m + r][2 * k + 2 * m + r] = -1;
        b[r] = q.c[r];
        b[m + r] = -q.c[r];
      }
      for (std::size_t r = 0; r < m; ++r) A.a[2 * m][2 * k + r] = 1;
      A.a[2 * m][2 * k + 3 * m] = 1;  // slack: sum t <= ub
      b[2 * m] = ub;
      cost[j] = Rat(sign);
      cost[k + j] = Rat(-sign);
      LpResult sub = lp_solve(cost, A, b);
      if (!sub.feasible) throw domain_error("minimize: bounding LP infeasible");
      if (!sub.bounded) throw domain_error("minimize: bounding LP unbounded");
      Rat ext = sub.value;  // min of sign * x_j
      Int bound = rat_num(ext) / rat_den(ext);
      // floor for min, used as sign-adjusted integer bound
      while (Rat(bound) > ext) --bound;
      if (sign == 1)
        lo[j] = static_cast<long>(bound);
      else
        hi[j] = static_cast<long>(-bound);
    }
  }
  std::optional<std::vector<Rat>> best;
  std::vector<Rat> x(k, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t j) -> bool {
    if (j == k) {
      ++res.nodes;
      if (res.nodes > opt.budget_nodes) return false;
      std::vector<Rat> w = apply_offset(q, x);
      Rat v = vector_norm(z, w);
      if (v < res.value || (v == res.value && !opt.any_witness && best && lex_less(w, *best))) {
        res.value = v;
        res.witness = make_witness(q, w);
        best = w;
      }
      return true;
    }
    for (long t = lo[j]; t <= hi[j]; ++t) {
      x[j] = Rat(t);
      if (!rec(j + 1)) return false;
    }
    return true;
  };
  res.optimal = rec(0);
  return res;
}

inline MinimizationResult minimize_padic_integer(const AffineProblem& p, const RingSpec& ring,
                                                 const MinimizeOptions& opt) {
  RingSpec zp = ring;
  MinimizationResult res;
  std::vector<Rat> base = p.c;
  res.value = vector_norm(zp, base);
  res.witness = make_witness(p, base);
  if (p.B.cols == 0) return res;
  // iterate Z/p^K quotient minima; each is a lower bound for the Z_p value,
  // each integer lift an upper bound.  Stop when they meet.
  const int K_max = 40;
  for (int K = 1; K <= K_max; ++K) {
    RingSpec qk;
    qk.carrier = Carrier::ModPrimePower;
    qk.seminorm = SeminormKind::QuotientPAdic;
    qk.p = ring.p;
    qk.m = K;
    AffineProblem pk = p;
    for (auto& v : pk.c) v = reduce_to_carrier(qk, v);
    MinimizeOptions sub = opt;
    MinimizationResult quot = minimize_finite_enumeration(pk, qk, sub);
    res.nodes += quot.nodes;
    if (!quot.optimal) {
      res.optimal = false;
      return res;
    }
    // integer witness: lift the quotient offset x (residues) to integers
    // 1) plain lift of the quotient witness's offset is implicit in the
    //    residue enumeration; recover an offset x with c + Bx = witness mod p^K
    //    by re-solving over Z/p^K, then lift
    std::vector<Rat> target(p.basis.size(), 0);
    {
      std::map<std::string, std::size_t> pos;
      for (std::size_t i = 0; i < p.basis.size(); ++i) pos[p.basis[i]] = i;
      for (const auto& [id, v] : quot.witness.coefficients) target[pos.at(id)] = v;
    }
    Int q = int_pow(ring.p, K);
    IMat A = p.B;
    std::vector<Int> rhs(p.basis.size());
    for (std::size_t i = 0; i < p.basis.size(); ++i)
      rhs[i] = mod_norm(rat_num(reduce_to_carrier(qk, target[i] - p.c[i])), q);
    auto xs = solve_mod_n(A, rhs, q);
    if (!xs) throw domain_error("minimize: quotient witness failed to re-solve");
    std::vector<Rat> x(xs->size());
    for (std::size_t j = 0; j < xs->size(); ++j) x[j] = Rat((*xs)[j]);
    std::vector<Rat> w = apply_offset(p, x);
    Rat upper = vector_norm(zp, w);
    if (upper < res.value) {
      res.value = upper;
      res.witness = make_witness(p, w);
    }
    // 2) exact-zero refinement on the quotient witness's zero set
    {
      std::vector<std::size_t> zero;
      for (std::size_t i = 0; i < target.size(); ++i)
        if (target[i] == 0) zero.push_back(i);
      if (!zero.empty() && zero.size() <= 22) {
        IMat Az(zero.size(), p.B.cols);
        std::vector<Int> bz(zero.size());
        bool integral = true;
        for (std::size_t r = 0; r < zero.size(); ++r) {
          for (std::size_t j = 0; j < p.B.cols; ++j) Az.a[r][j] = p.B.a[zero[r]][j];
          if (rat_den(p.c[zero[r]]) != 1) integral = false;
          bz[r] = -rat_num(p.c[zero[r]]);
        }
        if (integral) {
          auto sol = solve_integer(Az, bz);
          if (sol) {
            std::vector<Rat> xr(sol->size());
            for (std::size_t j = 0; j < sol->size(); ++j) xr[j] = Rat((*sol)[j]);
            std::vector<Rat> wz = apply_offset(p, xr);
            Rat vz = vector_norm(zp, wz);
            if (vz < res.value) {
              res.value = vz;
              res.witness = make_witness(p, wz);
            }
          }
        }
      }
    }
    if (quot.value == res.value) {
      res.optimal = true;
      return res;
    }
  }
  res.optimal = false;
  return res;
}

}  // namespace detail

inline MinimizationResult minimize_affine(const AffineProblem& p0, const RingSpec& ring,
                                          const MinimizeOptions& opt) {
  AffineProblem p = p0;
  for (auto& v : p.c) v = reduce_to_carrier(ring, v);
  bool b_zero = true;
  for (const auto& row : p.B.a)
    for (const auto& x : row)
      if (x != 0) b_zero = false;
  if (b_zero) {
    MinimizationResult res;
    std::vector<Rat> w = p.c;
    res.value = detail::vector_norm(ring, w);
    res.witness = detail::make_witness(p, w);
    return res;
  }
  switch (ring.seminorm) {
    case SeminormKind::Trivial:
      if (ring.carrier == Carrier::FiniteField && opt.strategy != Strategy::BranchAndBound) {
        IMat basis = detail::mod_p_column_basis(p.B, ring.p);
        Rat size = 1;
        for (std::size_t j = 0; j < basis.cols; ++j) size *= Rat(ring.p);
        if (size <= Rat(opt.budget_nodes)) return detail::minimize_finite_enumeration(p, ring, opt);
      }
      return detail::minimize_trivial_subset(p, ring, opt);
    case SeminormKind::QuotientPAdic:
      return detail::minimize_finite_enumeration(p, ring, opt);
    case SeminormKind::Archimedean:
      if (ring.carrier == Carrier::Rat) return detail::minimize_rational_l1(p, opt);
      return detail::minimize_integer_archimedean(p, opt);
    case SeminormKind::PAdic:
      if (ring.carrier == Carrier::Int) return detail::minimize_padic_integer(p, ring, opt);
      {
        // Q with |.|_p: clear denominators, then run the scaling sequence
        Int den = 1;
        for (const auto& v : p.c) den = boost::multiprecision::lcm(den, rat_den(v));
        AffineProblem pi = p;
        for (auto& v : pi.c) v *= Rat(den);
        RingSpec zp = ring;
        zp.carrier = Carrier::Int;
        MinimizationResult res;
        Rat den_norm = seminorm(parse_ring_spec("Qp:" + ring.p.str()), Rat(den));
        std::optional<Rat> prev;
        for (int m = 0; m <= 12; ++m) {
          AffineProblem pm = pi;
          Rat scale = rat_pow(ring.p, m);
          for (auto& v : pm.c) v *= scale;
          MinimizationResult sub = detail::minimize_padic_integer(pm, zp, opt);
          res.nodes += sub.nodes;
          Rat val = scale * sub.value;
          if (!prev || val < *prev) {
            res.value = val / den_norm;
            res.witness = chain_scale(Rat(1) / (scale * Rat(den)), sub.witness);
          }
          if (prev && val == *prev && sub.optimal) {
            res.optimal = true;
            return res;
          }
          prev = val;
        }
        res.optimal = false;
        return res;
      }
  }
  throw domain_error("minimize: unsupported ring");
}

/// Model-level entry: feasibility check plus coordinates.
inline MinimizationResult minimal_norm(const Model& m, const Chain& class_rep,
                                       const RingSpec& ring, const MinimizeOptions& opt = {}) {
  if (class_rep.is_zero()) {
    MinimizationResult res;
    res.value = 0;
    res.witness = Chain{class_rep.dimension, {}};
    return res;
  }
  if (!verify_relative_cycle(m, class_rep, ring))
    throw domain_error("minimal_norm: class is not a relative cycle over " + ring.tag());
  return minimize_affine(affine_problem(m, class_rep), ring, opt);
}

/// (m, p^m * minimal p-adic norm of p^m times the class) for m = 0..m_max;
/// non-increasing, limit the Q_p value.
inline std::vector<std::pair<int, Rat>> scaling_sequence(const Model& m, const Chain& class_rep,
                                                         const Int& p, int m_max,
                                                         const MinimizeOptions& opt = {}) {
  RingSpec zp = parse_ring_spec("Zp:" + p.str());
  std::vector<std::pair<int, Rat>> seq;
  for (int e = 0; e <= m_max; ++e) {
    Rat scale = rat_pow(p, e);
    MinimizationResult r = minimal_norm(m, chain_scale(scale, class_rep), zp, opt);
    seq.emplace_back(e, scale * r.value);
    if (seq.size() >= 2 && seq[seq.size() - 1].second > seq[seq.size() - 2].second)
      throw domain_error("scaling_sequence: monotonicity violated");
  }
  return seq;
}

/// CRT combination: coefficients a_p with a_p = 1 mod p^N, 0 mod q^N for the
/// other primes, adjusted to sum to exactly 1 at the largest prime.
struct SimultaneousResult {
  std::map<Int, Int> coefficients;
  Chain cycle;
};

inline SimultaneousResult simultaneous_cycle(const std::map<Int, Chain>& witnesses, int N) {
  if (witnesses.empty()) throw domain_error("simultaneous_cycle: empty prime set");
  for (const auto& [prime, c] : witnesses)
    if (!is_prime(prime)) throw domain_error("simultaneous_cycle: " + prime.str() + " not prime");
  Int M = 1;
  for (const auto& [prime, c] : witnesses) M *= int_pow(prime, N);
  SimultaneousResult res;
  Int sum = 0;
  for (const auto& [prime, c] : witnesses) {
    Int pn = int_pow(prime, N);
    Int rest = M / pn;
    Int a = rest * mod_inverse(rest % pn, pn);
    a = mod_norm(a, M);
    res.coefficients[prime] = a;
    sum += a;
  }
  // sum = 1 mod M; shift the largest prime's coefficient to make it exact
  Int excess = sum - 1;
  res.coefficients[witnesses.rbegin()->first] -= excess;
  int dim = witnesses.begin()->second.dimension;
  Chain total{dim, {}};
  for (const auto& [prime, c] : witnesses)
    total = chain_add(total, chain_scale(Rat(res.coefficients[prime]), c));
  res.cycle = std::move(total);
  return res;
}

/// Anytime upper-bound stream: box enumeration over the coset, emitting every
/// improving incumbent.  The first entry is always the class's own norm.
struct StreamItem {
  Rat bound;
  Chain witness;
  long candidates = 0;
};

inline std::vector<StreamItem> upper_bound_stream(const Model& m, const Chain& class_rep,
                                                  const RingSpec& ring, long budget) {
  AffineProblem p = affine_problem(m, class_rep);
  for (auto& v : p.c) v = reduce_to_carrier(ring, v);
  std::vector<StreamItem> out;
  std::vector<Rat> w0 = p.c;
  Rat incumbent = detail::vector_norm(ring, w0);
  out.push_back({incumbent, detail::make_witness(p, w0), 0});
  if (p.B.cols == 0) return out;
  long used = 0;
  bool finite = ring.carrier == Carrier::FiniteField || ring.carrier == Carrier::ModPrimePower;
  long max_radius = finite ? 0 : 64;
  for (long radius = finite ? 0 : 1; radius <= max_radius; ++radius) {
    Int q = finite ? ring.modulus() : Int(2 * radius + 1);
    std::vector<Rat> x(p.B.cols, 0);
    std::function<bool(std::size_t)> rec = [&](std::size_t j) -> bool {
      if (j == p.B.cols) {
        if (used >= budget) return false;
        ++used;
        std::vector<Rat> w = detail::apply_offset(p, x);
        Rat v = detail::vector_norm(ring, w);
        if (v < incumbent) {
          incumbent = v;
          out.push_back({v, detail::make_witness(p, w), used});
        }
        return true;
      }
      for (Int t = 0; t < q; ++t) {
        x[j] = finite ? Rat(t) : Rat(t - radius);
        if (!rec(j + 1)) return false;
      }
      return true;
    };
    if (!rec(0)) break;
    if (finite) break;
  }
  return out;
}

}  // namespace svol
