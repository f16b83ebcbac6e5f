#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "svol/model.hpp"

namespace svol {

namespace detail {

// A product n-simplex is a jointly nondegenerate pair (a, u, b, v): a an
// A-simplex of dim j, u: [n] ->> [j] a monotone surjection (stored as its
// value sequence), likewise (b, v).  "Jointly nondegenerate" means no step
// where both u and v are constant; those pairs are exactly the nondegenerate
// simplices of the product simplicial set.
struct ProdSimplex {
  std::string a, b;
  std::vector<int> u, v;

  std::string id() const {
    auto word = [](const std::vector<int>& w) {
      std::string s;
      for (std::size_t t = 1; t < w.size(); ++t) s += (w[t] > w[t - 1]) ? '1' : '0';
      return s;
    };
    return "(" + a + "|" + word(u) + ")x(" + b + "|" + word(v) + ")";
  }
};

// Removes index i from the value sequence; if the result misses a value
// (always the single value w[i]), collapses the gap and reports the missing
// value so the carrier simplex can be replaced by its face.
inline std::vector<int> drop_index(const std::vector<int>& w, std::size_t i, int& missing) {
  std::vector<int> r;
  r.reserve(w.size() - 1);
  for (std::size_t t = 0; t < w.size(); ++t)
    if (t != i) r.push_back(w[t]);
  missing = -1;
  int top = w.back();
  std::vector<bool> hit(top + 1, false);
  for (int x : r) hit[x] = true;
  for (int k = 0; k <= top; ++k)
    if (!hit[k]) missing = k;
  if (missing >= 0)
    for (int& x : r)
      if (x > missing) --x;
  return r;
}

inline ProdSimplex face(const Model& A, const Model& B, const ProdSimplex& s, std::size_t i) {
  ProdSimplex f;
  int miss_u = -1, miss_v = -1;
  f.u = drop_index(s.u, i, miss_u);
  f.v = drop_index(s.v, i, miss_v);
  f.a = miss_u >= 0 ? A.faces.at(s.a)[miss_u] : s.a;
  f.b = miss_v >= 0 ? B.faces.at(s.b)[miss_v] : s.b;
  return f;
}

inline bool jointly_nondegenerate(const std::vector<int>& u, const std::vector<int>& v) {
  for (std::size_t t = 1; t < u.size(); ++t)
    if (u[t] == u[t - 1] && v[t] == v[t - 1]) return false;
  return true;
}

// All monotone surjections [n] ->> [j] as value sequences.
inline std::vector<std::vector<int>> surjections(int n, int j) {
  std::vector<std::vector<int>> out;
  if (j > n || j < 0) return out;
  std::vector<int> cur{0};
  std::function<void()> rec = [&] {
    if (static_cast<int>(cur.size()) == n + 1) {
      if (cur.back() == j) out.push_back(cur);
      return;
    }
    for (int step = 0; step <= 1; ++step) {
      if (cur.back() + step > j) break;
      cur.push_back(cur.back() + step);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

}  // namespace detail

/// Product model (all jointly nondegenerate pairs up to dim A.dim + B.dim)
/// together with the shuffle cross product of two chains.  When both chains
/// are the reference cycles the result is installed as the product's
/// reference cycle.
inline std::pair<Model, Chain> cross_product(const Model& A, const Chain& ca, const Model& B,
                                             const Chain& cb) {
  check_chain(A, ca);
  check_chain(B, cb);
  Model P;
  P.dim = A.dim + B.dim;
  P.label = (A.label.empty() ? "A" : A.label) + "x" + (B.label.empty() ? "B" : B.label);
  P.simplices.resize(P.dim + 1);
  std::map<std::string, detail::ProdSimplex> table;
  for (int n = 0; n <= P.dim; ++n) {
    for (int j = 0; j <= std::min(n, A.dim); ++j)
      for (int l = n - j; l <= std::min(n, B.dim); ++l) {
        auto us = detail::surjections(n, j);
        auto vs = detail::surjections(n, l);
        for (const auto& aid : A.ids(j))
          for (const auto& bid : B.ids(l))
            for (const auto& u : us)
              for (const auto& v : vs) {
                if (!detail::jointly_nondegenerate(u, v)) continue;
                detail::ProdSimplex s{aid, bid, u, v};
                std::string id = s.id();
                P.simplices[n].push_back(id);
                table.emplace(id, std::move(s));
                if (A.boundary_mark.count(aid) || B.boundary_mark.count(bid))
                  P.boundary_mark.insert(id);
              }
      }
    std::sort(P.simplices[n].begin(), P.simplices[n].end());
  }
  for (const auto& [id, s] : table) {
    if (s.u.size() == 1) continue;  // vertex
    std::vector<std::string> fs;
    for (std::size_t i = 0; i < s.u.size(); ++i)
      fs.push_back(detail::face(A, B, s, i).id());
    P.faces[id] = std::move(fs);
  }
  P.build_index();

  // shuffle chain: for a (dim p) and b (dim q), sum over (p,q)-shuffles
  int p = ca.dimension, q = cb.dimension;
  Chain cross{p + q, {}};
  for (const auto& [aid, av] : ca.coefficients)
    for (const auto& [bid, bv] : cb.coefficients) {
      // choose the set of steps where u increments
      std::vector<int> pick(p);
      std::function<void(int, int)> rec = [&](int from, int k) {
        if (k == p) {
          std::vector<int> u{0}, v{0};
          long inversions = 0;
          std::size_t ai = 0;
          for (int t = 0; t < p + q; ++t) {
            bool a_step = ai < pick.size() && pick[ai] == t;
            if (a_step) {
              ++ai;
              // inversions: later a-steps before earlier b-steps
              u.push_back(u.back() + 1);
              v.push_back(v.back());
              inversions += t - static_cast<long>(ai - 1);  // b-steps seen so far
            } else {
              u.push_back(u.back());
              v.push_back(v.back() + 1);
            }
          }
          detail::ProdSimplex s{aid, bid, u, v};
          Rat sign = (inversions % 2 == 0) ? Rat(1) : Rat(-1);
          cross.coefficients[s.id()] += sign * av * bv;
          return;
        }
        for (int t = from; t <= p + q - (p - k); ++t) {
          pick[k] = t;
          rec(t + 1, k + 1);
        }
      };
      rec(0, 0);
    }
  cross = normalized(std::move(cross));
  if (ca == A.reference_cycle && cb == B.reference_cycle) P.reference_cycle = cross;
  validate_model(P);
  return {P, cross};
}

}  // namespace svol
