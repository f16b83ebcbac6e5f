#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "svol/covering.hpp"
#include "svol/homology.hpp"

namespace svol {

inline Model circle_model() {
  Model m;
  m.dim = 1;
  m.label = "S1";
  m.simplices = {{"v"}, {"e"}};
  m.faces["e"] = {"v", "v"};
  m.reference_cycle = Chain{1, {{"e", Rat(1)}}};
  m.build_index();
  validate_model(m);
  return m;
}

/// One-vertex two-triangle torus: loops A, B and diagonal D, both triangles
/// with faces (B, D, A), reference s1 - s2.
inline Model torus_model() {
  Model m;
  m.dim = 2;
  m.label = "T2";
  m.simplices = {{"v"}, {"eA", "eB", "eD"}, {"s1", "s2"}};
  m.faces["eA"] = {"v", "v"};
  m.faces["eB"] = {"v", "v"};
  m.faces["eD"] = {"v", "v"};
  m.faces["s1"] = {"eB", "eD", "eA"};
  m.faces["s2"] = {"eB", "eD", "eA"};
  m.reference_cycle = Chain{2, {{"s1", Rat(1)}, {"s2", Rat(-1)}}};
  m.build_index();
  validate_model(m);
  return m;
}

/// d = 2: double of a triangle (2 top cells); other d: boundary of the
/// standard (d+1)-simplex with the alternating-sign reference (d+2 cells,
/// an upper-bound model only for d >= 3).
inline Model sphere_model(int d) {
  if (d < 1) throw domain_error("sphere_model: d must be >= 1");
  Model m;
  m.dim = d;
  m.label = "S" + std::to_string(d);
  if (d == 2) {
    m.simplices = {{"p", "q", "r"}, {"x", "y", "z"}, {"s1", "s2"}};
    m.faces["x"] = {"q", "p"};
    m.faces["y"] = {"r", "p"};
    m.faces["z"] = {"r", "q"};
    m.faces["s1"] = {"z", "y", "x"};
    m.faces["s2"] = {"z", "y", "x"};
    m.reference_cycle = Chain{2, {{"s1", Rat(1)}, {"s2", Rat(-1)}}};
    m.build_index();
    validate_model(m);
    return m;
  }
  // proper nonempty subsets of {0..d+1} of size <= d+1
  auto subset_id = [](const std::vector<int>& s) {
    std::string id = "f";
    for (int v : s) id += std::to_string(v);
    return id;
  };
  m.simplices.resize(d + 1);
  std::vector<std::vector<std::vector<int>>> by_dim(d + 1);
  std::function<void(std::vector<int>&, int)> gen = [&](std::vector<int>& cur, int next) {
    if (!cur.empty() && static_cast<int>(cur.size()) <= d + 1) {
      by_dim[cur.size() - 1].push_back(cur);
    }
    if (static_cast<int>(cur.size()) == d + 1) return;
    for (int v = next; v <= d + 1; ++v) {
      cur.push_back(v);
      gen(cur, v + 1);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  gen(cur, 0);
  for (int n = 0; n <= d; ++n) {
    std::sort(by_dim[n].begin(), by_dim[n].end());
    for (const auto& s : by_dim[n]) {
      std::string id = subset_id(s);
      m.simplices[n].push_back(id);
      if (n >= 1) {
        std::vector<std::string> fs;
        for (std::size_t i = 0; i < s.size(); ++i) {
          std::vector<int> f = s;
          f.erase(f.begin() + i);
          fs.push_back(subset_id(f));
        }
        m.faces[id] = fs;
      }
    }
  }
  for (std::size_t i = 0; i < by_dim[d].size(); ++i) {
    // facet omitting vertex i of the (d+1)-simplex, alternating sign
    std::vector<int> facet;
    for (int v = 0; v <= d + 1; ++v)
      if (v != static_cast<int>(i)) facet.push_back(v);
    m.reference_cycle.coefficients[subset_id(facet)] = (i % 2 == 0) ? Rat(1) : Rat(-1);
  }
  m.reference_cycle.dimension = d;
  m.build_index();
  validate_model(m);
  return m;
}

namespace detail {

// Triangle over a one-vertex edge set: three loop edges assigned to slots
// (f0, f1, f2) with boundary f0 - f1 + f2; coefficient eps.
struct FanTriangle {
  std::string id;
  std::array<std::string, 3> edges;  // unordered incident edges, fan order
};

/// Searches signs and minus-slot assignments so that sum eps_i * dT_i equals
/// the target 1-chain, then keeps the first assignment whose model passes the
/// homology checks supplied by `accept`.
struct FanSolution {
  std::vector<int> eps;                       // +1 / -1 per triangle
  std::vector<std::array<std::string, 3>> faces;  // slot assignment per triangle
};

inline std::optional<FanSolution> solve_fan_signs(
    const std::vector<FanTriangle>& tris, const std::map<std::string, Rat>& target,
    const std::function<bool(const FanSolution&)>& accept) {
  std::map<std::string, int> remaining;
  for (const auto& t : tris)
    for (const auto& e : t.edges) ++remaining[e];
  std::map<std::string, Rat> coeff;
  FanSolution sol;
  sol.eps.resize(tris.size());
  sol.faces.resize(tris.size());
  std::optional<FanSolution> found;

  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == tris.size()) {
      for (const auto& [e, c] : coeff) {
        auto it = target.find(e);
        if (c != (it == target.end() ? Rat(0) : it->second)) return false;
      }
      if (!accept(sol)) return false;
      found = sol;
      return true;
    }
    const auto& t = tris[i];
    for (int eps : {1, -1}) {
      // a zero target is sign-symmetric; normalize the global sign then
      if (i == 0 && eps < 0 && target.empty()) continue;
      for (int minus = 0; minus < 3; ++minus) {
        // slots: minus edge at f1, the others at (f0, f2) in fan order
        std::array<std::string, 3> slots{t.edges[(minus + 1) % 3], t.edges[minus],
                                         t.edges[(minus + 2) % 3]};
        bool ok = true;
        for (int s = 0; s < 3; ++s) {
          Rat delta = (s == 1 ? Rat(-eps) : Rat(eps));
          coeff[slots[s]] += delta;
          --remaining[slots[s]];
        }
        for (int s = 0; s < 3 && ok; ++s) {
          const std::string& e = slots[s];
          if (remaining[e] == 0) {
            auto it = target.find(e);
            if (coeff[e] != (it == target.end() ? Rat(0) : it->second)) ok = false;
          }
        }
        if (ok) {
          sol.eps[i] = eps;
          sol.faces[i] = slots;
          if (rec(i + 1)) return true;
        }
        for (int s = 0; s < 3; ++s) {
          Rat delta = (s == 1 ? Rat(-eps) : Rat(eps));
          coeff[slots[s]] -= delta;
          ++remaining[slots[s]];
        }
      }
    }
    return false;
  };
  rec(0);
  return found;
}

// One-vertex fan model over the given triangles/faces, all edges loops at v.
inline Model fan_model(const std::string& label, const std::vector<std::string>& edges,
                       const std::vector<FanTriangle>& tris, const FanSolution& sol) {
  Model m;
  m.dim = 2;
  m.label = label;
  m.simplices.resize(3);
  m.simplices[0] = {"v"};
  m.simplices[1] = edges;
  for (const auto& e : edges) m.faces[e] = {"v", "v"};
  for (std::size_t i = 0; i < tris.size(); ++i) {
    m.simplices[2].push_back(tris[i].id);
    m.faces[tris[i].id] = {sol.faces[i][0], sol.faces[i][1], sol.faces[i][2]};
  }
  for (std::size_t i = 0; i < tris.size(); ++i)
    m.reference_cycle.coefficients[tris[i].id] = Rat(sol.eps[i]);
  m.reference_cycle.dimension = 2;
  m.build_index();
  validate_model(m);
  return m;
}

inline bool torsion_free_h1(const Model& m) {
  auto s = smith_normal_form(boundary_matrix(m, 2, false));
  for (const auto& d : s.divisors)
    if (d > 1) return false;
  return true;
}

// Triple building block: adds one boundary circle.  Bottom loop `bot` lives
// at vertex `u`; creates hole loop (at u), top loop and top vertex, three
// connecting edges, three triangles with chain s1 + s2 - s3 of boundary
// bot + hole - top.
struct TripleBlock {
  std::string hole, top, top_vertex;
  std::vector<std::string> new_edges, new_tris;
  Chain chain;  // s1 + s2 - s3
};

inline TripleBlock attach_triple_block(Model& m, const std::string& bot, const std::string& u,
                                       int index) {
  std::string sfx = std::to_string(index);
  TripleBlock blk;
  blk.top_vertex = "w" + sfx;
  blk.hole = "h" + sfx;
  blk.top = "t" + sfx;
  std::string e1 = "q" + sfx + "a", e2 = "q" + sfx + "b", e3 = "q" + sfx + "c";
  std::string s1 = "B" + sfx + "a", s2 = "B" + sfx + "b", s3 = "B" + sfx + "c";
  m.simplices[0].push_back(blk.top_vertex);
  for (const auto& e : {blk.hole, blk.top, e1, e2, e3}) m.simplices[1].push_back(e);
  for (const auto& s : {s1, s2, s3}) m.simplices[2].push_back(s);
  m.faces[blk.hole] = {u, u};
  m.faces[blk.top] = {blk.top_vertex, blk.top_vertex};
  for (const auto& e : {e1, e2, e3}) m.faces[e] = {blk.top_vertex, u};
  m.faces[s1] = {e1, e2, bot};
  m.faces[s2] = {e2, e3, blk.hole};
  m.faces[s3] = {blk.top, e3, e1};
  blk.new_edges = {blk.hole, blk.top, e1, e2, e3};
  blk.new_tris = {s1, s2, s3};
  blk.chain = Chain{2, {{s1, Rat(1)}, {s2, Rat(1)}, {s3, Rat(-1)}}};
  return blk;
}

}  // namespace detail

/// Explicit surface models with minimal-support relative fundamental cycles:
/// support 1 / 2 / 3b-4 / 4g-2 / 4g+3b-4 for (0,1) / (0,2) / (0,b>=3) /
/// (g,0) / (g,b>=1).
inline std::pair<Model, Chain> surface_cycle(int g, int b) {
  if (g < 0 || b < 0 || (g == 0 && b == 0))
    throw domain_error("surface_cycle: need (g,b) != (0,0), use sphere_model for the sphere");

  if (g == 0 && b == 1) {
    Model m;
    m.dim = 2;
    m.label = "Sigma_0,1";
    m.simplices = {{"p", "q", "r"}, {"x", "y", "z"}, {"s"}};
    m.faces["x"] = {"q", "p"};
    m.faces["y"] = {"r", "p"};
    m.faces["z"] = {"r", "q"};
    m.faces["s"] = {"z", "y", "x"};
    m.boundary_mark = {"p", "q", "r", "x", "y", "z"};
    m.reference_cycle = Chain{2, {{"s", Rat(1)}}};
    m.build_index();
    validate_model(m);
    return {m, m.reference_cycle};
  }

  if (g == 0) {
    // annulus core, then b-2 triple blocks stacked on the top circle
    Model m;
    m.dim = 2;
    m.label = "Sigma_0," + std::to_string(b);
    m.simplices = {{"u0", "u1"}, {"a", "t0", "ma", "mb"}, {"A1", "A2"}};
    m.faces["a"] = {"u0", "u0"};
    m.faces["t0"] = {"u1", "u1"};
    m.faces["ma"] = {"u1", "u0"};
    m.faces["mb"] = {"u1", "u0"};
    m.faces["A1"] = {"ma", "mb", "a"};
    m.faces["A2"] = {"t0", "mb", "ma"};
    Chain c{2, {{"A1", Rat(1)}, {"A2", Rat(-1)}}};  // boundary a - t0
    m.boundary_mark = {"u0", "a"};
    std::string top = "t0", top_vertex = "u1";
    std::vector<std::string> holes;
    for (int i = 1; i <= b - 2; ++i) {
      auto blk = detail::attach_triple_block(m, top, top_vertex, i);
      // annulus boundary is a - t0, so stacked blocks (bot + hole - top) add
      c = chain_add(c, blk.chain);
      m.boundary_mark.insert(blk.hole);
      m.boundary_mark.insert(top_vertex);
      holes.push_back(blk.hole);
      top = blk.top;
      top_vertex = blk.top_vertex;
    }
    m.boundary_mark.insert(top);
    m.boundary_mark.insert(top_vertex);
    m.reference_cycle = c;
    m.build_index();
    validate_model(m);
    return {m, c};
  }

  // g >= 1: one-vertex fan over the 4g-gon (b = 0) or (4g+1)-gon with a free
  // boundary loop r (b >= 1), signs found by the fan solver; for b >= 2,
  // triple blocks are stacked on r.
  int sides = 4 * g + (b >= 1 ? 1 : 0);
  auto letter = [&](int i) -> std::string {
    if (i == 4 * g) return "r";
    int block = i / 4, pos = i % 4;
    std::string base = (pos % 2 == 0 ? "ea" : "eb") + std::to_string(block + 1);
    return base;
  };
  std::vector<std::string> edges;
  for (int i = 1; i <= g; ++i) {
    edges.push_back("ea" + std::to_string(i));
    edges.push_back("eb" + std::to_string(i));
  }
  if (b >= 1) edges.push_back("r");
  std::vector<detail::FanTriangle> tris;
  int ntri = sides - 2;
  auto diag = [&](int i) -> std::string {
    if (i == 1) return letter(0);
    if (i == sides - 1) return letter(sides - 1);
    return "d" + std::to_string(i);
  };
  for (int i = 2; i < sides - 1; ++i) edges.push_back("d" + std::to_string(i));
  for (int i = 1; i <= ntri; ++i)
    tris.push_back({"F" + std::to_string(i), {diag(i), letter(i), diag(i + 1)}});

  std::map<std::string, Rat> target;
  if (b >= 1) target["r"] = Rat(1);

  auto accept = [&](const detail::FanSolution& sol) {
    Model cand = detail::fan_model("fan", edges, tris, sol);
    if (b >= 1) cand.boundary_mark = {"v", "r"};
    cand.build_index();
    RingSpec q = parse_ring_spec("Q");
    HomologySummary h = homology(cand, q);
    if (h.at(1).rank != 2 * g) return false;
    if (h.at(2).rank != (b == 0 ? 1u : 0u)) return false;
    if (!detail::torsion_free_h1(cand)) return false;
    return true;
  };
  auto sol = detail::solve_fan_signs(tris, target, accept);
  if (!sol) throw domain_error("surface_cycle: fan sign search failed for g=" + std::to_string(g));
  Model m = detail::fan_model("Sigma_" + std::to_string(g) + "," + std::to_string(b), edges, tris,
                              *sol);
  if (b >= 1) m.boundary_mark = {"v", "r"};
  Chain c = m.reference_cycle;

  if (b >= 2) {
    std::string top = "r", top_vertex = "v";
    m.boundary_mark.clear();
    for (int i = 1; i <= b - 1; ++i) {
      auto blk = detail::attach_triple_block(m, top, top_vertex, i);
      c = chain_add(c, chain_scale(Rat(-1), blk.chain));
      m.boundary_mark.insert(blk.hole);
      m.boundary_mark.insert(top_vertex);
      top = blk.top;
      top_vertex = blk.top_vertex;
    }
    m.boundary_mark.insert(top);
    m.boundary_mark.insert(top_vertex);
    m.reference_cycle = c;
  }
  m.build_index();
  validate_model(m);
  if (!verify_relative_cycle(m, c, parse_ring_spec("Z")))
    throw domain_error("surface_cycle: constructed chain is not a relative cycle");
  return {m, c};
}

// ---------------------------------------------------------------------------
// Surface minimality certificate
// ---------------------------------------------------------------------------

struct SurfaceCertificate {
  std::size_t k = 0;             // support size of the cycle
  std::size_t kernel_dim = 0;    // dim ker relative d_2 on the generated complex
  std::size_t interior_faces = 0;  // dim C_1(X, dX)
  std::size_t h1_rank = 0;       // dim H_1(X, dX) over the field
  long derived_lower_bound = 0;
  bool reducible = false;
  std::optional<Chain> smaller_witness;
  std::vector<std::string> steps;
  bool passed = false;
};

namespace detail {

// Smaller-support fundamental cycle search over c + (ker d_2^rel(X) cap
// im d_3^rel(M)); exercised only by models with top-degree ambiguity.
inline std::optional<Chain> reduce_support(const Model& m, const Model& x, const Chain& c,
                                           const RingSpec& field) {
  // directions: boundaries of (dim+1)-cells of the ambient model whose
  // support stays inside the generated complex's top cells
  if (m.dim != x.dim + 1) return std::nullopt;
  auto cols3 = chain_basis(m, m.dim, false);
  std::vector<Chain> dirs;
  for (const auto& id : cols3) {
    Chain bd = boundary(m, Chain{m.dim, {{id, Rat(1)}}});
    bool inside = true;
    for (const auto& [e, v] : bd.coefficients)
      if (!x.dim_of.count(e)) inside = false;
    if (inside && !bd.is_zero()) dirs.push_back(bd);
  }
  if (dirs.empty()) return std::nullopt;
  // enumerate small coefficient boxes over the field (finite field) or
  // over {-2..2} (rationals); accept the first strictly smaller support
  std::vector<Rat> coeff_values;
  if (field.carrier == Carrier::FiniteField) {
    for (Int t = 0; t < field.p; ++t) coeff_values.push_back(Rat(t));
  } else {
    for (int t = -2; t <= 2; ++t) coeff_values.push_back(Rat(t));
  }
  std::optional<Chain> best;
  std::function<void(std::size_t, Chain)> rec = [&](std::size_t i, Chain acc) {
    if (i == dirs.size()) {
      Chain cand = reduce_chain(field, chain_add(c, acc));
      if (cand.support_size() < c.support_size() &&
          (!best || cand.support_size() < best->support_size()))
        best = cand;
      return;
    }
    for (const auto& t : coeff_values) rec(i + 1, chain_add(acc, chain_scale(t, dirs[i])));
  };
  if (dirs.size() <= 4) rec(0, Chain{x.dim, {}});
  return best;
}

}  // namespace detail

/// Runs the surface lower-bound pipeline on the complex generated by the
/// cycle: kernel dimension, interior edge count, relative H_1 rank, and the
/// resulting support bound 4g + 3b - 4 + 2[b=0] (1 for the disk).
inline SurfaceCertificate surface_minimality_certificate(const Model& m, const Chain& c, int g,
                                                         int b, const RingSpec& field) {
  if (field.carrier == Carrier::ModPrimePower)
    throw domain_error("surface_minimality_certificate: field carrier required");
  if (!verify_fundamental_cycle(m, c, field))
    throw domain_error("surface_minimality_certificate: chain is not fundamental over " +
                       field.tag());
  int delta = (b == 0) ? 1 : 0;
  // consistency of (g, b) with the ambient model's homology
  {
    HomologySummary hrel = homology(m, field.carrier == Carrier::Int ? parse_ring_spec("Q") : field,
                                    true);
    // closed: rank H_1 = 2g; with boundary: rank H_1(M, dM) = 2g + b - 1
    std::size_t want = (b == 0) ? 2 * g : 2 * g + b - 1;
    if (hrel.at(1).rank != want)
      throw domain_error("surface_minimality_certificate: model homology inconsistent with (g,b)");
  }
  Model x = generated_complex(m, c);
  SurfaceCertificate cert;
  cert.k = c.support_size();

  // (i) kernel of the relative top boundary on X
  IMat d2 = boundary_matrix(x, 2, true);
  std::size_t rank = (field.carrier == Carrier::FiniteField) ? rank_mod_p(d2, field.p)
                                                             : rank_rational(QMat::from_int(d2));
  cert.kernel_dim = d2.cols - rank;
  cert.steps.push_back("dim ker relative d_2 on X = " + std::to_string(cert.kernel_dim));
  if (cert.kernel_dim >= 2) {
    cert.reducible = true;
    cert.smaller_witness = detail::reduce_support(m, x, c, field);
    cert.steps.push_back("kernel dimension >= 2: REDUCIBLE" +
                         std::string(cert.smaller_witness ? ", smaller witness found" : ""));
  }

  // (ii) interior 1-simplices: 2 dim C_1(X, dX) <= 3k - b
  cert.interior_faces = chain_basis(x, 1, true).size();
  bool step2 = 2 * cert.interior_faces <= 3 * cert.k - static_cast<std::size_t>(b);
  cert.steps.push_back("2 * " + std::to_string(cert.interior_faces) + " <= 3 * " +
                       std::to_string(cert.k) + " - " + std::to_string(b) + " : " +
                       (step2 ? "ok" : "FAIL"));

  // (iii) relative H_1 rank of X
  HomologySummary hx = homology(x, field.carrier == Carrier::Int ? parse_ring_spec("Q") : field,
                                true);
  cert.h1_rank = hx.at(1).rank;
  std::size_t need = 2 * g + b - 1 + delta;
  bool step3 = cert.h1_rank >= need;
  cert.steps.push_back("dim H_1(X, dX) = " + std::to_string(cert.h1_rank) +
                       " >= " + std::to_string(need) + " : " + (step3 ? "ok" : "FAIL"));

  // (iv) combine: k >= 2 dim H_1 + b - 2, i.e. 4g + 3b - 4 + 2 delta
  cert.derived_lower_bound = (g == 0 && b == 1) ? 1 : 4L * g + 3L * b - 4 + 2 * delta;
  bool step4 = static_cast<long>(cert.k) >= cert.derived_lower_bound;
  cert.steps.push_back("k = " + std::to_string(cert.k) +
                       " >= " + std::to_string(cert.derived_lower_bound) + " : " +
                       (step4 ? "ok" : "FAIL"));
  cert.passed = (cert.kernel_dim == 1) && step2 && step3 && step4;
  return cert;
}

// ---------------------------------------------------------------------------
// Cyclic covers and the stable sequence
// ---------------------------------------------------------------------------

/// k-sheeted cyclic cover of the closed genus-g fan surface, built from an
/// integer 1-cocycle with value 1 on edge ea1 (so the total space is
/// connected); validated against the covering invariants.
inline CoveringData cyclic_cover(int g, int k) {
  if (g < 1 || k < 1) throw domain_error("cyclic_cover: need g >= 1, k >= 1");
  Model base = (g == 1) ? torus_model() : surface_cycle(g, 0).first;
  std::string marked_edge = (g == 1) ? "eA" : "ea1";
  // integer cocycle: phi(f0) - phi(f1) + phi(f2) = 0 per triangle, phi = 1
  // on the marked edge
  auto edges = chain_basis(base, 1, false);
  std::map<std::string, std::size_t> epos;
  for (std::size_t i = 0; i < edges.size(); ++i) epos[edges[i]] = i;
  auto tris = chain_basis(base, 2, false);
  IMat sys(tris.size() + 1, edges.size());
  std::vector<Int> rhs(tris.size() + 1, 0);
  for (std::size_t t = 0; t < tris.size(); ++t) {
    const auto& fs = base.faces.at(tris[t]);
    sys.a[t][epos[fs[0]]] += 1;
    sys.a[t][epos[fs[1]]] -= 1;
    sys.a[t][epos[fs[2]]] += 1;
  }
  sys.a[tris.size()][epos[marked_edge]] = 1;
  rhs[tris.size()] = 1;
  auto phi_sol = solve_integer(sys, rhs);
  if (!phi_sol) throw domain_error("cyclic_cover: no connecting cocycle");
  std::map<std::string, long> phi;
  for (std::size_t i = 0; i < edges.size(); ++i)
    phi[edges[i]] = static_cast<long>(mod_norm((*phi_sol)[i], k));

  CoveringData cov;
  cov.base = base;
  cov.sheets = k;
  Model& tot = cov.total;
  tot.dim = 2;
  tot.label = base.label + "~" + std::to_string(k);
  tot.simplices.resize(3);
  auto lift_id = [&](const std::string& id, long s) {
    return id + "#" + std::to_string(((s % k) + k) % k);
  };
  for (long s = 0; s < k; ++s)
    for (const auto& vid : base.ids(0)) {
      tot.simplices[0].push_back(lift_id(vid, s));
      cov.projection[lift_id(vid, s)] = vid;
    }
  for (long s = 0; s < k; ++s)
    for (const auto& e : base.ids(1)) {
      std::string id = lift_id(e, s);
      tot.simplices[1].push_back(id);
      cov.projection[id] = e;
      const auto& bf = base.faces.at(e);
      tot.faces[id] = {lift_id(bf[0], s + phi[e]), lift_id(bf[1], s)};
    }
  for (long s = 0; s < k; ++s)
    for (const auto& f : base.ids(2)) {
      std::string id = lift_id(f, s);
      tot.simplices[2].push_back(id);
      cov.projection[id] = f;
      const auto& bf = base.faces.at(f);
      tot.faces[id] = {lift_id(bf[0], s + phi[bf[2]]), lift_id(bf[1], s), lift_id(bf[2], s)};
    }
  tot.reference_cycle = Chain{2, {}};
  tot.build_index();
  tot.reference_cycle = transfer(cov, base.reference_cycle);
  validate_model(tot);
  validate_covering(cov);
  if (euler_characteristic(tot) != Int(k) * euler_characteristic(base))
    throw domain_error("cyclic_cover: Euler characteristic mismatch");
  return cov;
}

/// (4 g_k - 2) / k for k = 1..k_max with g_k = k g - k + 1, plus the running
/// infimum; the limit constant is 4g - 4.
struct StableSequence {
  std::vector<std::pair<int, Rat>> terms;
  Rat infimum;
  Rat limit;
};

inline StableSequence stable_volume_surface(int g, int k_max) {
  if (g < 2 || k_max < 1) throw domain_error("stable_volume_surface: need g >= 2, k_max >= 1");
  StableSequence s;
  s.limit = Rat(4 * g - 4);
  for (int k = 1; k <= k_max; ++k) {
    long gk = static_cast<long>(k) * g - k + 1;
    Rat v(Int(4 * gk - 2), Int(k));
    if (s.terms.empty() || v < s.infimum) s.infimum = v;
    s.terms.emplace_back(k, v);
  }
  return s;
}

}  // namespace svol
