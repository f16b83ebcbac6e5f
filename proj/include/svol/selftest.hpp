#pragma once

#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "svol/bounds.hpp"
#include "svol/minimize.hpp"
#include "svol/models.hpp"

namespace svol {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // first failure, or a short summary
};

namespace selftest_detail {

struct Check {
  bool ok = true;
  std::string first_failure;
  long count = 0;

  void expect(bool cond, const std::string& what) {
    ++count;
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

/// Solid 3-simplex with one duplicated 2-face and two 3-cells differing only
/// in that face; the duplicate makes the top kernel 2-dimensional, so the
/// redundant 5-simplex cycle below is reducible to the 4-simplex reference.
inline Model redundant_sphere_model() {
  Model m;
  m.dim = 3;
  m.label = "S2-redundant";
  m.simplices = {{"0", "1", "2", "3"},
                 {"01", "02", "03", "12", "13", "23"},
                 {"012", "012x", "013", "023", "123"},
                 {"0123", "0123x"}};
  auto edge = [&](const std::string& a, const std::string& b) {
    m.faces[a + b] = {b, a};
  };
  edge("0", "1"); edge("0", "2"); edge("0", "3");
  edge("1", "2"); edge("1", "3"); edge("2", "3");
  auto tri = [&](const std::string& id, const std::string& a, const std::string& b,
                 const std::string& c) { m.faces[id] = {b + c, a + c, a + b}; };
  tri("012", "0", "1", "2");
  tri("012x", "0", "1", "2");
  tri("013", "0", "1", "3");
  tri("023", "0", "2", "3");
  tri("123", "1", "2", "3");
  m.faces["0123"] = {"123", "023", "013", "012"};
  m.faces["0123x"] = {"123", "023", "013", "012x"};
  m.reference_cycle =
      Chain{2, {{"123", Rat(1)}, {"023", Rat(-1)}, {"013", Rat(1)}, {"012", Rat(-1)}}};
  m.build_index();
  validate_model(m);
  return m;
}

/// Fundamental cycle of the redundant sphere with inflated support 5.
inline Chain redundant_sphere_cycle() {
  return Chain{2,
               {{"123", Rat(1)},
                {"023", Rat(-1)},
                {"013", Rat(1)},
                {"012", Rat(-2)},
                {"012x", Rat(1)}}};
}

inline std::vector<std::pair<Model, Chain>> corpus() {
  std::vector<std::pair<Model, Chain>> out;
  Model c = circle_model();
  out.emplace_back(c, c.reference_cycle);
  Model t = torus_model();
  out.emplace_back(t, t.reference_cycle);
  Model s = sphere_model(2);
  out.emplace_back(s, s.reference_cycle);
  out.push_back(surface_cycle(1, 1));
  out.push_back(surface_cycle(2, 0));
  out.push_back(surface_cycle(3, 0));
  out.emplace_back(redundant_sphere_model(), redundant_sphere_cycle());
  return out;
}

inline Rat value_of(const Model& m, const Chain& c, const std::string& ring) {
  return minimal_norm(m, c, parse_ring_spec(ring)).value;
}

// gcd-of-minors oracle for SNF divisor products, by brute-force expansion
inline Int minor_det(const IMat& m, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
  std::size_t k = rows.size();
  if (k == 1) return m.a[rows[0]][cols[0]];
  Int det = 0;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    std::vector<std::size_t> sub_cols;
    for (std::size_t jj = 0; jj < k; ++jj)
      if (jj != j) sub_cols.push_back(cols[jj]);
    Int term = m.a[rows[0]][cols[j]] * minor_det(m, sub_rows, sub_cols);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
                    std::size_t start,
                    const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (cur.size() == k) {
    f(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, cur, i + 1, f);
    cur.pop_back();
  }
}

inline Int gcd_of_k_minors(const IMat& m, std::size_t k) {
  Int g = 0;
  std::vector<std::size_t> rs, cs;
  subsets(m.rows, k, rs, 0, [&](const std::vector<std::size_t>& rows) {
    subsets(m.cols, k, cs, 0, [&](const std::vector<std::size_t>& cols) {
      g = boost::multiprecision::gcd(g, minor_det(m, rows, cols));
    });
  });
  return g < 0 ? Int(-g) : g;
}

}  // namespace selftest_detail

inline CriterionResult criterion_1_surfaces() {
  using namespace selftest_detail;
  Check ch;
  std::vector<std::pair<int, int>> cases{{0, 1}, {0, 2}, {0, 3}};
  for (int g = 1; g <= 3; ++g)
    for (int b = 0; b <= 3; ++b) cases.emplace_back(g, b);
  for (auto [g, b] : cases) {
    auto [m, c] = surface_cycle(g, b);
    std::size_t want = b == 0           ? 4 * g - 2
                       : g == 0 && b == 1 ? 1
                       : g == 0 && b == 2 ? 2
                       : g == 0           ? 3 * b - 4
                                          : 4 * g + 3 * b - 4;
    std::string tag = "(" + std::to_string(g) + "," + std::to_string(b) + ")";
    ch.expect(verify_relative_cycle(m, c, parse_ring_spec("Z")), tag + " cycle verification");
    ch.expect(c.support_size() == want,
              tag + " support " + std::to_string(c.support_size()) + " != " + std::to_string(want));
    for (std::string field : {"Q", "Fp:2"}) {
      SurfaceCertificate cert = surface_minimality_certificate(m, c, g, b, parse_ring_spec(field));
      ch.expect(cert.passed, tag + " certificate failed over " + field);
      ch.expect(cert.derived_lower_bound == static_cast<long>(want),
                tag + " lower bound mismatch over " + field);
    }
  }
  return {1, "surface values: upper = certified lower for all (g,b)", ch.ok,
          ch.ok ? std::to_string(cases.size()) + " surfaces checked" : ch.first_failure};
}

inline CriterionResult criterion_2_torus() {
  using namespace selftest_detail;
  Check ch;
  Model t = torus_model();
  for (std::string ring : {"triv:Fp:2", "triv:Fp:3", "Zp:2", "Zp:3", "Z"}) {
    Rat v = value_of(t, t.reference_cycle, ring);
    ch.expect(v == 2, "torus over " + ring + " = " + to_string(v));
  }
  for (Int p : {Int(2), Int(3)}) {
    auto seq = scaling_sequence(t, t.reference_cycle, p, 4);
    for (auto& [m, v] : seq)
      ch.expect(v == 2, "scaling p=" + p.str() + " m=" + std::to_string(m) + " = " + to_string(v));
  }
  return {2, "torus minimum 2 over five rings; scaling constant 2", ch.ok,
          ch.ok ? "5 rings + 2 scaling sequences" : ch.first_failure};
}

inline CriterionResult criterion_3_spheres() {
  using namespace selftest_detail;
  Check ch;
  Model c = circle_model();
  ch.expect(value_of(c, c.reference_cycle, "Z") == 1, "circle over Z");
  Model s = sphere_model(2);
  for (std::string ring : {"Z", "Zp:2", "Zp:3", "Zp:5"})
    ch.expect(value_of(s, s.reference_cycle, ring) == 2, "2-sphere over " + ring);
  // bounds engine alone, seeded with the witness values and closedness
  for (int d : {1, 2, 3, 4}) {
    KnowledgeBase kb;
    std::string id = "S" + std::to_string(d);
    Rat zval = (d % 2 == 1) ? 1 : 2;
    kb.facts[{id, "Z"}] = {id, "Z", {zval, zval}, {"seed: witness"}};
    kb.relations.push_back({Relation::Kind::Closed, id});
    if (d % 2 == 0) kb.relations.push_back({Relation::Kind::EvenClosed, id});
    auto r = propagate(kb);
    ch.expect(!r.contradiction, id + " contradiction");
    for (Int p : {Int(2), Int(3), Int(5), Int(7)})
      for (std::string fam : {"Zp:", "Qp:"}) {
        const Interval& iv = r.kb.facts.at({id, fam + p.str()}).interval;
        ch.expect(iv.width_zero() && iv.lo == zval, id + " " + fam + p.str() + " interval");
      }
  }
  return {3, "sphere values from models and from the bounds engine", ch.ok,
          ch.ok ? "circle, 2-sphere, S^1..S^4 intervals" : ch.first_failure};
}

inline CriterionResult criterion_4_projective() {
  using namespace selftest_detail;
  Check ch;
  for (int d : {3, 5}) {
    KnowledgeBase kb;
    std::string rp = "RP" + std::to_string(d), sp = "S" + std::to_string(d);
    kb.facts[{rp, "Z"}] = {rp, "Z", {Rat(2), Rat(2)}, {"seed: external"}};
    kb.facts[{rp, "Fp:2"}] = {rp, "Fp:2", {Rat(2), Rat(2)}, {"seed: external"}};
    kb.facts[{sp, "Z"}] = {sp, "Z", {Rat(1), Rat(1)}, {"seed: external"}};
    kb.relations.push_back({Relation::Kind::Closed, sp});
    kb.relations.push_back({Relation::Kind::Closed, rp});
    Relation cover{Relation::Kind::DegreeMap, sp, rp};
    cover.degree = 2;
    kb.relations.push_back(cover);
    auto r = propagate(kb);
    ch.expect(!r.contradiction, rp + " contradiction");
    for (Int p : {Int(2), Int(3), Int(5), Int(7)}) {
      Rat want = p == 2 ? Rat(2) : Rat(1);
      for (std::string fam : {"Zp:", "Qp:"}) {
        const Fact& f = r.kb.facts.at({rp, fam + p.str()});
        ch.expect(f.interval.width_zero() && f.interval.lo == want,
                  rp + " " + fam + p.str() + " interval");
        ch.expect(!f.trace.empty(), rp + " " + fam + p.str() + " trace");
      }
    }
  }
  return {4, "projective space values derived by the bounds engine", ch.ok,
          ch.ok ? "RP3, RP5 at p in {2,3,5,7}" : ch.first_failure};
}

inline CriterionResult criterion_5_inequalities() {
  using namespace selftest_detail;
  Check ch;
  for (const auto& [m, c] : corpus()) {
    Rat vz = value_of(m, c, "Z");
    for (Int p : {Int(2), Int(3), Int(5)}) {
      std::string ps = p.str();
      Rat vfp = value_of(m, c, "triv:Fp:" + ps);
      Rat vzp = value_of(m, c, "Zp:" + ps);
      Rat vqp = value_of(m, c, "Qp:" + ps);
      ch.expect(vzp <= vz, m.label + " Zp <= Z at p=" + ps);
      ch.expect(vqp <= vzp, m.label + " Qp <= Zp at p=" + ps);
      Rat prev;
      for (int e = 1; e <= 3; ++e) {
        std::string me = ps + "^" + std::to_string(e);
        Rat vq = value_of(m, c, "Zmod:" + me);
        Rat vt = value_of(m, c, "triv:Zmod:" + me);
        ch.expect(vfp <= vq, m.label + " Fp <= Zmod:" + me);
        ch.expect(vq <= vzp, m.label + " Zmod <= Zp at " + me);
        ch.expect(vq <= vt && vt <= rat_pow(p, e - 1) * vq,
                  m.label + " quotient/trivial comparison at " + me);
        if (e > 1) ch.expect(prev <= vq, m.label + " Zmod monotone in m at " + me);
        prev = vq;
      }
      // Qp/Zp trigger
      bool closed = m.boundary_mark.empty();
      Rat threshold = (closed && m.dim % 2 == 0) ? Rat(2 * p) : Rat(p);
      if (vqp < threshold) ch.expect(vqp == vzp, m.label + " Qp/Zp trigger at p=" + ps);
      // monotonicity via reduction of an integral witness
      MinimizationResult wz = minimal_norm(m, c, parse_ring_spec("Z"));
      for (std::string target : {"Zmod:" + ps + "^2", "Fp:" + ps}) {
        RingSpec tr = parse_ring_spec(target);
        Rat pushed = chain_norm(tr, wz.witness);
        ch.expect(value_of(m, c, target) <= pushed, m.label + " monotone push to " + target);
      }
    }
    // upper semicontinuity: perturbing the seminorm by eps/(2k) on the
    // witness support raises the achievable value by less than eps
    {
      RingSpec zp = parse_ring_spec("Zp:2");
      MinimizationResult r = minimal_norm(m, c, zp);
      std::size_t k = std::max<std::size_t>(1, r.witness.support_size());
      Rat eps = 1;
      Rat perturbed = 0;
      for (const auto& [id, v] : r.witness.coefficients)
        perturbed += seminorm(zp, v) + eps / Rat(2 * k);
      ch.expect(perturbed < r.value + eps, m.label + " semicontinuity");
    }
    // maximality: unit-bounded cocycles never increase the norm under cap
    if (m.dim == 2 && m.boundary_mark.empty()) {
      RingSpec zp = parse_ring_spec("Zp:3");
      for (const auto& e : m.ids(1)) {
        std::map<std::string, Rat> f{{e, Rat(1)}};
        Chain capped = cap_product(m, f, 1, c, 1);
        ch.expect(chain_norm(zp, capped) <= chain_norm(zp, c),
                  m.label + " cap bound via " + e);
      }
    }
  }
  return {5, "sandwich, trigger, monotonicity, semicontinuity, maximality", ch.ok,
          ch.ok ? std::to_string(ch.count) + " inequalities" : ch.first_failure};
}

inline CriterionResult criterion_6_scaling() {
  using namespace selftest_detail;
  Check ch;
  for (const auto& [m, c] : corpus())
    for (Int p : {Int(2), Int(3)}) {
      auto seq = scaling_sequence(m, c, p, 4);  // throws if not monotone
      for (std::size_t i = 1; i < seq.size(); ++i)
        ch.expect(seq[i].second <= seq[i - 1].second, m.label + " scaling p=" + p.str());
    }
  return {6, "scaling sequences non-increasing on the corpus", ch.ok,
          ch.ok ? std::to_string(ch.count) + " steps" : ch.first_failure};
}

inline CriterionResult criterion_7_almost_all_primes() {
  using namespace selftest_detail;
  Check ch;
  std::vector<std::pair<int, int>> cases{{1, 0}, {2, 0}, {1, 1}, {0, 2}};
  for (auto [g, b] : cases) {
    auto [m, c] = surface_cycle(g, b);
    std::set<Int> divisors = elementary_divisor_primes(m);
    std::string tag = "(" + std::to_string(g) + "," + std::to_string(b) + ")";
    for (Int p : {Int(2), Int(3), Int(5), Int(7)}) {
      if (divisors.count(p)) continue;
      MinimizationResult fp = minimal_norm(m, c, parse_ring_spec("triv:Fp:" + p.str()));
      Rat wq = value_of(m, c, "triv:Q");
      ch.expect(fp.value == wq, tag + " F_p vs weightless-Q at p=" + p.str());
      auto lifted = lift_cycle_mod_p(m, fp.witness, p);
      ch.expect(lifted.has_value(), tag + " lift exists at p=" + p.str());
      if (lifted) {
        RingSpec f = parse_ring_spec("Fp:" + p.str());
        ch.expect(reduce_chain(f, *lifted) == reduce_chain(f, fp.witness),
                  tag + " lift round trip at p=" + p.str());
      }
    }
  }
  return {7, "outside elementary divisor primes, F_p equals weightless Q and lifts", ch.ok,
          ch.ok ? std::to_string(ch.count) + " checks" : ch.first_failure};
}

inline CriterionResult criterion_8_linear_algebra() {
  using namespace selftest_detail;
  Check ch;
  std::mt19937 rng(20260825);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  for (int trial = 0; trial < 500 && ch.ok; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    IMat a(r, c);
    for (auto& row : a.a)
      for (auto& x : row) x = entry(rng);
    SmithDecomposition s = smith_normal_form(a);
    ch.expect(mat_mul(mat_mul(s.U, a), s.V) == s.D, "SNF decomposition, trial " +
                                                        std::to_string(trial));
    Int prod = 1;
    for (std::size_t k = 0; k < s.divisors.size(); ++k) {
      prod *= s.divisors[k];
      ch.expect(prod == gcd_of_k_minors(a, k + 1),
                "gcd-of-minors oracle, trial " + std::to_string(trial));
      if (prod == 0) break;
    }
  }
  // pm-torsion brute force on raw complexes with <= 3 cells per degree
  std::uniform_int_distribution<int> small(0, 3), cdim(1, 3);
  int complexes = 0;
  for (int trial = 0; trial < 200 && complexes < 40 && ch.ok; ++trial) {
    ChainComplexZ c;
    c.top = 2;
    c.cells = {static_cast<std::size_t>(cdim(rng)), static_cast<std::size_t>(cdim(rng)),
               static_cast<std::size_t>(cdim(rng))};
    c.bnd.resize(3);
    c.bnd[0] = IMat(0, c.cells[0]);
    c.bnd[1] = IMat(c.cells[0], c.cells[1]);
    c.bnd[2] = IMat(c.cells[1], c.cells[2]);
    for (auto& row : c.bnd[1].a)
      for (auto& x : row) x = small(rng) - 1;
    // choose d_2 inside ker d_1 so that d_1 d_2 = 0: columns from the kernel
    auto ker = kernel_integer(c.bnd[1]);
    if (ker.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, ker.size() - 1);
    for (std::size_t j = 0; j < c.cells[2]; ++j) {
      const auto& kv = ker[pick(rng)];
      int scale = small(rng) - 1;
      for (std::size_t i = 0; i < c.cells[1]; ++i) c.bnd[2].a[i][j] = scale * kv[i];
    }
    ++complexes;
    for (Int p : {Int(2), Int(3)})
      for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n) {
          std::size_t fast = pm_torsion_dimension(c, p, m, n);
          // brute force: |p^m H_n(C; Z/p^{m+1})| = p^dim
          Int q = int_pow(p, m + 1);
          std::size_t rows = n > 0 ? c.cells[n - 1] : 0;
          std::vector<std::vector<Int>> cycles;
          std::vector<Int> z(c.cells[n], 0);
          std::function<void(std::size_t)> enumerate = [&](std::size_t i) {
            if (i == c.cells[n]) {
              for (std::size_t rr = 0; rr < rows; ++rr) {
                Int s = 0;
                for (std::size_t jj = 0; jj < c.cells[n]; ++jj) s += c.bnd[n].a[rr][jj] * z[jj];
                if (mod_norm(s, q) != 0) return;
              }
              cycles.push_back(z);
              return;
            }
            for (Int t = 0; t < q; ++t) {
              z[i] = t;
              enumerate(i + 1);
            }
          };
          enumerate(0);
          // image subgroup of d_{n+1} mod q
          std::set<std::vector<Int>> image;
          if (n + 1 <= 2 && c.cells[n + 1] > 0) {
            std::vector<Int> w(c.cells[n + 1], 0);
            std::function<void(std::size_t)> enum_im = [&](std::size_t i) {
              if (i == c.cells[n + 1]) {
                std::vector<Int> b(c.cells[n], 0);
                for (std::size_t rr = 0; rr < c.cells[n]; ++rr) {
                  Int s = 0;
                  for (std::size_t jj = 0; jj < c.cells[n + 1]; ++jj)
                    s += c.bnd[n + 1].a[rr][jj] * w[jj];
                  b[rr] = mod_norm(s, q);
                }
                image.insert(std::move(b));
                return;
              }
              for (Int t = 0; t < q; ++t) {
                w[i] = t;
                enum_im(i + 1);
              }
            };
            enum_im(0);
          } else {
            image.insert(std::vector<Int>(c.cells[n], 0));
          }
          std::set<std::vector<Int>> classes;
          Int pm = int_pow(p, m);
          for (const auto& zc : cycles) {
            std::vector<Int> scaled(zc.size());
            for (std::size_t i = 0; i < zc.size(); ++i) scaled[i] = mod_norm(pm * zc[i], q);
            // canonical coset representative: least element of scaled + image
            std::vector<Int> best;
            for (const auto& b : image) {
              std::vector<Int> cand(scaled.size());
              for (std::size_t i = 0; i < scaled.size(); ++i)
                cand[i] = mod_norm(scaled[i] + b[i], q);
              if (best.empty() || cand < best) best = cand;
            }
            classes.insert(best);
          }
          std::size_t slow = 0;
          std::size_t sz = classes.size();
          while (sz > 1) {
            sz /= static_cast<std::size_t>(p);
            ++slow;
          }
          ch.expect(fast == slow, "pm-torsion oracle p=" + p.str() + " m=" + std::to_string(m) +
                                      " n=" + std::to_string(n) + " trial " +
                                      std::to_string(trial));
        }
  }
  ch.expect(complexes >= 20, "too few random complexes generated");
  return {8, "SNF and pm-torsion agree with brute-force oracles", ch.ok,
          ch.ok ? "500 SNF trials, " + std::to_string(complexes) + " complexes" : ch.first_failure};
}

inline CriterionResult criterion_9_simultaneous() {
  using namespace selftest_detail;
  Check ch;
  Model t = torus_model();
  std::map<Int, Chain> witnesses;
  std::map<Int, Rat> minima;
  for (Int p : {Int(2), Int(3)}) {
    MinimizationResult r = minimal_norm(t, t.reference_cycle, parse_ring_spec("Zp:" + p.str()));
    witnesses[p] = r.witness;
    minima[p] = r.value;
  }
  int N = 4;
  auto sim = simultaneous_cycle(witnesses, N);
  ch.expect(verify_relative_cycle(t, sim.cycle, parse_ring_spec("Z")), "combined cycle verifies");
  Rat mass = 0;
  for (const auto& [p, w] : witnesses) mass += chain_norm(parse_ring_spec("Z"), w);
  for (const auto& [p, w] : witnesses) {
    RingSpec zp = parse_ring_spec("Zp:" + p.str());
    Rat tol = rat_pow(Int(2), 1 - N) * mass;
    ch.expect(chain_norm(zp, sim.cycle) <= minima[p] + tol,
              "p=" + p.str() + " norm " + to_string(chain_norm(zp, sim.cycle)));
  }
  auto two = simultaneous_cycle(witnesses, 2);
  ch.expect(two.coefficients[2] == 9 && two.coefficients[3] == -8,
            "CRT coefficients for N=2: a_2=" + two.coefficients[2].str() +
                ", a_3=" + two.coefficients[3].str());
  return {9, "simultaneous approximation on the torus, CRT coefficients", ch.ok,
          ch.ok ? "T={2,3}, N=4 and N=2" : ch.first_failure};
}

inline CriterionResult criterion_10_stable() {
  using namespace selftest_detail;
  Check ch;
  StableSequence s = stable_volume_surface(2, 64);
  for (std::size_t i = 1; i < s.terms.size(); ++i)
    ch.expect(s.terms[i].second < s.terms[i - 1].second, "strictly decreasing at k=" +
                                                             std::to_string(s.terms[i].first));
  ch.expect(s.infimum > 4 && s.infimum <= Rat(4) + Rat(2, 64),
            "infimum " + to_string(s.infimum) + " outside (4, 4+2/64]");
  ch.expect(s.limit == 4, "limit " + to_string(s.limit));
  return {10, "stable surface sequence for g=2", ch.ok,
          ch.ok ? "64 terms, infimum " + to_string(s.infimum) : ch.first_failure};
}

inline CriterionResult criterion_11_stream() {
  using namespace selftest_detail;
  Check ch;
  Model t = torus_model();
  for (std::string ring : {"Fp:2", "Zp:2"}) {
    auto stream = upper_bound_stream(t, t.reference_cycle, parse_ring_spec(ring), 100000);
    ch.expect(!stream.empty(), ring + " empty stream");
    for (std::size_t i = 1; i < stream.size(); ++i)
      ch.expect(stream[i].bound < stream[i - 1].bound, ring + " not improving");
    ch.expect(stream.back().bound == 2, ring + " final bound " + to_string(stream.back().bound));
  }
  return {11, "upper-bound streams reach the torus minimum", ch.ok,
          ch.ok ? "Fp:2 and Zp:2" : ch.first_failure};
}

inline std::vector<CriterionResult> run_acceptance() {
  return {criterion_1_surfaces(),  criterion_2_torus(),     criterion_3_spheres(),
          criterion_4_projective(), criterion_5_inequalities(), criterion_6_scaling(),
          criterion_7_almost_all_primes(), criterion_8_linear_algebra(),
          criterion_9_simultaneous(), criterion_10_stable(),  criterion_11_stream()};
}

}  // namespace svol
