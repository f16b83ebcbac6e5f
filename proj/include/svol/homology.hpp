#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "svol/model.hpp"

namespace svol {

/// Chain complex of free Z-modules given by boundary matrices; the common
/// ground for models (absolute or relative) and raw matrix complexes.
struct ChainComplexZ {
  int top = 0;
  std::vector<std::size_t> cells;  // [n] = rank of C_n, n = 0..top
  std::vector<IMat> bnd;           // [n] : C_n -> C_{n-1}; bnd[0] is 0 x cells[0]

  const IMat& boundary_at(int n) const {
    static const IMat empty;
    if (n < 0 || n > top) return empty;
    return bnd[n];
  }
};

inline ChainComplexZ complex_of(const Model& m, bool relative) {
  ChainComplexZ c;
  c.top = m.dim;
  c.cells.resize(m.dim + 1);
  c.bnd.resize(m.dim + 1);
  for (int n = 0; n <= m.dim; ++n) {
    c.cells[n] = chain_basis(m, n, relative).size();
    if (n == 0)
      c.bnd[0] = IMat(0, c.cells[0]);
    else
      c.bnd[n] = boundary_matrix(m, n, relative);
  }
  return c;
}

/// Raw complex JSON: {"degrees": [{"degree": n, "matrix": [[...]]}, ...]}.
/// The matrix at degree n maps C_n to C_{n-1}; missing degrees are zero maps.
inline ChainComplexZ raw_complex_from_json(const Json& j) {
  std::map<int, IMat> mats;
  int top = 0;
  try {
    for (const auto& entry : j.at("degrees")) {
      int n = entry.at("degree").get<int>();
      if (n < 1) throw domain_error("raw complex: degrees start at 1");
      const Json& rows = entry.at("matrix");
      IMat A(rows.size(), rows.empty() ? 0 : rows.at(0).size());
      for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) A.a[i][k] = Int(rows.at(i).at(k).get<long>());
      mats[n] = A;
      top = std::max(top, n);
    }
  } catch (const Json::exception& e) {
    throw domain_error(std::string("raw complex JSON: ") + e.what());
  }
  ChainComplexZ c;
  c.top = top;
  c.cells.assign(top + 1, 0);
  c.bnd.resize(top + 1);
  for (const auto& [n, A] : mats) {
    c.cells[n] = A.cols;
    if (A.rows > c.cells[n - 1]) c.cells[n - 1] = A.rows;
  }
  for (int n = 1; n <= top; ++n) {
    auto it = mats.find(n);
    if (it != mats.end()) {
      c.bnd[n] = it->second;
      if (c.bnd[n].rows < c.cells[n - 1]) {
        IMat padded(c.cells[n - 1], c.bnd[n].cols);
        for (std::size_t i = 0; i < c.bnd[n].rows; ++i) padded.a[i] = c.bnd[n].a[i];
        c.bnd[n] = padded;
      }
    } else {
      c.bnd[n] = IMat(c.cells[n - 1], c.cells[n]);
    }
  }
  c.bnd[0] = IMat(0, c.cells[0]);
  // composability: consecutive boundaries must compose to zero
  for (int n = 1; n < top; ++n) {
    IMat z = mat_mul(c.bnd[n], c.bnd[n + 1]);
    for (const auto& row : z.a)
      for (const auto& x : row)
        if (x != 0) throw domain_error("raw complex: boundary composition nonzero");
  }
  return c;
}

struct HomologyDegree {
  int degree = 0;
  std::size_t rank = 0;            // free rank (Z) or dimension (field)
  std::vector<Int> torsion;        // Z case: divisors > 1
};

struct HomologySummary {
  std::string ring_tag;
  std::vector<HomologyDegree> degrees;  // 0..top

  const HomologyDegree& at(int n) const { return degrees.at(n); }
};

/// Homology over Z, Q, or F_p from SNF/rank computations.
inline HomologySummary homology_of_complex(const ChainComplexZ& c, const RingSpec& spec) {
  if (spec.carrier == Carrier::ModPrimePower)
    throw domain_error("homology: Z/p^m carrier handled by pm_torsion_dimension");
  HomologySummary s;
  s.ring_tag = spec.tag();
  std::vector<std::size_t> rk(c.top + 2, 0);
  std::vector<std::vector<Int>> divisors(c.top + 2);
  for (int n = 1; n <= c.top; ++n) {
    if (spec.carrier == Carrier::FiniteField) {
      rk[n] = rank_mod_p(c.bnd[n], spec.p);
    } else {
      auto snf = smith_normal_form(c.bnd[n]);
      for (const auto& d : snf.divisors)
        if (d != 0) ++rk[n];
      divisors[n] = snf.divisors;
    }
  }
  for (int n = 0; n <= c.top; ++n) {
    HomologyDegree h;
    h.degree = n;
    h.rank = c.cells[n] - rk[n] - rk[n + 1];
    if (spec.carrier == Carrier::Int && n + 1 <= c.top)
      for (const auto& d : divisors[n + 1])
        if (d > 1) h.torsion.push_back(d);
    s.degrees.push_back(std::move(h));
  }
  return s;
}

inline HomologySummary homology(const Model& m, const RingSpec& spec, bool relative = false) {
  return homology_of_complex(complex_of(m, relative), spec);
}

/// Primes dividing a nonzero elementary divisor of the relative top boundary
/// matrix of (X, dX); mod-p cycle lifting is guaranteed for p outside the set.
inline std::set<Int> elementary_divisor_primes(const Model& m) {
  IMat A = boundary_matrix(m, m.dim, true);
  auto s = smith_normal_form(A);
  std::set<Int> primes;
  for (Int d : s.divisors) {
    if (d == 0) continue;
    for (Int f = 2; f * f <= d; ++f)
      while (d % f == 0) {
        primes.insert(f);
        d /= f;
      }
    if (d > 1) primes.insert(d);
  }
  return primes;
}

namespace detail {

inline Chain chain_from_vector(const std::vector<std::string>& basis, const std::vector<Rat>& v,
                               int dim) {
  Chain c{dim, {}};
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (v[i] != 0) c.coefficients[basis[i]] = v[i];
  return c;
}

inline std::vector<Rat> vector_from_chain(const std::vector<std::string>& basis, const Chain& c) {
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
  std::vector<Rat> v(basis.size(), 0);
  for (const auto& [id, x] : c.coefficients) {
    auto it = pos.find(id);
    if (it == pos.end()) throw domain_error("chain outside the expected basis: '" + id + "'");
    v[it->second] = x;
  }
  return v;
}

}  // namespace detail

/// Lifts a relative F_p top cycle to a rational relative cycle with p-free
/// denominators reducing to the input mod p; nullopt when no lift exists.
///
/// With U A V = D, a mod-p kernel vector y lifts to ker(A) localized at p
/// iff (V^{-1} y)_i vanishes mod p at every index with d_i != 0 and p | d_i;
/// the lift keeps the w-coordinates at zero divisors and zeroes the rest.
inline std::optional<Chain> lift_cycle_mod_p(const Model& m, const Chain& cycle, const Int& p) {
  RingSpec fp;
  fp.carrier = Carrier::FiniteField;
  fp.seminorm = SeminormKind::Trivial;
  fp.p = p;
  fp.m = 1;
  if (!verify_relative_cycle(m, cycle, fp)) throw domain_error("lift_cycle_mod_p: not a cycle");
  auto basis = chain_basis(m, m.dim, true);
  IMat A = boundary_matrix(m, m.dim, true);
  auto s = smith_normal_form(A);
  std::vector<Rat> yq = detail::vector_from_chain(basis, reduce_chain(fp, cycle));
  std::vector<Int> y(yq.size());
  for (std::size_t i = 0; i < yq.size(); ++i) y[i] = rat_num(yq[i]);

  // w = V^{-1} y, solved as V w = y (V unimodular, integer solve always works)
  auto w = solve_integer(s.V, y);
  if (!w) throw domain_error("lift_cycle_mod_p: unimodular solve failed");
  std::size_t n = std::min(A.rows, A.cols);
  std::vector<Int> wl(A.cols, 0);
  for (std::size_t i = 0; i < A.cols; ++i) {
    Int d = i < n ? s.divisors[i] : Int(0);
    if (d == 0) {
      wl[i] = (*w)[i];  // free kernel direction, any integer lift works
    } else if (d % p == 0) {
      if ((*w)[i] % p != 0) return std::nullopt;
      wl[i] = 0;
    } else {
      wl[i] = 0;  // nonzero divisor prime to p: coordinate forced to 0 mod p
    }
  }
  // x = V wl: wl is supported on zero divisors, so A x = U^{-1} D wl = 0.
  // Where wl was zeroed, D w = 0 mod p forces w_i = 0 mod p there, so
  // x = y mod p as well.  The reduction check below certifies both.
  std::vector<Int> x = mat_vec(s.V, wl);
  std::vector<Rat> xr(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) xr[i] = Rat(x[i]);
  Chain lift = detail::chain_from_vector(basis, xr, m.dim);
  Chain diff = reduce_chain(fp, chain_add(lift, chain_scale(Rat(-1), cycle)));
  if (!diff.is_zero()) return std::nullopt;
  return lift;
}

/// Solves boundary(x) = target over the ring's carrier; x one dimension up.
/// NO_SOLUTION is a value (nullopt).
inline std::optional<Chain> solve_boundary(const Model& m, const Chain& target,
                                           const RingSpec& spec, bool relative = false) {
  int n = target.dimension;
  if (n >= m.dim) {
    if (target.is_zero()) return Chain{n + 1, {}};
    if (n > m.dim) throw domain_error("solve_boundary: target above top dimension");
  }
  auto rows = chain_basis(m, n, relative);
  auto cols = chain_basis(m, n + 1, relative);
  IMat A = n + 1 <= m.dim ? boundary_matrix(m, n + 1, relative) : IMat(rows.size(), 0);
  Chain t = reduce_chain(spec, target);
  if (relative) {
    Chain t2{t.dimension, {}};
    for (const auto& [id, v] : t.coefficients)
      if (!m.boundary_mark.count(id)) t2.coefficients[id] = v;
    t = std::move(t2);
  }
  std::vector<Rat> b = detail::vector_from_chain(rows, t);

  switch (spec.carrier) {
    case Carrier::Rat: {
      QMat Aq = QMat::from_int(A);
      auto x = solve_rational(Aq, b);
      if (!x) return std::nullopt;
      return detail::chain_from_vector(cols, *x, n + 1);
    }
    case Carrier::Int: {
      std::vector<Int> bi(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) bi[i] = rat_num(b[i]);
      auto x = solve_integer(A, bi);
      if (!x) return std::nullopt;
      std::vector<Rat> xr(x->size());
      for (std::size_t i = 0; i < x->size(); ++i) xr[i] = Rat((*x)[i]);
      return detail::chain_from_vector(cols, xr, n + 1);
    }
    case Carrier::FiniteField:
    case Carrier::ModPrimePower: {
      Int q = spec.modulus();
      std::vector<Int> bi(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) bi[i] = mod_norm(rat_num(b[i]), q);
      auto x = spec.carrier == Carrier::FiniteField ? solve_mod_p(A, bi, q)
                                                    : solve_mod_n(A, bi, q);
      if (!x) return std::nullopt;
      std::vector<Rat> xr(x->size());
      for (std::size_t i = 0; i < x->size(); ++i) xr[i] = Rat(mod_norm((*x)[i], q));
      return detail::chain_from_vector(cols, xr, n + 1);
    }
  }
  throw domain_error("solve_boundary: bad spec");
}

/// True iff the chain is a relative cycle homologous to the reference over
/// the ring's carrier.
inline bool verify_fundamental_cycle(const Model& m, const Chain& c, const RingSpec& spec) {
  if (!verify_relative_cycle(m, c, spec)) return false;
  Chain diff = reduce_chain(spec, chain_add(c, chain_scale(Rat(-1), m.reference_cycle)));
  return solve_boundary(m, diff, spec, true).has_value();
}

/// Cap product with a relative cocycle f of degree d-n against a d-chain:
/// +- sum_j a_j f(back face) (front face), sign (-1)^{n(d-n)}.
inline Chain cap_product(const Model& m, const std::map<std::string, Rat>& cocycle, int codegree,
                         const Chain& c, int n) {
  int d = c.dimension;
  if (codegree != d - n) throw domain_error("cap_product: degree mismatch");
  for (const auto& [id, v] : cocycle) {
    auto it = m.dim_of.find(id);
    if (it == m.dim_of.end() || it->second != codegree)
      throw domain_error("cap_product: cocycle keys non-" + std::to_string(codegree) +
                         "-simplex '" + id + "'");
    if (m.boundary_mark.count(id) && v != 0)
      throw domain_error("cap_product: cocycle does not vanish on the boundary at '" + id + "'");
  }
  auto front_face = [&](std::string id, int target_dim) {
    int cur = m.dim_of.at(id);
    while (cur > target_dim) {
      id = m.faces.at(id)[cur];  // drop the last vertex
      --cur;
    }
    return id;
  };
  auto back_face = [&](std::string id, int target_dim) {
    int cur = m.dim_of.at(id);
    while (cur > target_dim) {
      id = m.faces.at(id)[0];  // drop the first vertex
      --cur;
    }
    return id;
  };
  Rat sign = ((static_cast<long>(n) * (d - n)) % 2 == 0) ? Rat(1) : Rat(-1);
  Chain r{n, {}};
  for (const auto& [id, a] : c.coefficients) {
    auto it = cocycle.find(back_face(id, d - n));
    if (it == cocycle.end() || it->second == 0) continue;
    r.coefficients[front_face(id, n)] += sign * a * it->second;
  }
  return normalized(std::move(r));
}

/// dim_{F_p} of p^m H_n(C (x) Z/p^{m+1}), from integral SNF data.
///
/// Universal coefficients: H_n(C (x) Z/p^{m+1}) picks up Z/p^{m+1} per free
/// rank of H_n(Z), plus Z/p^{min(v,m+1)} per torsion divisor with p-part p^v
/// in H_n(Z) and in H_{n-1}(Z).  Multiplying by p^m kills all factors except
/// those with p-exponent exactly m+1, each contributing one F_p dimension.
inline std::size_t pm_torsion_dimension(const ChainComplexZ& c, const Int& p, int m, int n) {
  if (n < 0 || n > c.top) return 0;
  RingSpec z = parse_ring_spec("Z");
  HomologySummary hz = homology_of_complex(c, z);
  std::size_t dim = hz.at(n).rank;
  for (const auto& t : hz.at(n).torsion)
    if (padic_valuation_int(t, p) >= m + 1) ++dim;
  if (n >= 1)
    for (const auto& t : hz.at(n - 1).torsion)
      if (padic_valuation_int(t, p) >= m + 1) ++dim;
  return dim;
}

inline std::size_t pm_torsion_dimension(const Model& model, const Int& p, int m, int n,
                                        bool relative = false) {
  return pm_torsion_dimension(complex_of(model, relative), p, m, n);
}

/// Rank comparison between the complex generated by a fundamental cycle and
/// the ambient model, over Q and requested prime fields.
struct ComparisonRow {
  int degree = 0;
  std::string field;
  std::size_t rank_generated = 0, rank_model = 0;
  bool relative = false;
  bool holds() const { return rank_generated >= rank_model; }
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  bool all_hold() const {
    for (const auto& r : rows)
      if (!r.holds()) return false;
    return true;
  }
};

inline ComparisonReport comparison_certificate(const Model& m, const Chain& c,
                                               const std::vector<Int>& primes = {}) {
  if (!verify_fundamental_cycle(m, c, parse_ring_spec("Q")))
    throw domain_error("comparison_certificate: chain is not a fundamental cycle over Q");
  Model x = generated_complex(m, c);
  std::vector<RingSpec> fields{parse_ring_spec("Q")};
  for (const auto& p : primes) fields.push_back(parse_ring_spec("Fp:" + p.str()));
  ComparisonReport rep;
  for (const auto& k : fields)
    for (bool relative : {false, true}) {
      HomologySummary hx = homology(x, k, relative);
      HomologySummary hm = homology(m, k, relative);
      for (int n = 0; n <= std::min(x.dim, m.dim); ++n) {
        ComparisonRow row;
        row.degree = n;
        row.field = k.tag();
        row.rank_generated = hx.at(n).rank;
        row.rank_model = hm.at(n).rank;
        row.relative = relative;
        rep.rows.push_back(row);
      }
    }
  return rep;
}

}  // namespace svol
