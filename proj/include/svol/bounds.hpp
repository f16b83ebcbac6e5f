#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "svol/rings.hpp"

namespace svol {

/// Interval of possible values for one (space, ring) pair; hi absent = +inf.
struct Interval {
  Rat lo = 0;
  std::optional<Rat> hi;

  bool contradictory() const { return hi && lo > *hi; }
  bool width_zero() const { return hi && lo == *hi; }
};

struct Fact {
  std::string space;  // label or model content hash
  std::string ring;   // canonical ring tag
  Interval interval;
  std::vector<std::string> trace;  // seed citation, then every shrink in order
};

struct Relation {
  enum class Kind {
    DegreeMap,    // space --f--> target, deg f = degree
    Covering,     // space = total, target = base, degree = sheet count
    Product,      // space = factor_a x factor_b
    EvenClosed,   // closed, even-dimensional
    Closed,
    Betti,        // b_{n}(space; field) = betti
    Dim,          // dim space = n
    DivisorCert,  // machine-checked elementary divisor prime set for space
  };
  Kind kind;
  std::string space;
  std::string target;
  std::string factor_a, factor_b;
  Int degree = 0;
  int n = 0;
  std::string field;  // "Q" or "Fp:<p>" for Betti
  Int betti = 0;
  std::vector<Int> divisor_primes;
  std::string certificate;  // where the divisor set was computed
};

struct KnowledgeBase {
  std::map<std::pair<std::string, std::string>, Fact> facts;
  std::vector<Relation> relations;
  std::vector<Int> primes;  // primes the engine materializes rings for
};

struct PropagationResult {
  KnowledgeBase kb;
  bool contradiction = false;
  std::string report;  // trace of the contradictory fact, when any
  long shrinks = 0;
  int passes = 0;
};

namespace detail {

// |x|_R when x is a unit of R (so the degree estimate applies); nullopt if
// x is not a unit there.
inline std::optional<Rat> unit_norm(const RingSpec& r, const Int& x) {
  if (x == 0) return std::nullopt;
  switch (r.seminorm) {
    case SeminormKind::Archimedean:
      if (r.carrier == Carrier::Int) return (x == 1 || x == -1) ? std::optional<Rat>(1) : std::nullopt;
      return Rat(boost::multiprecision::abs(x));
    case SeminormKind::PAdic:
      if (r.carrier == Carrier::Int)
        return boost::multiprecision::gcd(x, r.p) == 1 ? std::optional<Rat>(1) : std::nullopt;
      return rat_pow(r.p, -padic_valuation_int(x, r.p));
    case SeminormKind::Trivial:
      if (r.carrier == Carrier::Int) return (x == 1 || x == -1) ? std::optional<Rat>(1) : std::nullopt;
      if (r.carrier == Carrier::Rat) return Rat(1);
      return boost::multiprecision::gcd(x, r.p) == 1 ? std::optional<Rat>(1) : std::nullopt;
    case SeminormKind::QuotientPAdic:
      return boost::multiprecision::gcd(x, r.p) == 1 ? std::optional<Rat>(1) : std::nullopt;
  }
  return std::nullopt;
}

inline Int binomial(int n, int k) {
  Int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// Mutable propagation state; all interval updates are intersections, so the
/// fixpoint is independent of rule order.
class Propagator {
 public:
  explicit Propagator(KnowledgeBase kb) : res_{std::move(kb)} {
    std::set<Int> ps(res_.kb.primes.begin(), res_.kb.primes.end());
    for (Int p : {Int(2), Int(3), Int(5), Int(7)}) ps.insert(p);
    res_.kb.primes.assign(ps.begin(), ps.end());
    std::set<std::string> spaces;
    for (const auto& [key, f] : res_.kb.facts) spaces.insert(key.first);
    for (const auto& r : res_.kb.relations) {
      if (!r.space.empty()) spaces.insert(r.space);
      if (!r.target.empty()) spaces.insert(r.target);
      if (!r.factor_a.empty()) spaces.insert(r.factor_a);
      if (!r.factor_b.empty()) spaces.insert(r.factor_b);
    }
    spaces_.assign(spaces.begin(), spaces.end());
    for (const auto& s : spaces_) {
      ensure(s, "Z");
      for (const Int& p : res_.kb.primes) {
        ensure(s, "Zp:" + p.str());
        ensure(s, "Qp:" + p.str());
        ensure(s, "Fp:" + p.str());
        ensure(s, "Zmod:" + p.str() + "^1");
      }
      if (has_cert(s)) ensure(s, "triv:Q");
    }
  }

  PropagationResult run() {
    const int max_passes = 64;
    for (int pass = 0; pass < max_passes; ++pass) {
      ++res_.passes;
      long before = res_.shrinks;
      universal_bound();
      sandwich();
      degree_and_covering();
      product();
      betti_and_closed();
      qp_zp_trigger();
      almost_all_primes();
      if (res_.contradiction) return res_;
      if (res_.shrinks == before) break;
    }
    return res_;
  }

 private:
  PropagationResult res_;
  std::vector<std::string> spaces_;

  Fact& fact(const std::string& s, const std::string& ring) {
    return res_.kb.facts.at({s, ring});
  }

  void ensure(const std::string& s, const std::string& ring) {
    auto key = std::make_pair(s, ring);
    if (!res_.kb.facts.count(key)) res_.kb.facts[key] = Fact{s, ring, {}, {}};
  }

  bool has_cert(const std::string& s) const {
    for (const auto& r : res_.kb.relations)
      if (r.kind == Relation::Kind::DivisorCert && r.space == s) return true;
    return false;
  }

  void raise_lo(Fact& f, const Rat& lo, const std::string& why) {
    if (res_.contradiction || lo <= f.interval.lo) return;
    f.interval.lo = lo;
    f.trace.push_back(why + ": lo >= " + to_string(lo));
    ++res_.shrinks;
    check(f);
  }

  void drop_hi(Fact& f, const Rat& hi, const std::string& why) {
    if (res_.contradiction || (f.interval.hi && *f.interval.hi <= hi)) return;
    f.interval.hi = hi;
    f.trace.push_back(why + ": hi <= " + to_string(hi));
    ++res_.shrinks;
    check(f);
  }

  void check(const Fact& f) {
    if (!f.interval.contradictory()) return;
    res_.contradiction = true;
    std::ostringstream os;
    os << "CONTRADICTION at (" << f.space << ", " << f.ring << "): lo " << to_string(f.interval.lo)
       << " > hi " << to_string(*f.interval.hi) << "\n";
    for (const auto& line : f.trace) os << "  " << line << "\n";
    res_.report = os.str();
  }

  // value(A) <= lambda * value(B), applied in both interval directions
  void leq(Fact& a, Fact& b, const Rat& lambda, const std::string& rule) {
    if (b.interval.hi) drop_hi(a, lambda * *b.interval.hi, rule);
    if (a.interval.lo > 0) raise_lo(b, a.interval.lo / lambda, rule);
  }

  // R1: every ring is bounded by the archimedean integral value
  void universal_bound() {
    for (const auto& s : spaces_) {
      Fact& z = fact(s, "Z");
      if (!z.interval.hi) continue;
      for (auto& [key, f] : res_.kb.facts) {
        if (key.first != s || key.second == "Z") continue;
        drop_hi(f, *z.interval.hi, "R1 universal (" + s + " over Z)");
      }
    }
  }

  // R2: the projection/inclusion chains at each prime, all with factor 1,
  // plus the trivial-vs-quotient comparison on Z/p^m when both are present.
  // R3 (density) is the identity in this representation: the Zp:<p> and
  // Qp:<p> tags are computed on Z resp. Q with the p-adic seminorm.
  void sandwich() {
    for (const auto& s : spaces_)
      for (const Int& p : res_.kb.primes) {
        std::string ps = p.str();
        Fact& z = fact(s, "Z");
        Fact& zp = fact(s, "Zp:" + ps);
        Fact& qp = fact(s, "Qp:" + ps);
        Fact& fp = fact(s, "Fp:" + ps);
        std::string rule = "R2 sandwich p=" + ps + " (" + s + ")";
        leq(zp, z, 1, rule);
        leq(qp, zp, 1, rule);
        leq(fp, zp, 1, rule);
        for (int m = 1;; ++m) {
          auto key = std::make_pair(s, "Zmod:" + ps + "^" + std::to_string(m));
          if (!res_.kb.facts.count(key)) break;
          Fact& zm = res_.kb.facts.at(key);
          leq(fp, zm, 1, rule);
          leq(zm, zp, 1, rule);
          auto next = std::make_pair(s, "Zmod:" + ps + "^" + std::to_string(m + 1));
          if (res_.kb.facts.count(next)) leq(zm, res_.kb.facts.at(next), 1, rule);
          auto triv = std::make_pair(s, "triv:Zmod:" + ps + "^" + std::to_string(m));
          if (res_.kb.facts.count(triv)) {
            Fact& tm = res_.kb.facts.at(triv);
            leq(zm, tm, 1, rule);
            leq(tm, zm, rat_pow(p, m - 1), rule);
          }
        }
      }
  }

  // R5 degree maps and R6 coverings
  void degree_and_covering() {
    for (const auto& r : res_.kb.relations) {
      if (r.kind == Relation::Kind::DegreeMap) {
        for (auto& [key, f] : res_.kb.facts) {
          if (key.first != r.space) continue;
          auto nkey = std::make_pair(r.target, key.second);
          if (!res_.kb.facts.count(nkey)) continue;
          RingSpec ring = parse_ring_spec(key.second);
          auto u = detail::unit_norm(ring, r.degree);
          if (!u || *u == 0) continue;
          Fact& dom = f;
          Fact& cod = res_.kb.facts.at(nkey);
          std::string rule = "R5 degree " + r.degree.str() + " map " + r.space + "->" + r.target +
                             " [" + key.second + "]";
          // |deg|_R * value(target) <= value(space)
          leq(cod, dom, Rat(1) / *u, rule);
        }
      } else if (r.kind == Relation::Kind::Covering) {
        for (auto& [key, f] : res_.kb.facts) {
          if (key.first != r.space) continue;
          auto nkey = std::make_pair(r.target, key.second);
          if (!res_.kb.facts.count(nkey)) continue;
          std::string rule = "R6 " + r.degree.str() + "-sheeted covering " + r.space + "->" +
                             r.target + " [" + key.second + "]";
          leq(f, res_.kb.facts.at(nkey), Rat(r.degree), rule);
        }
      }
    }
  }

  std::optional<int> dim_of(const std::string& s) const {
    for (const auto& r : res_.kb.relations)
      if (r.kind == Relation::Kind::Dim && r.space == s) return r.n;
    return std::nullopt;
  }

  // R7: for rings with all norms <= 1, the product sits between the factor
  // maximum and the binomial multiple of the factor product
  void product() {
    for (const auto& r : res_.kb.relations) {
      if (r.kind != Relation::Kind::Product) continue;
      auto da = dim_of(r.factor_a), db = dim_of(r.factor_b);
      if (!da || !db) continue;
      Rat binom{detail::binomial(*da + *db, *da)};
      for (auto& [key, f] : res_.kb.facts) {
        if (key.first != r.space) continue;
        RingSpec ring = parse_ring_spec(key.second);
        if (!norms_at_most_one(ring)) continue;
        auto ka = std::make_pair(r.factor_a, key.second);
        auto kb = std::make_pair(r.factor_b, key.second);
        if (!res_.kb.facts.count(ka) || !res_.kb.facts.count(kb)) continue;
        Fact& fa = res_.kb.facts.at(ka);
        Fact& fb = res_.kb.facts.at(kb);
        std::string rule =
            "R7 product " + r.factor_a + " x " + r.factor_b + " [" + key.second + "]";
        raise_lo(f, std::max(fa.interval.lo, fb.interval.lo), rule);
        if (fa.interval.hi && fb.interval.hi)
          drop_hi(f, binom * *fa.interval.hi * *fb.interval.hi, rule);
        // each factor embeds isometrically
        if (f.interval.hi) {
          drop_hi(fa, *f.interval.hi, rule);
          drop_hi(fb, *f.interval.hi, rule);
        }
      }
    }
  }

  // R8 Betti lower bounds, R9 closed lower bounds
  void betti_and_closed() {
    for (const auto& r : res_.kb.relations) {
      if (r.kind == Relation::Kind::Betti) {
        std::string rule = "R8 b_" + std::to_string(r.n) + "(" + r.space + "; " + r.field +
                           ") = " + r.betti.str();
        if (r.field == "Q") {
          for (const Int& p : res_.kb.primes)
            raise_lo(fact(r.space, "Qp:" + p.str()), Rat(r.betti), rule);
        } else {
          RingSpec fr = parse_ring_spec(r.field);
          raise_lo(fact(r.space, "Zp:" + fr.p.str()), Rat(r.betti), rule);
        }
      } else if (r.kind == Relation::Kind::Closed || r.kind == Relation::Kind::EvenClosed) {
        bool even = r.kind == Relation::Kind::EvenClosed;
        std::string rule = std::string(even ? "R9 even closed (" : "R9 closed (") + r.space + ")";
        for (const Int& p : res_.kb.primes)
          raise_lo(fact(r.space, "Qp:" + p.str()), even ? Rat(2) : Rat(1), rule);
      }
    }
  }

  bool even_closed(const std::string& s) const {
    for (const auto& r : res_.kb.relations)
      if (r.kind == Relation::Kind::EvenClosed && r.space == s) return true;
    return false;
  }

  // R4: below the threshold (p, or 2p in the even closed case) every cheap
  // Q_p fundamental cycle is integral, so the two values agree.  Sound in
  // both directions: as an interval intersection once hi(Qp) is under the
  // threshold, and unconditionally as lo(Qp) >= min(threshold, lo(Zp)).
  void qp_zp_trigger() {
    for (const auto& s : spaces_)
      for (const Int& p : res_.kb.primes) {
        Fact& qp = fact(s, "Qp:" + p.str());
        Fact& zp = fact(s, "Zp:" + p.str());
        Rat threshold = even_closed(s) ? Rat(2 * p) : Rat(p);
        std::string rule = "R4 Qp/Zp threshold " + to_string(threshold) + " (" + s + ")";
        raise_lo(qp, std::min(threshold, zp.interval.lo), rule);
        if (qp.interval.hi && *qp.interval.hi < threshold) {
          raise_lo(zp, qp.interval.lo, rule);
          if (zp.interval.hi) drop_hi(qp, *zp.interval.hi, rule);
          raise_lo(qp, zp.interval.lo, rule);
          if (qp.interval.hi) drop_hi(zp, *qp.interval.hi, rule);
        }
      }
  }

  // R10: outside the certified elementary divisor primes the weightless F_p,
  // Z_p, Q_p and weightless Q values all coincide
  void almost_all_primes() {
    for (const auto& r : res_.kb.relations) {
      if (r.kind != Relation::Kind::DivisorCert) continue;
      for (const Int& p : res_.kb.primes) {
        if (std::find(r.divisor_primes.begin(), r.divisor_primes.end(), p) !=
            r.divisor_primes.end())
          continue;
        std::vector<Fact*> group{&fact(r.space, "Fp:" + p.str()), &fact(r.space, "Zp:" + p.str()),
                                 &fact(r.space, "Qp:" + p.str()), &fact(r.space, "triv:Q")};
        std::string rule = "R10 divisor certificate (" + r.space + ", p=" + p.str() +
                           " outside {" + [&] {
                             std::string t;
                             for (const Int& q : r.divisor_primes) t += (t.empty() ? "" : ",") + q.str();
                             return t;
                           }() + "})";
        Rat lo = 0;
        std::optional<Rat> hi;
        for (Fact* f : group) {
          lo = std::max(lo, f->interval.lo);
          if (f->interval.hi && (!hi || *f->interval.hi < *hi)) hi = f->interval.hi;
        }
        for (Fact* f : group) {
          raise_lo(*f, lo, rule);
          if (hi) drop_hi(*f, *hi, rule);
        }
      }
    }
  }
};

inline PropagationResult propagate(KnowledgeBase kb) { return Propagator(std::move(kb)).run(); }

struct TableRow {
  std::string space, ring;
  Interval interval;
  std::vector<std::string> trace;
};

/// Deterministic (space, ring) listing of all facts that carry information
/// (a positive lower bound or a finite upper bound).
inline std::vector<TableRow> export_table(const KnowledgeBase& kb) {
  std::vector<TableRow> rows;
  for (const auto& [key, f] : kb.facts) {
    if (f.interval.lo == 0 && !f.interval.hi) continue;
    rows.push_back({f.space, f.ring, f.interval, f.trace});
  }
  std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    return std::tie(a.space, a.ring) < std::tie(b.space, b.ring);
  });
  return rows;
}

namespace detail {

inline const char* relation_kind_name(Relation::Kind k) {
  switch (k) {
    case Relation::Kind::DegreeMap: return "degree_map";
    case Relation::Kind::Covering: return "covering";
    case Relation::Kind::Product: return "product";
    case Relation::Kind::EvenClosed: return "even_closed";
    case Relation::Kind::Closed: return "closed";
    case Relation::Kind::Betti: return "betti";
    case Relation::Kind::Dim: return "dim";
    case Relation::Kind::DivisorCert: return "divisor_certificate";
  }
  return "?";
}

inline Relation::Kind relation_kind_from_name(const std::string& s) {
  for (Relation::Kind k :
       {Relation::Kind::DegreeMap, Relation::Kind::Covering, Relation::Kind::Product,
        Relation::Kind::EvenClosed, Relation::Kind::Closed, Relation::Kind::Betti,
        Relation::Kind::Dim, Relation::Kind::DivisorCert})
    if (s == relation_kind_name(k)) return k;
  throw domain_error("bounds: unknown relation kind '" + s + "'");
}

}  // namespace detail

inline nlohmann::json kb_to_json(const KnowledgeBase& kb) {
  nlohmann::json j;
  j["svol-schema"] = 1;
  j["facts"] = nlohmann::json::array();
  for (const auto& row : export_table(kb)) {
    nlohmann::json f;
    f["space"] = row.space;
    f["ring"] = row.ring;
    f["lo"] = to_string(row.interval.lo);
    if (row.interval.hi) f["hi"] = to_string(*row.interval.hi);
    f["provenance"] = row.trace;
    j["facts"].push_back(std::move(f));
  }
  j["relations"] = nlohmann::json::array();
  for (const auto& r : kb.relations) {
    nlohmann::json e;
    e["kind"] = detail::relation_kind_name(r.kind);
    if (!r.space.empty()) e["space"] = r.space;
    if (!r.target.empty()) e["target"] = r.target;
    if (!r.factor_a.empty()) e["factor_a"] = r.factor_a;
    if (!r.factor_b.empty()) e["factor_b"] = r.factor_b;
    if (r.degree != 0) e["degree"] = r.degree.str();
    if (r.kind == Relation::Kind::Betti || r.kind == Relation::Kind::Dim) e["n"] = r.n;
    if (!r.field.empty()) e["field"] = r.field;
    if (r.kind == Relation::Kind::Betti) e["value"] = r.betti.str();
    if (r.kind == Relation::Kind::DivisorCert) {
      e["primes"] = nlohmann::json::array();
      for (const Int& p : r.divisor_primes) e["primes"].push_back(p.str());
      e["certificate"] = r.certificate;
    }
    j["relations"].push_back(std::move(e));
  }
  j["primes"] = nlohmann::json::array();
  for (const Int& p : kb.primes) j["primes"].push_back(p.str());
  return j;
}

inline KnowledgeBase kb_from_json(const nlohmann::json& j) {
  KnowledgeBase kb;
  for (const auto& f : j.value("facts", nlohmann::json::array())) {
    Fact fact;
    fact.space = f.at("space").get<std::string>();
    fact.ring = parse_ring_spec(f.at("ring").get<std::string>()).tag();
    if (f.count("lo")) fact.interval.lo = parse_rational(f.at("lo").get<std::string>());
    if (f.count("hi")) fact.interval.hi = parse_rational(f.at("hi").get<std::string>());
    if (fact.interval.contradictory())
      throw domain_error("bounds: seed fact with lo > hi at (" + fact.space + ", " + fact.ring + ")");
    for (const auto& line : f.value("provenance", nlohmann::json::array()))
      fact.trace.push_back(line.get<std::string>());
    if (fact.trace.empty()) fact.trace.push_back("seed");
    kb.facts[{fact.space, fact.ring}] = std::move(fact);
  }
  for (const auto& e : j.value("relations", nlohmann::json::array())) {
    Relation r;
    r.kind = detail::relation_kind_from_name(e.at("kind").get<std::string>());
    r.space = e.value("space", "");
    r.target = e.value("target", "");
    r.factor_a = e.value("factor_a", "");
    r.factor_b = e.value("factor_b", "");
    if (e.count("degree")) r.degree = Int(e.at("degree").get<std::string>());
    r.n = e.value("n", 0);
    r.field = e.value("field", "");
    if (e.count("value")) r.betti = Int(e.at("value").get<std::string>());
    for (const auto& p : e.value("primes", nlohmann::json::array()))
      r.divisor_primes.push_back(Int(p.get<std::string>()));
    r.certificate = e.value("certificate", "");
    kb.relations.push_back(std::move(r));
  }
  for (const auto& p : j.value("primes", nlohmann::json::array()))
    kb.primes.push_back(Int(p.get<std::string>()));
  return kb;
}

inline nlohmann::json table_to_json(const std::vector<TableRow>& rows) {
  nlohmann::json j;
  j["svol-schema"] = 1;
  j["table"] = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json e;
    e["space"] = row.space;
    e["ring"] = row.ring;
    e["lo"] = to_string(row.interval.lo);
    if (row.interval.hi) e["hi"] = to_string(*row.interval.hi);
    e["width_zero"] = row.interval.width_zero();
    e["provenance"] = row.trace;
    j["table"].push_back(std::move(e));
  }
  return j;
}

}  // namespace svol
