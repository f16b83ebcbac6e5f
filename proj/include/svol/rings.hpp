#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "svol/rational.hpp"

namespace svol {

enum class Carrier { Int, Rat, FiniteField, ModPrimePower };
enum class SeminormKind { Archimedean, PAdic, Trivial, QuotientPAdic };

/// A seminormed coefficient ring, identified by a parseable tag.
///
/// Carriers Int/Rat hold exact rationals; FiniteField(p) and
/// ModPrimePower(p,m) hold canonical residues in [0, p^m).  The p-adic
/// seminorm on Int/Rat realizes the values of Z_p and Q_p (Z resp. Q is
/// p-adically dense in them, so model minima agree).
struct RingSpec {
  Carrier carrier = Carrier::Int;
  SeminormKind seminorm = SeminormKind::Archimedean;
  Int p = 0;   // prime, when applicable
  int m = 0;   // exponent, when applicable

  Int modulus() const { return int_pow(p, carrier == Carrier::FiniteField ? 1 : m); }

  bool operator==(const RingSpec& o) const {
    return carrier == o.carrier && seminorm == o.seminorm && p == o.p && m == o.m;
  }

  /// Canonical tag, re-parseable by parse_ring_spec.
  std::string tag() const {
    switch (seminorm) {
      case SeminormKind::Archimedean:
        return carrier == Carrier::Int ? "Z" : "Q";
      case SeminormKind::PAdic:
        return (carrier == Carrier::Int ? "Zp:" : "Qp:") + p.str();
      case SeminormKind::QuotientPAdic:
        return "Zmod:" + p.str() + "^" + std::to_string(m);
      case SeminormKind::Trivial:
        switch (carrier) {
          case Carrier::Int: return "triv:Z";
          case Carrier::Rat: return "triv:Q";
          case Carrier::FiniteField: return "Fp:" + p.str();
          case Carrier::ModPrimePower:
            return "triv:Zmod:" + p.str() + "^" + std::to_string(m);
        }
    }
    return "?";
  }
};

namespace detail {
inline Int parse_prime(const std::string& s, const std::string& tag) {
  Int p;
  try {
    p = Int(s);
  } catch (const std::exception&) {
    throw domain_error("parse_ring_spec: malformed tag '" + tag + "'");
  }
  if (!is_prime(p)) throw domain_error("parse_ring_spec: " + s + " is not prime in '" + tag + "'");
  return p;
}
}  // namespace detail

/// Grammar: Z | Q | R | Zp:<p> | Qp:<p> | Fp:<p> | Zmod:<p>^<m> | triv:<inner>.
/// "R" is an alias for exact-rational archimedean computation.
inline RingSpec parse_ring_spec(const std::string& tag) {
  RingSpec r;
  if (tag == "Z") {
    r.carrier = Carrier::Int;
    r.seminorm = SeminormKind::Archimedean;
    return r;
  }
  if (tag == "Q" || tag == "R") {
    r.carrier = Carrier::Rat;
    r.seminorm = SeminormKind::Archimedean;
    return r;
  }
  if (tag.rfind("triv:", 0) == 0) {
    RingSpec inner = parse_ring_spec(tag.substr(5));
    inner.seminorm = SeminormKind::Trivial;
    return inner;
  }
  if (tag.rfind("Zp:", 0) == 0) {
    r.carrier = Carrier::Int;
    r.seminorm = SeminormKind::PAdic;
    r.p = detail::parse_prime(tag.substr(3), tag);
    return r;
  }
  if (tag.rfind("Qp:", 0) == 0) {
    r.carrier = Carrier::Rat;
    r.seminorm = SeminormKind::PAdic;
    r.p = detail::parse_prime(tag.substr(3), tag);
    return r;
  }
  if (tag.rfind("Fp:", 0) == 0) {
    r.carrier = Carrier::FiniteField;
    r.seminorm = SeminormKind::Trivial;
    r.p = detail::parse_prime(tag.substr(3), tag);
    r.m = 1;
    return r;
  }
  if (tag.rfind("Zmod:", 0) == 0) {
    std::string rest = tag.substr(5);
    auto caret = rest.find('^');
    if (caret == std::string::npos)
      throw domain_error("parse_ring_spec: malformed tag '" + tag + "' (expected Zmod:<p>^<m>)");
    r.carrier = Carrier::ModPrimePower;
    r.seminorm = SeminormKind::QuotientPAdic;
    r.p = detail::parse_prime(rest.substr(0, caret), tag);
    try {
      r.m = std::stoi(rest.substr(caret + 1));
    } catch (const std::exception&) {
      throw domain_error("parse_ring_spec: malformed tag '" + tag + "'");
    }
    if (r.m < 1) throw domain_error("parse_ring_spec: exponent must be positive in '" + tag + "'");
    return r;
  }
  throw domain_error("parse_ring_spec: unknown tag '" + tag + "'");
}

/// Reduces an exact rational into the spec's carrier: identity for Int/Rat
/// (Int rejects non-integers), canonical residue in [0, p^m) for the modular
/// carriers.  Throws if the denominator is not invertible.
inline Rat reduce_to_carrier(const RingSpec& spec, const Rat& x) {
  switch (spec.carrier) {
    case Carrier::Rat:
      return x;
    case Carrier::Int:
      if (rat_den(x) != 1) throw domain_error("coefficient " + to_string(x) + " not integral");
      return x;
    case Carrier::FiniteField:
    case Carrier::ModPrimePower: {
      Int q = spec.modulus();
      Int den = rat_den(x);
      if (boost::multiprecision::gcd(den, spec.p) != 1)
        throw domain_error("coefficient " + to_string(x) + " has denominator divisible by " +
                           spec.p.str());
      // den is invertible mod q; extended Euclid for the inverse
      Int d = den % q;
      if (d < 0) d += q;
      Int t0 = 0, t1 = 1, r0 = q, r1 = d;
      while (r1 != 0) {
        Int qt = r0 / r1;
        Int tmp = r0 - qt * r1;
        r0 = r1; r1 = tmp;
        tmp = t0 - qt * t1;
        t0 = t1; t1 = tmp;
      }
      Int dinv = t0 % q;
      Int v = (rat_num(x) % q) * dinv % q;
      if (v < 0) v += q;
      return Rat(v);
    }
  }
  throw domain_error("reduce_to_carrier: bad spec");
}

/// Seminorm of a (carrier-valid) element, as an exact nonnegative rational.
inline Rat seminorm(const RingSpec& spec, const Rat& x0) {
  Rat x = reduce_to_carrier(spec, x0);
  switch (spec.seminorm) {
    case SeminormKind::Archimedean:
      return rat_abs(x);
    case SeminormKind::Trivial:
      return x == 0 ? Rat(0) : Rat(1);
    case SeminormKind::PAdic: {
      auto v = padic_valuation(x, spec.p);
      if (!v) return Rat(0);
      return rat_pow(spec.p, -*v);
    }
    case SeminormKind::QuotientPAdic: {
      // |x| = p^{-r}, r = min(v_p(lift), m); zero residue has r >= m -> 0.
      if (x == 0) return Rat(0);
      long r = padic_valuation_int(rat_num(x), spec.p);
      if (r >= spec.m) return Rat(0);
      return rat_pow(spec.p, -r);
    }
  }
  throw domain_error("seminorm: bad spec");
}

/// True if every element norm is <= 1 (hypothesis of the maximality and
/// product estimates).
inline bool norms_at_most_one(const RingSpec& spec) {
  switch (spec.seminorm) {
    case SeminormKind::Archimedean: return false;
    case SeminormKind::Trivial: return true;
    case SeminormKind::QuotientPAdic: return true;
    case SeminormKind::PAdic: return spec.carrier == Carrier::Int;
  }
  return false;
}

/// One axiom violation found by check_seminorm_axioms.
struct AxiomViolation {
  std::string axiom;  // "unit", "submultiplicative", "triangle"
  Rat s, t;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  std::size_t pairs_checked = 0;
  bool ok() const { return violations.empty(); }
};

using NormFn = std::function<Rat(const Rat&)>;

/// Checks |1|=1, |st| <= |s||t| and |s+t| <= |s|+|t| on the sampled pairs.
/// The norm is passed as a callable so tests can inject broken norms.
inline AxiomReport check_seminorm_axioms(const NormFn& norm,
                                         const std::vector<std::pair<Rat, Rat>>& samples) {
  AxiomReport rep;
  if (norm(Rat(1)) != 1) {
    rep.violations.push_back({"unit", Rat(1), Rat(1), "|1| = " + to_string(norm(Rat(1)))});
  }
  for (const auto& [s, t] : samples) {
    ++rep.pairs_checked;
    if (norm(s * t) > norm(s) * norm(t)) {
      rep.violations.push_back({"submultiplicative", s, t,
                                "|st| = " + to_string(norm(s * t)) + " > " +
                                    to_string(norm(s) * norm(t))});
    }
    if (norm(s + t) > norm(s) + norm(t)) {
      rep.violations.push_back({"triangle", s, t,
                                "|s+t| = " + to_string(norm(s + t)) + " > " +
                                    to_string(norm(s) + norm(t))});
    }
  }
  return rep;
}

inline AxiomReport check_seminorm_axioms(const RingSpec& spec,
                                         const std::vector<std::pair<Rat, Rat>>& samples) {
  return check_seminorm_axioms([&spec](const Rat& x) { return seminorm(spec, x); }, samples);
}

}  // namespace svol
