#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace svol {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Error in the problem domain (bad input data, invalid ring element, ...).
/// The CLI maps this to exit code 1.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

inline Int rat_num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int rat_den(const Rat& x) { return boost::multiprecision::denominator(x); }

/// Deterministic primality test by trial division. Inputs here are desk-scale.
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Int d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// p-adic valuation of a nonzero integer.
inline long padic_valuation_int(Int x, const Int& p) {
  if (x == 0) throw domain_error("padic_valuation_int: zero argument");
  if (x < 0) x = -x;
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

/// p-adic valuation of a rational; nullopt encodes +infinity (x = 0).
inline std::optional<long> padic_valuation(const Rat& x, const Int& p) {
  if (!is_prime(p)) throw domain_error("padic_valuation: p must be prime");
  if (x == 0) return std::nullopt;
  return padic_valuation_int(rat_num(x), p) - padic_valuation_int(rat_den(x), p);
}

inline Int int_pow(Int base, long e) {
  Int r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

/// p^e as an exact rational, e may be negative.
inline Rat rat_pow(const Int& p, long e) {
  if (e >= 0) return Rat(int_pow(p, e));
  return Rat(Int(1), int_pow(p, -e));
}

/// Parses "n" or "n/d", with optional leading '-' (ASCII or U+2212).
inline Rat parse_rational(const std::string& s) {
  std::string t = s;
  // Normalize U+2212 MINUS SIGN to '-'.
  const std::string minus = "\xe2\x88\x92";
  for (std::size_t pos; (pos = t.find(minus)) != std::string::npos;) {
    t.replace(pos, minus.size(), "-");
  }
  if (t.empty()) throw domain_error("parse_rational: empty string");
  try {
    auto slash = t.find('/');
    if (slash == std::string::npos) return Rat(Int(t));
    Int num(t.substr(0, slash));
    Int den(t.substr(slash + 1));
    if (den == 0) throw domain_error("parse_rational: zero denominator");
    return Rat(num, den);
  } catch (const std::exception& e) {
    throw domain_error("parse_rational: bad rational '" + s + "'");
  }
}

inline std::string to_string(const Rat& x) {
  std::string s = rat_num(x).str();
  if (rat_den(x) != 1) s += "/" + rat_den(x).str();
  return s;
}

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

}  // namespace svol
