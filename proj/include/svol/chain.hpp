#pragma once

#include <map>
#include <string>

#include "svol/rings.hpp"

namespace svol {

/// Sparse chain: finitely supported map simplex-id -> exact rational.
/// std::map keeps the support in lexicographic id order, which makes every
/// downstream output deterministic.
struct Chain {
  int dimension = 0;
  std::map<std::string, Rat> coefficients;

  bool operator==(const Chain& o) const {
    return dimension == o.dimension && coefficients == o.coefficients;
  }

  std::size_t support_size() const { return coefficients.size(); }
  bool is_zero() const { return coefficients.empty(); }
};

/// Drops explicit zeros; every constructor funnels through this.
inline Chain normalized(Chain c) {
  for (auto it = c.coefficients.begin(); it != c.coefficients.end();) {
    if (it->second == 0)
      it = c.coefficients.erase(it);
    else
      ++it;
  }
  return c;
}

inline Chain chain_add(const Chain& a, const Chain& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.dimension != b.dimension) throw domain_error("chain_add: dimension mismatch");
  Chain r = a;
  for (const auto& [id, v] : b.coefficients) r.coefficients[id] += v;
  return normalized(std::move(r));
}

inline Chain chain_scale(const Rat& s, const Chain& a) {
  if (s == 0) return Chain{a.dimension, {}};
  Chain r = a;
  for (auto& [id, v] : r.coefficients) v *= s;
  return r;
}

/// Reduces every coefficient into the ring's carrier (throws on
/// non-representable coefficients, e.g. 1/p over Z_p).
inline Chain reduce_chain(const RingSpec& spec, const Chain& c) {
  Chain r{c.dimension, {}};
  for (const auto& [id, v] : c.coefficients) {
    Rat w = reduce_to_carrier(spec, v);
    if (w != 0) r.coefficients[id] = w;
  }
  return r;
}

/// Ring-weighted l1-norm: sum of coefficient seminorms.
inline Rat chain_norm(const RingSpec& spec, const Chain& c) {
  Rat s = 0;
  for (const auto& [id, v] : c.coefficients) s += seminorm(spec, v);
  return s;
}

}  // namespace svol
