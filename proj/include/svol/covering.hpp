#pragma once

#include <map>
#include <string>

#include "svol/model.hpp"

namespace svol {

/// Finite covering presented combinatorially: a projection on simplex ids
/// commuting with all face maps, every base simplex having exactly `sheets`
/// preimages in each dimension.
struct CoveringData {
  Model total;
  Model base;
  std::map<std::string, std::string> projection;  // total id -> base id
  long sheets = 1;
};

inline void validate_covering(const CoveringData& cov) {
  std::map<std::string, long> preimages;
  for (int n = 0; n <= cov.total.dim; ++n)
    for (const auto& id : cov.total.ids(n)) {
      auto it = cov.projection.find(id);
      if (it == cov.projection.end())
        throw domain_error("covering: no projection for '" + id + "'");
      const std::string& pid = it->second;
      auto d = cov.base.dim_of.find(pid);
      if (d == cov.base.dim_of.end() || d->second != n)
        throw domain_error("covering: projection of '" + id + "' is not a base " +
                           std::to_string(n) + "-simplex");
      ++preimages[pid];
      if (n >= 1) {
        const auto& tf = cov.total.faces.at(id);
        const auto& bf = cov.base.faces.at(pid);
        for (std::size_t i = 0; i < tf.size(); ++i)
          if (cov.projection.at(tf[i]) != bf[i])
            throw domain_error("covering: projection does not commute with face " +
                               std::to_string(i) + " of '" + id + "'");
      }
    }
  for (int n = 0; n <= cov.base.dim; ++n)
    for (const auto& id : cov.base.ids(n))
      if (preimages[id] != cov.sheets)
        throw domain_error("covering: '" + id + "' has " + std::to_string(preimages[id]) +
                           " preimages, expected " + std::to_string(cov.sheets));
}

/// Transfer: each base simplex contributes its coefficient on every preimage.
inline Chain transfer(const CoveringData& cov, const Chain& c) {
  check_chain(cov.base, c);
  Chain r{c.dimension, {}};
  for (const auto& id : cov.total.ids(c.dimension)) {
    auto it = c.coefficients.find(cov.projection.at(id));
    if (it != c.coefficients.end()) r.coefficients[id] = it->second;
  }
  return normalized(std::move(r));
}

}  // namespace svol
