#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "svol/chain.hpp"
#include "svol/matrix.hpp"

namespace svol {

using Json = nlohmann::json;

/// Finite semi-simplicial set with a marked boundary subcomplex and a
/// distinguished top-dimensional reference cycle.
struct Model {
  int dim = 0;
  std::string label;
  std::vector<std::vector<std::string>> simplices;          // [n] = ordered ids in dim n
  std::map<std::string, std::vector<std::string>> faces;    // n>=1: n+1 face ids
  std::set<std::string> boundary_mark;
  Chain reference_cycle;

  // derived lookup tables, rebuilt by build_index()
  std::map<std::string, int> dim_of;
  std::map<std::string, std::size_t> pos_of;

  void build_index() {
    dim_of.clear();
    pos_of.clear();
    for (int n = 0; n < static_cast<int>(simplices.size()); ++n)
      for (std::size_t i = 0; i < simplices[n].size(); ++i) {
        const std::string& id = simplices[n][i];
        if (dim_of.count(id)) throw domain_error("model: duplicate simplex id '" + id + "'");
        dim_of[id] = n;
        pos_of[id] = i;
      }
  }

  const std::vector<std::string>& ids(int n) const {
    static const std::vector<std::string> empty;
    if (n < 0 || n >= static_cast<int>(simplices.size())) return empty;
    return simplices[n];
  }

  std::size_t count(int n) const { return ids(n).size(); }
};

inline void validate_model(const Model& m) {
  if (static_cast<int>(m.simplices.size()) != m.dim + 1)
    throw domain_error("model: simplex table does not span dimensions 0.." +
                       std::to_string(m.dim));
  for (int n = 1; n <= m.dim; ++n)
    for (const auto& id : m.ids(n)) {
      auto it = m.faces.find(id);
      if (it == m.faces.end()) throw domain_error("model: simplex '" + id + "' has no face list");
      if (static_cast<int>(it->second.size()) != n + 1)
        throw domain_error("model: simplex '" + id + "' needs " + std::to_string(n + 1) +
                           " faces");
      for (const auto& f : it->second) {
        auto d = m.dim_of.find(f);
        if (d == m.dim_of.end() || d->second != n - 1)
          throw domain_error("model: face '" + f + "' of '" + id + "' is not an " +
                             std::to_string(n - 1) + "-simplex");
      }
    }
  // semi-simplicial identity: face_i . face_j = face_{j-1} . face_i for i < j
  for (int n = 2; n <= m.dim; ++n)
    for (const auto& id : m.ids(n)) {
      const auto& fs = m.faces.at(id);
      for (std::size_t j = 1; j < fs.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) {
          const std::string& a = m.faces.at(fs[j])[i];
          const std::string& b = m.faces.at(fs[i])[j - 1];
          if (a != b)
            throw domain_error("model: semi-simplicial identity fails at '" + id +
                               "' (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
        }
    }
  for (const auto& id : m.boundary_mark) {
    if (!m.dim_of.count(id))
      throw domain_error("model: boundary mark '" + id + "' is not a simplex");
    auto it = m.faces.find(id);
    if (it != m.faces.end())
      for (const auto& f : it->second)
        if (!m.boundary_mark.count(f))
          throw domain_error("model: boundary mark not face-closed at '" + id + "'");
  }
  for (const auto& [id, v] : m.reference_cycle.coefficients) {
    auto d = m.dim_of.find(id);
    if (d == m.dim_of.end() || d->second != m.reference_cycle.dimension)
      throw domain_error("model: reference cycle keys unknown simplex '" + id + "'");
  }
}

inline void check_chain(const Model& m, const Chain& c) {
  for (const auto& [id, v] : c.coefficients) {
    auto d = m.dim_of.find(id);
    if (d == m.dim_of.end() || d->second != c.dimension)
      throw domain_error("chain keys unknown " + std::to_string(c.dimension) + "-simplex '" +
                         id + "'");
  }
}

/// Boundary operator: sum_j a_j sum_i (-1)^i face_i(sigma_j), with cancellation.
inline Chain boundary(const Model& m, const Chain& c) {
  check_chain(m, c);
  Chain r{c.dimension - 1, {}};
  if (c.dimension < 1) throw domain_error("boundary: chain dimension must be >= 1");
  for (const auto& [id, a] : c.coefficients) {
    const auto& fs = m.faces.at(id);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      if (i % 2 == 0)
        r.coefficients[fs[i]] += a;
      else
        r.coefficients[fs[i]] -= a;
    }
  }
  return normalized(std::move(r));
}

/// True iff the chain's boundary, reduced into the ring carrier, is supported
/// on the marked boundary subcomplex.
inline bool verify_relative_cycle(const Model& m, const Chain& c, const RingSpec& spec) {
  if (c.dimension == 0) return true;
  Chain b = reduce_chain(spec, boundary(m, reduce_chain(spec, c)));
  for (const auto& [id, v] : b.coefficients)
    if (!m.boundary_mark.count(id)) return false;
  return true;
}

/// Euler characteristic of the full model.
inline Int euler_characteristic(const Model& m) {
  Int chi = 0;
  for (int n = 0; n <= m.dim; ++n) {
    Int c = static_cast<long>(m.count(n));
    chi += (n % 2 == 0) ? c : -c;
  }
  return chi;
}

/// Sub-semi-simplicial set of all iterated faces of the chain's support;
/// boundary marks and the reference cycle transport along the inclusion.
inline Model generated_complex(const Model& m, const Chain& c) {
  check_chain(m, c);
  std::set<std::string> keep;
  std::vector<std::string> stack;
  for (const auto& [id, v] : c.coefficients) stack.push_back(id);
  while (!stack.empty()) {
    std::string id = stack.back();
    stack.pop_back();
    if (!keep.insert(id).second) continue;
    auto it = m.faces.find(id);
    if (it != m.faces.end())
      for (const auto& f : it->second) stack.push_back(f);
  }
  Model x;
  x.dim = c.dimension;
  x.label = m.label.empty() ? "generated" : m.label + "|generated";
  x.simplices.resize(x.dim + 1);
  for (int n = 0; n <= x.dim; ++n)
    for (const auto& id : m.ids(n))
      if (keep.count(id)) x.simplices[n].push_back(id);
  for (const auto& id : keep) {
    auto it = m.faces.find(id);
    if (it != m.faces.end()) x.faces[id] = it->second;
    if (m.boundary_mark.count(id)) x.boundary_mark.insert(id);
  }
  x.reference_cycle = c;
  x.build_index();
  return x;
}

/// Boundary matrix of dim n over the (n)-simplices, columns indexed in the
/// model's id order.  relative = true drops boundary-marked rows and columns.
inline IMat boundary_matrix(const Model& m, int n, bool relative) {
  std::vector<std::string> rows, cols;
  for (const auto& id : m.ids(n - 1))
    if (!relative || !m.boundary_mark.count(id)) rows.push_back(id);
  for (const auto& id : m.ids(n))
    if (!relative || !m.boundary_mark.count(id)) cols.push_back(id);
  std::map<std::string, std::size_t> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = i;
  IMat A(rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const auto& fs = m.faces.at(cols[j]);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      auto it = row_of.find(fs[i]);
      if (it == row_of.end()) continue;
      A.a[it->second][j] += (i % 2 == 0) ? 1 : -1;
    }
  }
  return A;
}

/// Ids indexing the columns of boundary_matrix(m, n, relative).
inline std::vector<std::string> chain_basis(const Model& m, int n, bool relative) {
  std::vector<std::string> cols;
  for (const auto& id : m.ids(n))
    if (!relative || !m.boundary_mark.count(id)) cols.push_back(id);
  return cols;
}

// ---------------------------------------------------------------------------
// JSON wire format
// ---------------------------------------------------------------------------

inline Json chain_to_json(const Chain& c) {
  Json coeffs = Json::object();
  for (const auto& [id, v] : c.coefficients) coeffs[id] = to_string(v);
  return Json{{"coefficients", coeffs}, {"dimension", c.dimension}, {"svol-schema", 1}};
}

inline Chain chain_from_json(const Json& j) {
  Chain c;
  try {
    c.dimension = j.at("dimension").get<int>();
    for (const auto& [id, v] : j.at("coefficients").items())
      c.coefficients[id] = parse_rational(v.get<std::string>());
  } catch (const Json::exception& e) {
    throw domain_error(std::string("chain JSON: ") + e.what());
  }
  return normalized(std::move(c));
}

inline Json model_to_json(const Model& m) {
  Json simp = Json::object();
  for (int n = 0; n <= m.dim; ++n) {
    Json list = Json::array();
    for (const auto& id : m.ids(n)) {
      if (n == 0)
        list.push_back(id);
      else
        list.push_back(Json{{"faces", m.faces.at(id)}, {"id", id}});
    }
    simp[std::to_string(n)] = std::move(list);
  }
  Json ref = Json::object();
  for (const auto& [id, v] : m.reference_cycle.coefficients) ref[id] = to_string(v);
  return Json{{"boundary", std::vector<std::string>(m.boundary_mark.begin(), m.boundary_mark.end())},
              {"dim", m.dim},
              {"label", m.label},
              {"reference_cycle", ref},
              {"simplices", simp},
              {"svol-schema", 1}};
}

inline Model model_from_json(const Json& j) {
  Model m;
  try {
    m.dim = j.at("dim").get<int>();
    if (m.dim < 0) throw domain_error("model JSON: negative dim");
    m.label = j.value("label", std::string{});
    m.simplices.resize(m.dim + 1);
    const Json& simp = j.at("simplices");
    for (int n = 0; n <= m.dim; ++n) {
      auto it = simp.find(std::to_string(n));
      if (it == simp.end()) continue;
      for (const auto& entry : *it) {
        if (n == 0) {
          m.simplices[0].push_back(entry.get<std::string>());
        } else {
          std::string id = entry.at("id").get<std::string>();
          m.simplices[n].push_back(id);
          m.faces[id] = entry.at("faces").get<std::vector<std::string>>();
        }
      }
    }
    for (const auto& id : j.value("boundary", std::vector<std::string>{}))
      m.boundary_mark.insert(id);
    m.reference_cycle.dimension = m.dim;
    if (j.contains("reference_cycle"))
      for (const auto& [id, v] : j.at("reference_cycle").items())
        m.reference_cycle.coefficients[id] = parse_rational(v.get<std::string>());
    m.reference_cycle = normalized(std::move(m.reference_cycle));
  } catch (const Json::exception& e) {
    throw domain_error(std::string("model JSON: ") + e.what());
  }
  m.build_index();
  validate_model(m);
  return m;
}

/// FNV-1a hash of the canonical serialization; the knowledge-base space id
/// for models.
inline std::string content_hash(const Model& m) {
  std::string s = model_to_json(m).dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string("model:") + buf;
}

}  // namespace svol
