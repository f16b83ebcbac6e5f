#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "svol/bounds.hpp"
#include "svol/covering.hpp"
#include "svol/cross.hpp"
#include "svol/selftest.hpp"

namespace svol::cli {

// exit codes: 0 ok, 1 domain error, 2 usage error

inline Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw domain_error("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

inline void emit(const Json& j, const std::string& format, const std::string& out_path,
                 const std::function<void(std::ostream&)>& text) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw domain_error("cannot write " + out_path);
    os = &file;
  }
  if (format == "json")
    *os << j.dump(2) << "\n";
  else
    text(*os);
}

inline int threads_from_env() {
  const char* env = std::getenv("SVOL_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n >= 1 ? n : 1;
}

inline int run(int argc, char** argv) {
  CLI::App app{"model-restricted simplicial volumes over seminormed rings"};
  app.require_subcommand(1);
  app.fallthrough();  // inherited: lets --format appear after the subcommand
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
  (void)threads_from_env();  // minimization is single-threaded; the env var caps, never raises

  // norm
  std::string ring_tag, value_str;
  auto* norm = app.add_subcommand("norm", "seminorm of a single ring element");
  norm->add_option("--ring", ring_tag)->required();
  norm->add_option("--value", value_str)->required();

  // minimize
  std::string model_path, class_path, strategy = "auto";
  long budget_nodes = 2000000;
  bool any_witness = false;
  auto* minimize = app.add_subcommand("minimize", "minimal representative norm within a model");
  minimize->add_option("--model", model_path)->required();
  minimize->add_option("--ring", ring_tag)->required();
  minimize->add_option("--class", class_path);
  minimize->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"auto", "exhaustive", "bnb", "lp"}));
  minimize->add_option("--budget-nodes", budget_nodes);
  minimize->add_flag("--any-witness", any_witness);

  // generate
  auto* generate = app.add_subcommand("generate", "built-in model constructors");
  generate->require_subcommand(1);
  int genus = 1, boundary = 0, sphere_dim = 2, sheets = 2;
  std::string out_path;
  auto* g_surface = generate->add_subcommand("surface", "surface fundamental cycle model");
  g_surface->add_option("--genus", genus)->required();
  g_surface->add_option("--boundary", boundary)->required();
  g_surface->add_option("-o,--out", out_path);
  auto* g_circle = generate->add_subcommand("circle", "one-cell circle");
  g_circle->add_option("-o,--out", out_path);
  auto* g_sphere = generate->add_subcommand("sphere", "sphere model");
  g_sphere->add_option("--dim", sphere_dim);
  g_sphere->add_option("-o,--out", out_path);
  auto* g_torus = generate->add_subcommand("torus", "two-triangle torus");
  g_torus->add_option("-o,--out", out_path);
  auto* g_cover = generate->add_subcommand("cover", "cyclic cover of a closed surface");
  g_cover->add_option("--genus", genus)->required();
  g_cover->add_option("--sheets", sheets)->required();
  g_cover->add_option("-o,--out", out_path);

  // verify
  auto* verify = app.add_subcommand("verify", "relative fundamental cycle check");
  verify->add_option("--model", model_path)->required();
  verify->add_option("--ring", ring_tag)->required();
  verify->add_option("--class", class_path);

  // homology
  bool relative = false;
  std::string complex_path;
  auto* homology_cmd = app.add_subcommand("homology", "homology of a model or raw complex");
  homology_cmd->add_option("--model", model_path);
  homology_cmd->add_option("--complex", complex_path);
  homology_cmd->add_option("--ring", ring_tag)->required();
  homology_cmd->add_flag("--relative", relative);

  // certify-surface
  std::string field_tag = "Q";
  auto* certify = app.add_subcommand("certify-surface", "surface minimality certificate");
  certify->add_option("--model", model_path)->required();
  certify->add_option("--genus", genus)->required();
  certify->add_option("--boundary", boundary)->required();
  certify->add_option("--field", field_tag);
  certify->add_option("--class", class_path);

  // scaling
  std::string p_str = "2";
  int max_m = 4;
  auto* scaling = app.add_subcommand("scaling", "p-adic scaling sequence");
  scaling->add_option("--model", model_path)->required();
  scaling->add_option("--p", p_str)->required();
  scaling->add_option("--max-m", max_m);
  scaling->add_option("--class", class_path);

  // simultaneous
  std::vector<std::string> prime_list;
  int precision = 2;
  auto* simultaneous = app.add_subcommand("simultaneous", "CRT-combined near-minimal cycle");
  simultaneous->add_option("--model", model_path)->required();
  simultaneous->add_option("--primes", prime_list)->required()->delimiter(',');
  simultaneous->add_option("--precision", precision);
  simultaneous->add_option("--class", class_path);

  // stream
  long stream_budget = 100000;
  auto* stream = app.add_subcommand("stream", "anytime upper-bound stream");
  stream->add_option("--model", model_path)->required();
  stream->add_option("--ring", ring_tag)->required();
  stream->add_option("--budget", stream_budget);
  stream->add_option("--class", class_path);

  // bounds
  std::string facts_path, table_path;
  auto* bounds_cmd = app.add_subcommand("bounds", "fixpoint inequality propagation");
  bounds_cmd->add_option("--facts", facts_path)->required();
  bounds_cmd->add_option("--out", table_path);

  // stable-surface
  int k_max = 64;
  auto* stable = app.add_subcommand("stable-surface", "cyclic-cover volume sequence");
  stable->add_option("--genus", genus)->required();
  stable->add_option("--k-max", k_max);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto load_model = [&]() { return model_from_json(load_json(model_path)); };
    auto load_class = [&](const Model& m) {
      return class_path.empty() ? m.reference_cycle : chain_from_json(load_json(class_path));
    };

    if (*norm) {
      RingSpec ring = parse_ring_spec(ring_tag);
      Rat v = seminorm(ring, parse_rational(value_str));
      Json j;
      j["svol-schema"] = 1;
      j["ring"] = ring.tag();
      j["value"] = value_str;
      j["norm"] = to_string(v);
      emit(j, format, "", [&](std::ostream& os) { os << to_string(v) << "\n"; });
    } else if (*minimize) {
      Model m = load_model();
      RingSpec ring = parse_ring_spec(ring_tag);
      MinimizeOptions opt;
      opt.budget_nodes = budget_nodes;
      opt.any_witness = any_witness;
      if (strategy == "exhaustive") opt.strategy = Strategy::Exhaustive;
      if (strategy == "bnb") opt.strategy = Strategy::BranchAndBound;
      if (strategy == "lp") opt.strategy = Strategy::LpExact;
      MinimizationResult r = minimal_norm(m, load_class(m), ring, opt);
      Json j;
      j["svol-schema"] = 1;
      j["model"] = content_hash(m);
      j["ring"] = ring.tag();
      j["value"] = to_string(r.value);
      j["optimal"] = r.optimal;
      j["nodes"] = r.nodes;
      j["witness"] = chain_to_json(r.witness);
      emit(j, format, "", [&](std::ostream& os) {
        os << "value " << to_string(r.value) << (r.optimal ? "" : " (upper bound only)")
           << ", support " << r.witness.support_size() << "\n";
      });
    } else if (*generate) {
      Model m;
      if (*g_surface)
        m = surface_cycle(genus, boundary).first;
      else if (*g_circle)
        m = circle_model();
      else if (*g_sphere)
        m = sphere_model(sphere_dim);
      else if (*g_torus)
        m = torus_model();
      else
        m = cyclic_cover(genus, sheets).total;
      Json j = model_to_json(m);
      emit(j, out_path.empty() ? format : "json", out_path, [&](std::ostream& os) {
        os << m.label << ": dim " << m.dim;
        for (int n = 0; n <= m.dim; ++n) os << ", " << m.count(n) << " cells of dim " << n;
        os << "\n";
      });
    } else if (*verify) {
      Model m = load_model();
      RingSpec ring = parse_ring_spec(ring_tag);
      Chain c = load_class(m);
      bool cycle = verify_relative_cycle(m, c, ring);
      bool fundamental = cycle && verify_fundamental_cycle(m, c, ring);
      Json j;
      j["svol-schema"] = 1;
      j["relative_cycle"] = cycle;
      j["fundamental"] = fundamental;
      emit(j, format, "", [&](std::ostream& os) {
        os << (fundamental ? "fundamental relative cycle"
                           : cycle ? "relative cycle, not fundamental" : "not a relative cycle")
           << "\n";
      });
      return fundamental ? 0 : 1;
    } else if (*homology_cmd) {
      RingSpec ring = parse_ring_spec(ring_tag);
      HomologySummary h;
      if (!complex_path.empty())
        h = homology_of_complex(raw_complex_from_json(load_json(complex_path)), ring);
      else if (!model_path.empty())
        h = homology(load_model(), ring, relative);
      else
        throw domain_error("homology: need --model or --complex");
      Json j;
      j["svol-schema"] = 1;
      j["ring"] = h.ring_tag;
      j["degrees"] = Json::array();
      for (const auto& d : h.degrees) {
        Json e;
        e["degree"] = d.degree;
        e["rank"] = d.rank;
        e["torsion"] = Json::array();
        for (const Int& t : d.torsion) e["torsion"].push_back(t.str());
        j["degrees"].push_back(e);
      }
      emit(j, format, "", [&](std::ostream& os) {
        for (const auto& d : h.degrees) {
          os << "H_" << d.degree << ": rank " << d.rank;
          for (const Int& t : d.torsion) os << " + Z/" << t.str();
          os << "\n";
        }
      });
    } else if (*certify) {
      Model m = load_model();
      Chain c = load_class(m);
      SurfaceCertificate cert =
          surface_minimality_certificate(m, c, genus, boundary, parse_ring_spec(field_tag));
      Json j;
      j["svol-schema"] = 1;
      j["support"] = cert.k;
      j["kernel_dim"] = cert.kernel_dim;
      j["lower_bound"] = cert.derived_lower_bound;
      j["reducible"] = cert.reducible;
      if (cert.smaller_witness) j["smaller_witness"] = chain_to_json(*cert.smaller_witness);
      j["steps"] = cert.steps;
      j["passed"] = cert.passed;
      emit(j, format, "", [&](std::ostream& os) {
        for (const auto& s : cert.steps) os << s << "\n";
        os << (cert.passed ? "certified minimal" : cert.reducible ? "REDUCIBLE" : "NOT certified")
           << "\n";
      });
      return cert.passed ? 0 : 1;
    } else if (*scaling) {
      Model m = load_model();
      auto seq = scaling_sequence(m, load_class(m), Int(p_str), max_m);
      Json j;
      j["svol-schema"] = 1;
      j["p"] = p_str;
      j["terms"] = Json::array();
      for (auto& [e, v] : seq) {
        Json t;
        t["m"] = e;
        t["value"] = to_string(v);
        j["terms"].push_back(t);
      }
      j["stabilized"] = to_string(seq.back().second);
      emit(j, format, "", [&](std::ostream& os) {
        for (auto& [e, v] : seq) os << "m=" << e << " " << to_string(v) << "\n";
      });
    } else if (*simultaneous) {
      Model m = load_model();
      Chain c = load_class(m);
      std::map<Int, Chain> witnesses;
      for (const auto& ps : prime_list) {
        Int p(ps);
        witnesses[p] = minimal_norm(m, c, parse_ring_spec("Zp:" + p.str())).witness;
      }
      auto sim = simultaneous_cycle(witnesses, precision);
      Json j;
      j["svol-schema"] = 1;
      j["coefficients"] = Json::object();
      for (const auto& [p, a] : sim.coefficients) j["coefficients"][p.str()] = a.str();
      j["cycle"] = chain_to_json(sim.cycle);
      for (const auto& [p, w] : witnesses)
        j["norms"][p.str()] = to_string(chain_norm(parse_ring_spec("Zp:" + p.str()), sim.cycle));
      emit(j, format, "", [&](std::ostream& os) {
        for (const auto& [p, a] : sim.coefficients) os << "a_" << p.str() << " = " << a.str() << "\n";
      });
    } else if (*stream) {
      Model m = load_model();
      auto items = upper_bound_stream(m, load_class(m), parse_ring_spec(ring_tag), stream_budget);
      Json j;
      j["svol-schema"] = 1;
      j["bounds"] = Json::array();
      for (const auto& it : items) {
        Json e;
        e["bound"] = to_string(it.bound);
        e["candidates"] = it.candidates;
        e["witness"] = chain_to_json(it.witness);
        j["bounds"].push_back(e);
      }
      emit(j, format, "", [&](std::ostream& os) {
        for (const auto& it : items)
          os << to_string(it.bound) << " after " << it.candidates << " candidates\n";
      });
    } else if (*bounds_cmd) {
      KnowledgeBase kb = kb_from_json(load_json(facts_path));
      PropagationResult r = propagate(kb);
      if (r.contradiction) {
        std::cerr << r.report;
        return 1;
      }
      Json j = table_to_json(export_table(r.kb));
      emit(j, table_path.empty() ? format : "json", table_path, [&](std::ostream& os) {
        for (const auto& row : export_table(r.kb))
          os << row.space << " | " << row.ring << " | [" << to_string(row.interval.lo) << ", "
             << (row.interval.hi ? to_string(*row.interval.hi) : "inf") << "]\n";
      });
    } else if (*stable) {
      StableSequence s = stable_volume_surface(genus, k_max);
      Json j;
      j["svol-schema"] = 1;
      j["terms"] = Json::array();
      for (auto& [k, v] : s.terms) {
        Json t;
        t["k"] = k;
        t["value"] = to_string(v);
        j["terms"].push_back(t);
      }
      j["infimum"] = to_string(s.infimum);
      j["limit"] = to_string(s.limit);
      emit(j, format, "", [&](std::ostream& os) {
        os << "infimum " << to_string(s.infimum) << ", limit " << to_string(s.limit) << "\n";
      });
    } else if (*selftest) {
      auto results = run_acceptance();
      bool all = true;
      Json j;
      j["svol-schema"] = 1;
      j["criteria"] = Json::array();
      for (const auto& r : results) {
        all = all && r.passed;
        Json e;
        e["number"] = r.number;
        e["title"] = r.title;
        e["passed"] = r.passed;
        e["detail"] = r.detail;
        j["criteria"].push_back(e);
        if (format != "json")
          std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.number << ": " << r.title
                    << " (" << r.detail << ")\n";
      }
      if (format == "json") std::cout << j.dump(2) << "\n";
      return all ? 0 : 1;
    }
    return 0;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace svol::cli
