#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "svol/cross.hpp"
#include "svol/models.hpp"

using namespace svol;

namespace {

Chain random_chain(const Model& m, int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  Chain c{n, {}};
  for (const auto& id : m.ids(n)) {
    int v = coeff(rng);
    if (v != 0) c.coefficients[id] = Rat(v);
  }
  return c;
}

}  // namespace

TEST_CASE("boundary of a single triangle has alternating signs") {
  Model t = torus_model();
  Chain c{2, {{"s1", Rat(1)}}};
  Chain b = boundary(t, c);
  // faces of s1 are (eB, eD, eA): + - +
  CHECK(b.coefficients.at("eB") == 1);
  CHECK(b.coefficients.at("eD") == -1);
  CHECK(b.coefficients.at("eA") == 1);
}

TEST_CASE("torus reference cycle is closed") {
  Model t = torus_model();
  CHECK(boundary(t, t.reference_cycle).is_zero());
}

TEST_CASE("boundary of boundary vanishes on random chains") {
  std::mt19937 rng(7);
  std::vector<Model> models{torus_model(), sphere_model(2), sphere_model(3),
                            surface_cycle(2, 1).first};
  for (const auto& m : models)
    for (int n = 2; n <= m.dim; ++n)
      for (int trial = 0; trial < 20; ++trial) {
        Chain c = random_chain(m, n, rng);
        CHECK(boundary(m, boundary(m, c)).is_zero());
      }
}

TEST_CASE("relative cycle verification") {
  Model t = torus_model();
  CHECK(verify_relative_cycle(t, t.reference_cycle, parse_ring_spec("Z")));
  CHECK_FALSE(verify_relative_cycle(t, Chain{2, {{"s1", Rat(1)}}}, parse_ring_spec("Z")));
  auto [disk, dcycle] = surface_cycle(0, 1);
  CHECK(verify_relative_cycle(disk, dcycle, parse_ring_spec("Z")));
  // denominators divisible by p are rejected for integral carriers
  CHECK_THROWS_AS(
      verify_relative_cycle(t, Chain{2, {{"s1", Rat(1, 2)}, {"s2", Rat(-1, 2)}}},
                            parse_ring_spec("Zp:2")),
      domain_error);
}

TEST_CASE("generated complex of the torus cycle") {
  Model t = torus_model();
  Model x = generated_complex(t, t.reference_cycle);
  CHECK(x.count(2) == 2);
  CHECK(x.count(1) == 3);
  CHECK(x.count(0) == 1);
  // idempotent up to the label suffix
  Model y = generated_complex(x, x.reference_cycle);
  CHECK(y.simplices == x.simplices);
  CHECK(y.faces == x.faces);
}

TEST_CASE("generated complex of a single face of the 3-sphere model") {
  Model s = sphere_model(3);
  std::string id = s.ids(3).front();
  Chain c{3, {{id, Rat(1)}}};
  Model x = generated_complex(s, c);
  CHECK(x.count(3) == 1);
  CHECK(x.count(2) == 4);
}

TEST_CASE("generated complex of the genus 2 cycle has 6 triangles") {
  auto [m, c] = surface_cycle(2, 0);
  Model x = generated_complex(m, c);
  CHECK(x.count(2) == 6);
}

TEST_CASE("transfer along cyclic covers") {
  CoveringData cov = cyclic_cover(1, 2);
  Chain t = transfer(cov, cov.base.reference_cycle);
  CHECK(t.support_size() == 4);
  CHECK(chain_norm(parse_ring_spec("Z"), t) == 4);
  CHECK(verify_relative_cycle(cov.total, t, parse_ring_spec("Z")));
  CHECK(transfer(cov, Chain{2, {}}).is_zero());
}

TEST_CASE("transfer scales every seminorm by the sheet count") {
  std::mt19937 rng(11);
  CoveringData cov = cyclic_cover(2, 3);
  for (std::string ring : {"Z", "Zp:2", "Zp:5", "triv:Z"}) {
    RingSpec r = parse_ring_spec(ring);
    for (int trial = 0; trial < 10; ++trial) {
      Chain c = random_chain(cov.base, 2, rng);
      CHECK(chain_norm(r, transfer(cov, c)) == Rat(cov.sheets) * chain_norm(r, c));
    }
  }
}

TEST_CASE("covering validation rejects broken projections") {
  CoveringData cov = cyclic_cover(1, 3);
  validate_covering(cov);
  CoveringData broken = cov;
  broken.projection.begin()->second = "nonsense";
  CHECK_THROWS_AS(validate_covering(broken), domain_error);
  CoveringData wrong_sheets = cov;
  wrong_sheets.sheets = 2;
  CHECK_THROWS_AS(validate_covering(wrong_sheets), domain_error);
}

TEST_CASE("circle times circle is a torus") {
  Model c = circle_model();
  auto [prod, cross] = cross_product(c, c.reference_cycle, c, c.reference_cycle);
  CHECK(prod.dim == 2);
  CHECK(prod.count(0) == 1);
  CHECK(prod.count(1) == 3);
  CHECK(prod.count(2) == 2);
  CHECK(cross.support_size() == 2);
  CHECK(boundary(prod, cross).is_zero());
  CHECK(prod.reference_cycle == cross);
  HomologySummary h = homology(prod, parse_ring_spec("Z"));
  CHECK(h.at(0).rank == 1);
  CHECK(h.at(1).rank == 2);
  CHECK(h.at(2).rank == 1);
}

TEST_CASE("cross product with a vertex is the identity on chains") {
  Model pt;
  pt.dim = 0;
  pt.label = "pt";
  pt.simplices = {{"x"}};
  pt.reference_cycle = Chain{0, {{"x", Rat(1)}}};
  pt.build_index();
  validate_model(pt);
  Model t = torus_model();
  auto [prod, cross] = cross_product(t, t.reference_cycle, pt, pt.reference_cycle);
  CHECK(cross.support_size() == t.reference_cycle.support_size());
  CHECK(boundary(prod, cross).is_zero());
  std::vector<Rat> coeffs, expect;
  for (const auto& [id, v] : cross.coefficients) coeffs.push_back(v);
  for (const auto& [id, v] : t.reference_cycle.coefficients) expect.push_back(v);
  CHECK(coeffs == expect);
}

TEST_CASE("shuffle support bound for surface times circle") {
  auto t = torus_model();
  Model c = circle_model();
  auto [prod, cross] = cross_product(t, t.reference_cycle, c, c.reference_cycle);
  CHECK(cross.support_size() <= 3 * 2 * 1);  // C(3,2) * |a| * |b|
  CHECK(boundary(prod, cross).is_zero());
  for (std::string ring : {"Z", "Zp:2", "triv:Z"}) {
    RingSpec r = parse_ring_spec(ring);
    CHECK(chain_norm(r, cross) <= Rat(3) * chain_norm(r, t.reference_cycle) *
                                      chain_norm(r, c.reference_cycle));
  }
}

TEST_CASE("model JSON round trip") {
  for (Model m : {torus_model(), sphere_model(2), surface_cycle(1, 1).first}) {
    Json j = model_to_json(m);
    CHECK(j.at("svol-schema") == 1);
    Model back = model_from_json(j);
    CHECK(back.simplices == m.simplices);
    CHECK(back.faces == m.faces);
    CHECK(back.boundary_mark == m.boundary_mark);
    CHECK(back.reference_cycle == m.reference_cycle);
    CHECK(content_hash(back) == content_hash(m));
  }
}

TEST_CASE("chain JSON round trip keeps exact rationals") {
  Chain c{2, {{"a", Rat(-7, 3)}, {"b", Rat(5)}}};
  Chain back = chain_from_json(chain_to_json(c));
  CHECK(back == c);
}

TEST_CASE("model validation rejects broken face structure") {
  Model t = torus_model();
  t.faces["s1"] = {"eB", "eD"};  // wrong arity
  CHECK_THROWS_AS(validate_model(t), domain_error);
  Model t2 = torus_model();
  t2.boundary_mark = {"eA"};  // not face closed: vertex missing
  CHECK_THROWS_AS(validate_model(t2), domain_error);
}
