#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "svol/homology.hpp"
#include "svol/models.hpp"
#include "svol/selftest.hpp"

using namespace svol;

namespace {

std::size_t expected_support(int g, int b) {
  if (g == 0 && b == 1) return 1;
  if (g == 0 && b == 2) return 2;
  if (g == 0) return 3 * b - 4;
  if (b == 0) return 4 * g - 2;
  return 4 * g + 3 * b - 4;
}

}  // namespace

TEST_CASE("surface cycles: support, Euler characteristic, verification") {
  for (int g = 0; g <= 4; ++g)
    for (int b = 0; b <= 4; ++b) {
      if (g == 0 && b == 0) continue;
      auto [m, c] = surface_cycle(g, b);
      INFO("g=", g, " b=", b);
      CHECK(c.support_size() == expected_support(g, b));
      CHECK(euler_characteristic(m) == 2 - 2 * g - b);
      CHECK(verify_relative_cycle(m, c, parse_ring_spec("Z")));
      std::size_t h1 = 2 * g + (b >= 1 ? b - 1 : 0);
      CHECK(homology(m, parse_ring_spec("Q")).at(1).rank == h1);
    }
  CHECK_THROWS_AS(surface_cycle(0, 0), domain_error);
}

TEST_CASE("surface cycle boundaries are fundamental on each boundary circle") {
  for (auto [g, b] : std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {2, 1}, {3, 4}}) {
    auto [m, c] = surface_cycle(g, b);
    Chain bd = boundary(m, c);
    // supported on marked edges, one coefficient of absolute value 1 per circle
    std::map<std::string, int> comp;
    for (const auto& [id, v] : bd.coefficients) {
      CHECK(m.boundary_mark.count(id) == 1);
      CHECK((v == 1 || v == -1));
    }
    // edge count equals total boundary circle length; each circle is touched
    HomologySummary h = homology(m, parse_ring_spec("Q"), false);
    CHECK(h.at(0).rank == 1);
  }
}

TEST_CASE("minimality certificate matches support for all generated surfaces") {
  for (int g = 0; g <= 4; ++g)
    for (int b = 0; b <= 4; ++b) {
      if (g == 0 && b == 0) continue;
      auto [m, c] = surface_cycle(g, b);
      for (std::string field : {"Q", "Fp:2"}) {
        SurfaceCertificate cert =
            surface_minimality_certificate(m, c, g, b, parse_ring_spec(field));
        INFO("g=", g, " b=", b, " field=", field);
        CHECK(cert.passed);
        CHECK_FALSE(cert.reducible);
        CHECK(cert.kernel_dim == 1);
        CHECK(cert.derived_lower_bound == c.support_size());
        CHECK(!cert.steps.empty());
      }
    }
}

TEST_CASE("certificate flags redundant cycles as reducible") {
  Model m = selftest_detail::redundant_sphere_model();
  Chain c = selftest_detail::redundant_sphere_cycle();
  // a genuine relative 2-cycle of support 5 in a model whose ker d_2 is big
  CHECK(verify_relative_cycle(m, c, parse_ring_spec("Q")));
  SurfaceCertificate cert = surface_minimality_certificate(m, c, 0, 0, parse_ring_spec("Q"));
  CHECK(cert.reducible);
  CHECK(cert.kernel_dim >= 2);
  REQUIRE(cert.smaller_witness.has_value());
  CHECK(cert.smaller_witness->support_size() < c.support_size());
  CHECK(verify_relative_cycle(m, *cert.smaller_witness, parse_ring_spec("Q")));
}

TEST_CASE("certificate rejects non-fundamental chains") {
  Model t = torus_model();
  CHECK_THROWS_AS(
      surface_minimality_certificate(t, Chain{2, {{"s1", Rat(1)}}}, 1, 0, parse_ring_spec("Q")),
      domain_error);
}

TEST_CASE("basic models") {
  Model c = circle_model();
  CHECK(c.count(0) == 1);
  CHECK(c.count(1) == 1);
  CHECK(chain_norm(parse_ring_spec("Z"), c.reference_cycle) == 1);

  Model s2 = sphere_model(2);
  CHECK(s2.count(2) == 2);
  CHECK(chain_norm(parse_ring_spec("Z"), s2.reference_cycle) == 2);
  CHECK(verify_relative_cycle(s2, s2.reference_cycle, parse_ring_spec("Z")));

  Model s3 = sphere_model(3);
  CHECK(s3.count(3) == 5);
  CHECK(chain_norm(parse_ring_spec("Z"), s3.reference_cycle) == 5);
  CHECK(verify_relative_cycle(s3, s3.reference_cycle, parse_ring_spec("Z")));

  Model t = torus_model();
  CHECK(t.count(0) == 1);
  CHECK(t.count(2) == 2);
  CHECK_THROWS_AS(sphere_model(0), domain_error);
}

TEST_CASE("cyclic covers") {
  CoveringData c23 = cyclic_cover(2, 3);
  validate_covering(c23);
  CHECK(c23.sheets == 3);
  CHECK(euler_characteristic(c23.total) == 3 * euler_characteristic(c23.base));
  CHECK(euler_characteristic(c23.total) == 2 - 2 * 4);  // genus 4 total space
  CHECK(homology(c23.total, parse_ring_spec("Q")).at(1).rank == 8);

  CoveringData id = cyclic_cover(3, 1);
  CHECK(id.sheets == 1);
  for (int n = 0; n <= 2; ++n) CHECK(id.total.count(n) == id.base.count(n));
  CHECK(euler_characteristic(id.total) == euler_characteristic(id.base));

  CoveringData t2 = cyclic_cover(1, 2);
  CHECK(euler_characteristic(t2.total) == 0);
  CHECK(euler_characteristic(t2.base) == 0);
}

TEST_CASE("transfer of the base cycle is fundamental upstairs") {
  for (auto [g, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    CoveringData cov = cyclic_cover(g, k);
    auto [base, c] = surface_cycle(g, 0);
    REQUIRE(content_hash(base) == content_hash(cov.base));
    Chain up = transfer(cov, c);
    CHECK(verify_fundamental_cycle(cov.total, up, parse_ring_spec("Z")));
    int gk = k * g - k + 1;
    CHECK(chain_norm(parse_ring_spec("Z"), up) == Rat(k) * Rat(4 * g - 2));
    CHECK(Rat(k) * Rat(4 * g - 2) >= Rat(4 * gk - 2));
  }
}

TEST_CASE("stable volume sequence for genus 2") {
  StableSequence s = stable_volume_surface(2, 8);
  REQUIRE(s.terms.size() == 8);
  CHECK(s.terms[0].second == 6);
  CHECK(s.terms[1].second == 5);
  for (std::size_t i = 1; i < s.terms.size(); ++i) CHECK(s.terms[i].second < s.terms[i - 1].second);
  CHECK(s.infimum == s.terms.back().second);
  CHECK(s.limit == 4);
  CHECK(s.infimum > s.limit);
}
