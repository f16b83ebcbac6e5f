#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "svol/minimize.hpp"
#include "svol/models.hpp"

using namespace svol;

namespace {

// witnesses must represent the same class: difference is a boundary plus
// boundary-marked cells, which verify_fundamental_cycle checks for us
void check_witness(const Model& m, const Chain& c, const RingSpec& r,
                   const MinimizationResult& res) {
  CHECK(chain_norm(r, res.witness) == res.value);
  Chain diff = chain_add(res.witness, chain_scale(Rat(-1), c));
  CHECK(verify_relative_cycle(m, reduce_chain(r, diff).is_zero() ? c : res.witness, r));
}

}  // namespace

TEST_CASE("torus minimum is 2 over every supported ring") {
  Model t = torus_model();
  for (std::string ring : {"Z", "Q", "R", "Zp:2", "Zp:3", "Qp:2", "Qp:5", "Fp:2", "Fp:7",
                           "Zmod:3^2", "triv:Q", "triv:Fp:7"}) {
    RingSpec r = parse_ring_spec(ring);
    MinimizationResult res = minimal_norm(t, t.reference_cycle, r);
    INFO("ring ", ring);
    CHECK(res.value == 2);
    CHECK(res.optimal);
    check_witness(t, t.reference_cycle, r, res);
  }
}

TEST_CASE("circle and sphere minima") {
  Model c = circle_model();
  CHECK(minimal_norm(c, c.reference_cycle, parse_ring_spec("Z")).value == 1);
  CHECK(minimal_norm(c, c.reference_cycle, parse_ring_spec("Fp:3")).value == 1);
  Model s = sphere_model(2);
  for (std::string ring : {"Z", "Q", "Zp:2", "Fp:5", "triv:Q"})
    CHECK(minimal_norm(s, s.reference_cycle, parse_ring_spec(ring)).value == 2);
}

TEST_CASE("genus 2 surface has trivial-seminorm volume 6") {
  auto [m, c] = surface_cycle(2, 0);
  MinimizationResult res = minimal_norm(m, c, parse_ring_spec("triv:Q"));
  CHECK(res.value == 6);
  CHECK(res.optimal);
  CHECK(res.witness.support_size() == 6);
  CHECK(minimal_norm(m, c, parse_ring_spec("Fp:2")).value == 6);
}

TEST_CASE("zero class minimizes to zero without work") {
  Model t = torus_model();
  MinimizationResult res = minimal_norm(t, Chain{2, {}}, parse_ring_spec("Z"));
  CHECK(res.value == 0);
  CHECK(res.witness.is_zero());
  CHECK(res.optimal);
}

TEST_CASE("non-cycles are rejected") {
  Model t = torus_model();
  CHECK_THROWS_WITH_AS(minimal_norm(t, Chain{2, {{"s1", Rat(1)}}}, parse_ring_spec("Z")),
                       "minimal_norm: class is not a relative cycle over Z", domain_error);
}

TEST_CASE("budget exhaustion reports a non-optimal upper bound") {
  Model t = torus_model();
  Chain loop{1, {{"eA", Rat(1)}}};  // d_2 gives two free directions
  MinimizeOptions opt;
  opt.budget_nodes = 1;
  MinimizationResult res = minimal_norm(t, loop, parse_ring_spec("Zmod:3^2"), opt);
  CHECK_FALSE(res.optimal);
  CHECK(res.value >= Rat(1, 9));
  CHECK(chain_norm(parse_ring_spec("Zmod:3^2"), res.witness) == res.value);
}

TEST_CASE("witness selection is deterministic and lex-least by default") {
  Model t = torus_model();
  RingSpec q = parse_ring_spec("Q");
  MinimizationResult a = minimal_norm(t, t.reference_cycle, q);
  MinimizationResult b = minimal_norm(t, t.reference_cycle, q);
  CHECK(a.witness == b.witness);
  MinimizeOptions any;
  any.any_witness = true;
  MinimizationResult c = minimal_norm(t, t.reference_cycle, q, any);
  CHECK(chain_norm(q, c.witness) == a.value);
}

TEST_CASE("finite field strategy agrees with exhaustive enumeration") {
  auto [m, c] = surface_cycle(1, 1);
  for (std::string ring : {"Fp:2", "Fp:3"}) {
    RingSpec r = parse_ring_spec(ring);
    MinimizeOptions ex;
    ex.strategy = Strategy::Exhaustive;
    MinimizationResult fast = minimal_norm(m, c, r);
    MinimizationResult slow = minimal_norm(m, c, r, ex);
    CHECK(fast.value == slow.value);
  }
}

TEST_CASE("p-adic scaling sequence of the torus is constant 2") {
  Model t = torus_model();
  for (Int p : {Int(2), Int(3)}) {
    auto seq = scaling_sequence(t, t.reference_cycle, p, 4);
    REQUIRE(seq.size() == 5);
    for (const auto& [e, v] : seq) CHECK(v == 2);
  }
}

TEST_CASE("simultaneous cycle over {2,3} at precision 2") {
  Model t = torus_model();
  std::map<Int, Chain> wit;
  for (Int p : {Int(2), Int(3)})
    wit[p] = minimal_norm(t, t.reference_cycle, parse_ring_spec("Zp:" + p.str())).witness;
  SimultaneousResult res = simultaneous_cycle(wit, 2);
  CHECK(res.coefficients.at(2) == 9);
  CHECK(res.coefficients.at(3) == -8);
  Int sum = 0;
  for (const auto& [p, a] : res.coefficients) sum += a;
  CHECK(sum == 1);
  // the combination stays p-adically close to each input witness
  for (const auto& [p, w] : wit) {
    RingSpec zp = parse_ring_spec("Zp:" + p.str());
    Chain diff = chain_add(res.cycle, chain_scale(Rat(-1), w));
    CHECK(chain_norm(zp, diff) <= Rat(1, 4));  // |a_p - 1|_p, |a_q|_p <= p^-2
  }
}

TEST_CASE("single-prime simultaneous cycle is the witness itself") {
  Model t = torus_model();
  Chain w = minimal_norm(t, t.reference_cycle, parse_ring_spec("Zp:5")).witness;
  SimultaneousResult res = simultaneous_cycle({{Int(5), w}}, 3);
  CHECK(res.coefficients.at(5) == 1);
  CHECK(res.cycle == w);
  CHECK_THROWS_AS(simultaneous_cycle({}, 2), domain_error);
  CHECK_THROWS_AS(simultaneous_cycle({{Int(4), w}}, 2), domain_error);
}

TEST_CASE("upper bound stream starts at the class norm and improves") {
  Model t = torus_model();
  for (std::string ring : {"Fp:2", "Zp:2", "Z"}) {
    RingSpec r = parse_ring_spec(ring);
    auto stream = upper_bound_stream(t, t.reference_cycle, r, 100000);
    REQUIRE(!stream.empty());
    CHECK(stream.front().bound == chain_norm(r, reduce_chain(r, t.reference_cycle)));
    CHECK(stream.front().candidates == 0);
    for (std::size_t i = 1; i < stream.size(); ++i) {
      CHECK(stream[i].bound < stream[i - 1].bound);
      CHECK(chain_norm(r, stream[i].witness) == stream[i].bound);
    }
    CHECK(stream.back().bound == 2);
  }
  // budget 0 still yields the trivial first entry
  auto none = upper_bound_stream(t, t.reference_cycle, parse_ring_spec("Z"), 0);
  CHECK(none.size() == 1);
}

TEST_CASE("rational and integral p-adic minima respect sandwich order") {
  auto [m, c] = surface_cycle(2, 0);
  for (Int p : {Int(2), Int(5)}) {
    Rat qp = minimal_norm(m, c, parse_ring_spec("Qp:" + p.str())).value;
    Rat zp = minimal_norm(m, c, parse_ring_spec("Zp:" + p.str())).value;
    Rat z = minimal_norm(m, c, parse_ring_spec("Z")).value;
    CHECK(qp <= zp);
    CHECK(zp <= z);
    CHECK(z == 6);
  }
}
