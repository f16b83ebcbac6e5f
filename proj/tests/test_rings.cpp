#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "svol/rings.hpp"

using namespace svol;

TEST_CASE("rational parsing round trips") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-7") == Rat(-7));
  CHECK(parse_rational("\xe2\x88\x92""5/9") == Rat(-5, 9));
  CHECK(to_string(Rat(-5, 9)) == "-5/9");
  CHECK(to_string(Rat(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), domain_error);
  CHECK_THROWS_AS(parse_rational("abc"), domain_error);
  CHECK_THROWS_AS(parse_rational(""), domain_error);
}

TEST_CASE("primality and valuations") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(padic_valuation_int(12, 2) == 2);
  CHECK(padic_valuation(Rat(9, 8), 2) == -3);
  CHECK(padic_valuation(Rat(9, 8), 3) == 2);
  CHECK(!padic_valuation(Rat(0), 5).has_value());
}

TEST_CASE("ring tag grammar round trips") {
  for (const char* t : {"Z", "Q", "Zp:5", "Qp:2", "Fp:3", "Zmod:3^2", "triv:Z", "triv:Q",
                        "triv:Zmod:2^3"}) {
    RingSpec r = parse_ring_spec(t);
    CHECK(parse_ring_spec(r.tag()) == r);
    CHECK(r.tag() == t);
  }
  CHECK(parse_ring_spec("R") == parse_ring_spec("Q"));
  CHECK(parse_ring_spec("triv:Fp:7") == parse_ring_spec("Fp:7"));
  CHECK_THROWS_AS(parse_ring_spec("Zp:4"), domain_error);
  CHECK_THROWS_AS(parse_ring_spec("Zmod:5"), domain_error);
  CHECK_THROWS_AS(parse_ring_spec("Zmod:5^0"), domain_error);
  CHECK_THROWS_AS(parse_ring_spec("bogus"), domain_error);
}

TEST_CASE("carrier reduction") {
  RingSpec z9 = parse_ring_spec("Zmod:3^2");
  CHECK(reduce_to_carrier(z9, Rat(11)) == Rat(2));
  CHECK(reduce_to_carrier(z9, Rat(-1)) == Rat(8));
  CHECK(reduce_to_carrier(z9, Rat(1, 2)) == Rat(5));  // 2*5 = 10 = 1 mod 9
  CHECK_THROWS_AS(reduce_to_carrier(z9, Rat(1, 3)), domain_error);
  CHECK_THROWS_AS(reduce_to_carrier(parse_ring_spec("Z"), Rat(1, 2)), domain_error);
  CHECK(reduce_to_carrier(parse_ring_spec("Fp:5"), Rat(7, 3)) == Rat(4));  // 3*4 = 12 = 7 mod 5
}

TEST_CASE("finite field reduction against brute force") {
  RingSpec f5 = parse_ring_spec("Fp:5");
  for (int n = -6; n <= 6; ++n)
    for (int d = 1; d <= 6; ++d) {
      if (d % 5 == 0) continue;
      Rat x(n, d);
      Int got = rat_num(reduce_to_carrier(f5, x));
      // brute force: the unique r in [0,5) with d*r = n mod 5
      Int want = -1;
      for (Int r = 0; r < 5; ++r)
        if ((rat_den(x) * r - rat_num(x)) % 5 == 0) want = r;
      CHECK(got == want);
    }
}

TEST_CASE("seminorm values") {
  CHECK(seminorm(parse_ring_spec("Z"), Rat(-7)) == Rat(7));
  CHECK(seminorm(parse_ring_spec("Q"), Rat(-3, 2)) == Rat(3, 2));
  CHECK(seminorm(parse_ring_spec("Zp:2"), Rat(12)) == Rat(1, 4));
  CHECK(seminorm(parse_ring_spec("Qp:2"), Rat(3, 8)) == Rat(8));
  CHECK(seminorm(parse_ring_spec("Qp:3"), Rat(0)) == Rat(0));
  CHECK(seminorm(parse_ring_spec("triv:Z"), Rat(100)) == Rat(1));
  CHECK(seminorm(parse_ring_spec("triv:Z"), Rat(0)) == Rat(0));
  CHECK(seminorm(parse_ring_spec("Fp:3"), Rat(6)) == Rat(0));  // 6 = 0 in F_3
  CHECK(seminorm(parse_ring_spec("Fp:3"), Rat(4)) == Rat(1));
}

TEST_CASE("quotient seminorm on Z/9") {
  RingSpec z9 = parse_ring_spec("Zmod:3^2");
  // residues 0..8: |0|=0, |3|=|6|=1/3, others 1
  Rat want[9] = {Rat(0), Rat(1), Rat(1), Rat(1, 3), Rat(1),
                 Rat(1), Rat(1, 3), Rat(1), Rat(1)};
  for (int r = 0; r < 9; ++r) CHECK(seminorm(z9, Rat(r)) == want[r]);
  // quotient norm = min over lifts; |.|_3 of a lift depends only on
  // min(v_3, 2), so lifts in [-90, 90] suffice as witnesses
  RingSpec z3 = parse_ring_spec("Zp:3");
  for (int r = 0; r < 9; ++r) {
    Rat best = Rat(1);
    for (int lift = r - 90; lift <= r + 90; lift += 9) {
      Rat v = seminorm(z3, Rat(lift));
      if (v < best) best = v;
    }
    CHECK(seminorm(z9, Rat(r)) == best);
  }
}

TEST_CASE("axiom checker accepts all ring specs exhaustively on Z/9 samples") {
  std::vector<std::pair<Rat, Rat>> pairs;
  for (int s = -9; s <= 9; ++s)
    for (int t = -9; t <= 9; ++t) pairs.emplace_back(Rat(s), Rat(t));
  for (const char* tag : {"Z", "Q", "Zp:3", "Qp:3", "Fp:3", "Zmod:3^2", "triv:Z"}) {
    AxiomReport rep = check_seminorm_axioms(parse_ring_spec(tag), pairs);
    CAPTURE(tag);
    CHECK(rep.ok());
    CHECK(rep.pairs_checked == pairs.size());
  }
}

TEST_CASE("axiom checker flags a broken norm") {
  NormFn bad = [](const Rat& x) { return x == 1 ? Rat(2) : rat_abs(x); };
  auto rep = check_seminorm_axioms(bad, {{Rat(1), Rat(1)}});
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations.front().axiom == "unit");

  NormFn no_triangle = [](const Rat& x) { return x * x; };  // |1|=1 but fails triangle
  auto rep2 = check_seminorm_axioms(no_triangle, {{Rat(2), Rat(3)}});
  REQUIRE_FALSE(rep2.ok());
  CHECK(rep2.violations.front().axiom == "triangle");
}

TEST_CASE("norms_at_most_one") {
  CHECK(norms_at_most_one(parse_ring_spec("Zp:5")));
  CHECK(norms_at_most_one(parse_ring_spec("Fp:5")));
  CHECK(norms_at_most_one(parse_ring_spec("Zmod:2^3")));
  CHECK(norms_at_most_one(parse_ring_spec("triv:Q")));
  CHECK_FALSE(norms_at_most_one(parse_ring_spec("Z")));
  CHECK_FALSE(norms_at_most_one(parse_ring_spec("Qp:5")));
}
