#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "svol/bounds.hpp"

using namespace svol;

namespace {

void check_pinned(const KnowledgeBase& kb, const std::string& s, const std::string& ring,
                  const Rat& v) {
  const Fact& f = kb.facts.at({s, ring});
  INFO(s, " over ", ring);
  CHECK(f.interval.lo == v);
  REQUIRE(f.interval.hi.has_value());
  CHECK(*f.interval.hi == v);
  CHECK(!f.trace.empty());
}

}  // namespace

TEST_CASE("odd sphere: integral value 1 pins every p-adic value to 1") {
  KnowledgeBase kb;
  kb.facts[{"S3", "Z"}] = {"S3", "Z", {Rat(1), Rat(1)}, {"seed: external"}};
  kb.relations.push_back({Relation::Kind::Closed, "S3"});
  PropagationResult r = propagate(kb);
  CHECK_FALSE(r.contradiction);
  for (Int p : {Int(2), Int(3), Int(5), Int(7)}) {
    check_pinned(r.kb, "S3", "Zp:" + p.str(), 1);
    check_pinned(r.kb, "S3", "Qp:" + p.str(), 1);
    const Interval& fp = r.kb.facts.at({"S3", "Fp:" + p.str()}).interval;
    REQUIRE(fp.hi.has_value());
    CHECK(*fp.hi <= 1);
  }
}

TEST_CASE("even sphere: value 2 everywhere from the even-closed threshold") {
  KnowledgeBase kb;
  kb.facts[{"S2", "Z"}] = {"S2", "Z", {Rat(2), Rat(2)}, {"seed: external"}};
  kb.relations.push_back({Relation::Kind::EvenClosed, "S2"});
  kb.relations.push_back({Relation::Kind::Closed, "S2"});
  PropagationResult r = propagate(kb);
  CHECK_FALSE(r.contradiction);
  for (Int p : {Int(2), Int(3)}) {
    check_pinned(r.kb, "S2", "Zp:" + p.str(), 2);
    check_pinned(r.kb, "S2", "Qp:" + p.str(), 2);
  }
}

TEST_CASE("torus: witness upper bound 2 plus even-closed pins all primes") {
  KnowledgeBase kb;
  kb.facts[{"T2", "Z"}] = {"T2", "Z", {Rat(0), Rat(2)}, {"seed: witness"}};
  kb.relations.push_back({Relation::Kind::EvenClosed, "T2"});
  kb.relations.push_back({Relation::Kind::Closed, "T2"});
  PropagationResult r = propagate(kb);
  CHECK_FALSE(r.contradiction);
  for (Int p : {Int(2), Int(3), Int(5), Int(7)}) {
    check_pinned(r.kb, "T2", "Zp:" + p.str(), 2);
    check_pinned(r.kb, "T2", "Qp:" + p.str(), 2);
  }
  check_pinned(r.kb, "T2", "Z", 2);
}

TEST_CASE("odd projective space via the sphere double cover") {
  KnowledgeBase kb;
  kb.facts[{"RP3", "Z"}] = {"RP3", "Z", {Rat(2), Rat(2)}, {"seed: external"}};
  kb.facts[{"RP3", "Fp:2"}] = {"RP3", "Fp:2", {Rat(2), Rat(2)}, {"seed: external"}};
  kb.facts[{"S3", "Z"}] = {"S3", "Z", {Rat(1), Rat(1)}, {"seed: external"}};
  kb.relations.push_back({Relation::Kind::Closed, "S3"});
  kb.relations.push_back({Relation::Kind::Closed, "RP3"});
  Relation cover{Relation::Kind::DegreeMap, "S3", "RP3"};
  cover.degree = 2;
  kb.relations.push_back(cover);
  PropagationResult r = propagate(kb);
  CHECK_FALSE(r.contradiction);
  for (Int p : {Int(3), Int(5), Int(7)}) {
    check_pinned(r.kb, "RP3", "Zp:" + p.str(), 1);
    check_pinned(r.kb, "RP3", "Qp:" + p.str(), 1);
  }
  check_pinned(r.kb, "RP3", "Zp:2", 2);
  check_pinned(r.kb, "RP3", "Qp:2", 2);
}

TEST_CASE("sandwich chains order the finite quotients") {
  KnowledgeBase kb;
  kb.facts[{"X", "Z"}] = {"X", "Z", {Rat(0), Rat(6)}, {"seed: witness"}};
  kb.facts[{"X", "Fp:3"}] = {"X", "Fp:3", {Rat(4), {}}, {"seed: external"}};
  kb.primes = {Int(3)};
  PropagationResult r = propagate(kb);
  CHECK_FALSE(r.contradiction);
  // lower bound climbs the chain (F_p) <= Z/p <= Z_p <= Z; upper descends
  auto ival = [&](const std::string& ring) { return r.kb.facts.at({"X", ring}).interval; };
  CHECK(ival("Zmod:3^1").lo >= 4);
  CHECK(ival("Zp:3").lo >= 4);
  CHECK(ival("Z").lo >= 4);
  CHECK(*ival("Zp:3").hi <= 6);
  CHECK(*ival("Fp:3").hi <= 6);
  CHECK(*ival("Qp:3").hi <= 6);
}

TEST_CASE("forced contradiction is detected and reported with a trace") {
  KnowledgeBase kb;
  // even closed demands every Q_p value >= 2, but a degree-1 upper bound of 1
  kb.facts[{"X", "Z"}] = {"X", "Z", {Rat(0), Rat(1)}, {"seed"}};
  kb.relations.push_back({Relation::Kind::EvenClosed, "X"});
  PropagationResult r = propagate(kb);
  CHECK(r.contradiction);
  CHECK(r.report.find("X") != std::string::npos);
  CHECK(!r.report.empty());
}

TEST_CASE("divisor certificate collapses the four rings away from its primes") {
  KnowledgeBase kb;
  kb.facts[{"Y", "triv:Q"}] = {"Y", "triv:Q", {Rat(4), Rat(4)}, {"seed"}};
  kb.facts[{"Y", "Z"}] = {"Y", "Z", {Rat(0), Rat(6)}, {"seed: witness"}};
  Relation cert{Relation::Kind::DivisorCert, "Y"};
  cert.divisor_primes = {Int(2)};
  cert.certificate = "model:test";
  kb.relations.push_back(cert);
  PropagationResult r = propagate(kb);
  CHECK_FALSE(r.contradiction);
  for (Int p : {Int(5), Int(7)}) {
    check_pinned(r.kb, "Y", "Zp:" + p.str(), 4);
    check_pinned(r.kb, "Y", "Qp:" + p.str(), 4);
    check_pinned(r.kb, "Y", "Fp:" + p.str(), 4);
  }
  // at the divisor prime itself nothing is forced beyond the sandwich
  CHECK(r.kb.facts.at({"Y", "Zp:2"}).interval.lo <= 4);
}

TEST_CASE("covering and product rules") {
  KnowledgeBase kb;
  kb.facts[{"B", "Z"}] = {"B", "Z", {Rat(2), Rat(6)}, {"seed"}};
  Relation cov{Relation::Kind::Covering, "T", "B"};
  cov.degree = 3;
  kb.relations.push_back(cov);
  kb.facts[{"A", "Zp:2"}] = {"A", "Zp:2", {Rat(2), Rat(2)}, {"seed"}};
  kb.facts[{"C", "Zp:2"}] = {"C", "Zp:2", {Rat(2), Rat(2)}, {"seed"}};
  Relation prod{Relation::Kind::Product, "P"};
  prod.factor_a = "A";
  prod.factor_b = "C";
  kb.relations.push_back(prod);
  Relation da{Relation::Kind::Dim, "A"};
  da.n = 2;
  Relation dc{Relation::Kind::Dim, "C"};
  dc.n = 2;
  kb.relations.push_back(da);
  kb.relations.push_back(dc);
  PropagationResult r = propagate(kb);
  CHECK_FALSE(r.contradiction);
  CHECK(*r.kb.facts.at({"T", "Z"}).interval.hi <= 18);
  // product: max lower bound, binomial upper bound C(4,2) * 2 * 2 = 24
  const Interval& p = r.kb.facts.at({"P", "Zp:2"}).interval;
  CHECK(p.lo >= 2);
  REQUIRE(p.hi.has_value());
  CHECK(*p.hi <= 24);
}

TEST_CASE("Betti numbers seed p-adic lower bounds") {
  KnowledgeBase kb;
  Relation betti{Relation::Kind::Betti, "W"};
  betti.n = 1;
  betti.field = "Q";
  betti.betti = 4;
  kb.relations.push_back(betti);
  PropagationResult r = propagate(kb);
  for (Int p : {Int(2), Int(7)}) CHECK(r.kb.facts.at({"W", "Qp:" + p.str()}).interval.lo >= 4);
}

TEST_CASE("propagation is monotone and terminates quickly") {
  KnowledgeBase kb;
  kb.facts[{"T2", "Z"}] = {"T2", "Z", {Rat(0), Rat(2)}, {"seed: witness"}};
  kb.relations.push_back({Relation::Kind::EvenClosed, "T2"});
  kb.relations.push_back({Relation::Kind::Closed, "T2"});
  PropagationResult r = propagate(kb);
  CHECK(r.passes <= 64);
  CHECK(r.shrinks > 0);
  // replay: the same seeds give the same intervals and traces
  PropagationResult r2 = propagate(kb);
  REQUIRE(r2.kb.facts.size() == r.kb.facts.size());
  for (const auto& [key, f] : r.kb.facts) {
    const Fact& g = r2.kb.facts.at(key);
    CHECK(f.interval.lo == g.interval.lo);
    CHECK(f.interval.hi == g.interval.hi);
    CHECK(f.trace == g.trace);
  }
}

TEST_CASE("knowledge base and table JSON round trips") {
  KnowledgeBase kb;
  kb.facts[{"T2", "Z"}] = {"T2", "Z", {Rat(0), Rat(2)}, {"seed: witness"}};
  kb.relations.push_back({Relation::Kind::EvenClosed, "T2"});
  Relation cert{Relation::Kind::DivisorCert, "T2"};
  cert.divisor_primes = {Int(2), Int(3)};
  cert.certificate = "model:torus";
  kb.relations.push_back(cert);
  nlohmann::json j = kb_to_json(kb);
  CHECK(j.at("svol-schema") == 1);
  KnowledgeBase kb2 = kb_from_json(j);
  CHECK(kb2.facts.size() == kb.facts.size());
  CHECK(kb2.relations.size() == kb.relations.size());
  CHECK(kb_to_json(kb2) == j);

  PropagationResult r = propagate(kb2);
  auto rows = export_table(r.kb);
  CHECK(!rows.empty());
  CHECK(std::is_sorted(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    return std::tie(a.space, a.ring) < std::tie(b.space, b.ring);
  }));
  nlohmann::json tj = table_to_json(rows);
  CHECK(tj.at("table").size() == rows.size());

  // empty kb exports an empty table
  CHECK(export_table(KnowledgeBase{}).empty());

  // seed with lo > hi is rejected at load time
  nlohmann::json bad = kb_to_json(kb);
  bad["facts"][0]["lo"] = "5";
  bad["facts"][0]["hi"] = "2";
  CHECK_THROWS_AS(kb_from_json(bad), domain_error);
}
