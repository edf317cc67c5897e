#include "doctest.h"
#include "oracles.hpp"
#include "skewarch/error.hpp"
#include "skewarch/props.hpp"

using namespace skewarch;

namespace {

RingHandle R(const char* spec) { return construct_ring(spec); }
EndoHandle endo(const char* ring, const char* e = "endo:id") { return build_endo(R(ring), e); }

const Verdict* find(const std::vector<Verdict>& vs, const std::string& suite) {
  for (const auto& v : vs)
    if (v.suite == suite) return &v;
  return nullptr;
}

// Replays a falsifier witness: f = h_n g^n for n = 1..depth.
bool replays(const EndoHandle& e, const Verdict& v) {
  const int n = v.witness.at("precision").get<int>();
  const TruncSeries f = parse_series(e, n, v.witness.at("f").get<std::string>());
  const TruncSeries g = parse_series(e, n, v.witness.at("g").get<std::string>());
  std::uint64_t k = 1;
  for (const auto& h : v.witness.at("h")) {
    if (skew_mul(parse_series(e, n, h.get<std::string>()), skew_pow(g, k)) != f) return false;
    ++k;
  }
  return k > 1;
}

}  // namespace

TEST_CASE("Archimedean ground truth") {
  for (const char* s : {"zmod:8", "gf:2:2", "gf:5:1"})
    for (Side side : {Side::right, Side::left}) CHECK(is_archimedean(R(s), side).status == Status::holds);
  auto v6 = is_archimedean(R("zmod:6"), Side::right);
  CHECK(v6.status == Status::fails);
  CHECK(v6.witness.at("a") == "2");
  CHECK(v6.witness.at("stabilized") == "{0,2,4}");
  auto vp = is_archimedean(R("prod(zmod:2,zmod:2)"), Side::right);
  CHECK(vp.status == Status::fails);
  CHECK(vp.witness.at("a") == "(1,0)");
  CHECK(vp.witness.at("stabilized") == "{(0,0),(1,0)}");
  CHECK(is_archimedean(R("zmod:8"), Side::right).certificate.find("exhaustive") != std::string::npos);
}

TEST_CASE("Archimedean decision agrees with brute force") {
  for (const auto& spec : oracle::corpus()) {
    CAPTURE(spec);
    auto r = construct_ring(spec);
    const auto right = is_archimedean(r, Side::right), left = is_archimedean(r, Side::left);
    CHECK((right.status == Status::holds) == oracle::archimedean(*r, true));
    CHECK((left.status == Status::holds) == oracle::archimedean(*r, false));
    if (r->is_commutative()) CHECK(right.status == left.status);
    if (right.status == Status::fails) {
      const Element a = r->parse(right.witness.at("a").get<std::string>());
      CHECK_FALSE(oracle::is_unit(*r, a));
      CHECK(oracle::chain_intersection(*r, a, true).size() > 1);
    }
    if (right.status == Status::holds) {
      const auto zd = zero_divisors(*r, Side::right), j = jacobson_radical(*r);
      for (auto m : zd.members) CHECK(j.contains(m));
    }
  }
}

TEST_CASE("truncated models are decided by theorem or left inconclusive") {
  CHECK(is_archimedean(R("xyq:gf:2:1:N=8"), Side::right).status == Status::holds_by_theorem);
  CHECK(is_archimedean(R("tser(gf:2:1,N=6)"), Side::left).status == Status::holds_by_theorem);
  auto t6 = is_archimedean(R("tser(zmod:6,N=4)"), Side::right);
  CHECK(t6.status == Status::fails);
  CHECK(is_archimedean(R("tser(zmod:8,N=4)"), Side::right).status == Status::inconclusive_at_scale);
}

TEST_CASE("Archimedean consequence clauses") {
  for (const char* s : {"zmod:8", "gf:2:2"}) {
    for (const auto& v : lemma_2_3_suite(R(s))) CHECK(v.status == Status::holds);
  }
  auto z6 = lemma_2_3_suite(R("zmod:6"));
  REQUIRE(z6.size() == 4);
  for (const auto& v : z6) CHECK(v.status == Status::hypothesis_not_met);
  const Verdict* c = find(z6, "lemma-2-3(c)");
  REQUIRE(c);
  CHECK(c->witness.at("idempotent") == "3");
  for (const auto& spec : oracle::corpus()) {
    auto r = construct_ring(spec);
    if (!oracle::archimedean(*r, true) && !oracle::archimedean(*r, false)) continue;
    CAPTURE(spec);
    for (const auto& v : lemma_2_3_suite(r)) CHECK(v.status == Status::holds);
  }
}

TEST_CASE("subrings of Archimedean rings") {
  auto f4 = R("gf:2:2");
  CHECK(proposition_2_2_check(subring_generated(f4, {}), f4).status == Status::holds);
  auto z8 = R("zmod:8");
  CHECK(proposition_2_2_check(subring_generated(z8, {z8->parse("4")}), z8).status == Status::holds);
  CHECK(proposition_2_2_check(subring_generated(z8, {}), z8).status == Status::holds);
  auto z6 = R("zmod:6");
  CHECK(proposition_2_2_check(subring_generated(z6, {}), z6).status == Status::hypothesis_not_met);
}

TEST_CASE("von Neumann regular rings") {
  auto p = remark_2_4_check(R("prod(zmod:2,zmod:2)"));
  CHECK(p.status == Status::holds);
  CHECK(p.witness.at("a") == "(1,0)");
  CHECK(p.witness.at("stabilized") == "{(0,0),(1,0)}");
  CHECK(remark_2_4_check(R("gf:5:1")).status == Status::holds);
  auto z8 = remark_2_4_check(R("zmod:8"));
  CHECK(z8.status == Status::hypothesis_not_met);
  CHECK(z8.witness.at("no_quasi_inverse") == "2");
  CHECK(remark_2_4_census(2).status == Status::holds);
}

TEST_CASE("rigid iff compatible and reduced on corpus endomorphisms") {
  for (const auto& spec : oracle::corpus()) {
    auto r = construct_ring(spec);
    CHECK(lemma_4_2_check(*identity_endo(r)).status == Status::holds);
  }
  CHECK(lemma_4_2_check(*endo("prod(zmod:2,zmod:2)", "endo:diag")).status == Status::holds);
  CHECK(lemma_4_2_check(*endo("gf:3:2", "endo:frob")).status == Status::holds);
}

TEST_CASE("twisted product biconditional") {
  CHECK(lemma_4_3_bruteforce(endo("zmod:6"), 2, 3, 3).status == Status::holds);
  CHECK(lemma_4_3_bruteforce(endo("gf:2:2", "endo:frob"), 2, 3, 3).status == Status::holds);
  auto z8 = lemma_4_3_bruteforce(endo("zmod:8"), 2, 3, 3);
  CHECK(z8.status == Status::hypothesis_not_met);

  // Independent check of the n = 2 biconditional on Zmod(6).
  auto r = R("zmod:6");
  for (const auto& a : r->elements())
    for (const auto& b : r->elements())
      for (std::uint64_t k = 1; k <= 3; ++k)
        for (std::uint64_t j = 1; j <= 3; ++j) {
          const bool twisted = r->is_zero(r->mul(r->pow(a, k), r->pow(b, j)));
          CHECK(twisted == r->is_zero(r->mul(a, b)));
          CHECK(twisted == r->is_zero(r->mul(b, a)));
        }
}

TEST_CASE("series falsifier") {
  ProbeConfig pc;
  auto z6 = endo("zmod:6");
  auto v = archimedean_falsifier(z6, pc);
  REQUIRE(v.status == Status::fails);
  CHECK(v.witness.at("f") == "[2]");
  CHECK(v.witness.at("g") == "[2]");
  CHECK(v.witness.at("genuine") == true);
  CHECK(v.witness.at("h").size() == 5);
  CHECK(replays(z6, v));

  auto f4 = archimedean_falsifier(endo("gf:2:2", "endo:frob"), pc);
  CHECK(f4.status == Status::holds_by_theorem);
  CHECK(f4.predicted_holds);

  auto z8 = archimedean_falsifier(endo("zmod:8"), pc);
  CHECK(z8.status == Status::inconclusive_at_scale);

  pc.budget = 500;
  auto p = archimedean_falsifier(endo("prod(zmod:2,zmod:2)"), pc);
  REQUIRE(p.status == Status::fails);
  CHECK(replays(endo("prod(zmod:2,zmod:2)"), p));
}

TEST_CASE("nilpotent sampler") {
  ProbeConfig pc;
  pc.budget = 2000;
  auto z8 = endo("zmod:8");
  auto v = nilpotent_sampler(z8, pc);
  REQUIRE(v.status == Status::fails);
  const TruncSeries f = parse_series(z8, 16, v.witness.at("f").get<std::string>());
  CHECK_FALSE(f.is_zero());
  CHECK(skew_mul(f, f).is_zero());
  CHECK(nilpotent_sampler(endo("gf:2:2", "endo:frob"), pc).status == Status::inconclusive_at_scale);
  CHECK(nilpotent_sampler(endo("zmod:6"), pc).status == Status::inconclusive_at_scale);
  CHECK(nilpotent_sampler(endo("prod(zmod:2,zmod:2)", "endo:diag"), pc).status == Status::fails);
}

TEST_CASE("induction audit") {
  auto z8 = endo("zmod:8");
  auto S8 = [&](const char* c) { return parse_series(z8, 3, c); };
  auto trivial = induction_audit(S8("[]"), S8("[2]"), {S8("[]"), S8("[]"), S8("[]")}, 3);
  CHECK(trivial.status != Status::fails);
  auto v = induction_audit(S8("[]"), S8("[2]"), {S8("[]"), S8("[4]"), S8("[1]")}, 3);
  CHECK(v.status == Status::hypothesis_not_met);
  CHECK(v.witness.at("derived").at(0) == "f_0 = 0");
  CHECK(v.witness.at("halted_at") == "lemma-4-3");

  auto z6 = endo("zmod:6");
  auto S6 = [&](const char* c) { return parse_series(z6, 3, c); };
  auto w = induction_audit(S6("[2]"), S6("[2]"), {S6("[1]"), S6("[2]"), S6("[1]")}, 3);
  CHECK(w.status == Status::hypothesis_not_met);
  CHECK(w.witness.at("halted_at") == "eq6");
  CHECK(w.witness.at("f_m") == "2");

  auto bad = induction_audit(S6("[2]"), S6("[2]"), {S6("[1]"), S6("[1]"), S6("[1]")}, 3);
  CHECK(bad.status == Status::fails);
  CHECK(bad.witness.at("halted_at") == "replay");

  auto f4 = endo("gf:2:2", "endo:frob");
  auto S4 = [&](const char* c) { return parse_series(f4, 3, c); };
  auto ok = induction_audit(S4("[]"), S4("[[0,0],[1,0]]"), {S4("[]"), S4("[]"), S4("[]")}, 3);
  CHECK(ok.status == Status::holds);
}

TEST_CASE("classification") {
  auto f4 = classify(endo("gf:2:2", "endo:frob"));
  CHECK(f4.predicted("R[x;a]", "reduced right Archimedean") == std::optional<bool>(true));
  CHECK(f4.predicted("R[[x;a]]", "reduced left Archimedean") == std::optional<bool>(true));
  auto v = to_verdict(f4);
  CHECK(v.status == Status::holds_by_theorem);
  for (const char* tag : {"Theorem 3.3", "Theorem 3.4", "Theorem 4.4", "Theorem 4.5"})
    CHECK(std::find(v.theorem_tags.begin(), v.theorem_tags.end(), tag) != v.theorem_tags.end());

  auto x = classify(endo("xyq:gf:2:1:N=8", "endo:xsq"));
  CHECK(x.reduced.value);
  CHECK_FALSE(x.domain.value);
  CHECK(x.predicted("R[[x;a]]", "reduced right Archimedean") == std::optional<bool>(true));
  CHECK(x.predicted("R[[x;a]]", "reduced left Archimedean") == std::optional<bool>(true));
  CHECK(x.predicted("R[[x;a]]", "right Archimedean domain") == std::optional<bool>(false));

  auto z6 = classify(endo("zmod:6"));
  CHECK(to_verdict(z6).status == Status::hypothesis_not_met);
  for (const auto& p : z6.predictions) CHECK_FALSE(p.value);

  // With the identity twist the series predictions depend only on reduced and Archimedean.
  for (const auto& spec : oracle::corpus()) {
    auto r = construct_ring(spec);
    auto c = classify(identity_endo(r));
    CAPTURE(spec);
    CHECK(c.predicted("R[[x;a]]", "reduced right Archimedean") ==
          std::optional<bool>(oracle::reduced(*r) && oracle::archimedean(*r, true)));
    for (const auto& p : c.predictions) {
      const std::vector<std::string> allowed{"Theorem 1.2", "Theorem 3.3", "Theorem 3.4", "Theorem 4.4",
                                             "Theorem 4.5", "Corollary 3.5", "Corollary 4.6"};
      CHECK(std::find(allowed.begin(), allowed.end(), p.tag) != allowed.end());
    }
  }
}

TEST_CASE("quotient intersections") {
  auto z6 = R("zmod:6");
  auto I = [&](const RingHandle& r, std::initializer_list<const char*> xs) {
    std::vector<Element> es;
    for (const char* x : xs) es.push_back(r->parse(x));
    return make_subset(*r, es);
  };
  auto v = quotient_intersection_check(z6, I(z6, {"0", "2", "4"}), I(z6, {"0", "3"}));
  REQUIRE(v.size() == 3);
  CHECK(v[0].status == Status::holds);
  CHECK(v[1].status == Status::holds);
  CHECK(v[2].status == Status::hypothesis_not_met);
  auto same = quotient_intersection_check(z6, I(z6, {"0", "3"}), I(z6, {"0", "3"}));
  CHECK(same[1].status == Status::hypothesis_not_met);
  auto z12 = R("zmod:12");
  auto w = quotient_intersection_check(z12, I(z12, {"0", "4", "8"}), I(z12, {"0", "6"}));
  CHECK(w[0].status == Status::hypothesis_not_met);
  CHECK(w[1].status == Status::holds);
  CHECK_THROWS_AS(quotient_intersection_check(z6, I(z6, {"0", "2"}), I(z6, {"0", "3"})), SpecError);
}

TEST_CASE("verdict JSON") {
  auto v = is_archimedean(R("zmod:6"), Side::right);
  const Json j = to_json(v);
  std::vector<std::string> keys;
  for (const auto& [k, _] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"suite", "status", "witness", "certificate", "theorem_tags"});
  const Verdict back = verdict_from_json(j);
  CHECK(back.suite == v.suite);
  CHECK(back.status == v.status);
  CHECK(back.witness == v.witness);
  CHECK(back.theorem_tags == v.theorem_tags);
  CHECK_THROWS(make_verdict("x", Status::fails, "no witness"));
  CHECK(parse_status("holds-by-theorem") == std::optional<Status>(Status::holds_by_theorem));
  CHECK_FALSE(parse_status("maybe"));
}
