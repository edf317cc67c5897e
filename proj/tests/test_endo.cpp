#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "oracles.hpp"
#include "skewarch/error.hpp"
#include "skewarch/ring_kinds.hpp"

using namespace skewarch;

namespace {

RingHandle R(const char* spec) { return construct_ring(spec); }

// Every built-in endo that applies to a corpus ring, plus the identity.
std::vector<EndoHandle> corpus_endos() {
  std::vector<EndoHandle> out;
  for (const auto& spec : oracle::corpus()) {
    auto r = construct_ring(spec);
    out.push_back(identity_endo(r));
    for (const char* e : {"endo:frob", "endo:diag"}) {
      try {
        out.push_back(build_endo(r, e));
      } catch (const Error&) {
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("frobenius validates and squares") {
  auto f4 = R("gf:2:2");
  auto frob = build_endo(f4, "endo:frob");
  const Element w = f4->parse("[0,1]");
  CHECK(frob->apply(w) == f4->mul(w, w));
  CHECK(frob->power_apply(2, w) == w);
  CHECK_FALSE(frob->is_identity());
  CHECK(build_endo(R("gf:5:1"), "endo:frob")->is_identity());
}

TEST_CASE("the cube map on GF(4) is rejected with a witness") {
  auto f4 = R("gf:2:2");
  try {
    build_endo(f4, "cube", [&](const Element& a) { return f4->pow(a, 3); });
    FAIL("expected EndoError");
  } catch (const EndoError& e) {
    REQUIRE(e.witness().size() == 2);
    const Element a = f4->parse(e.witness()[0]), b = f4->parse(e.witness()[1]);
    auto cube = [&](const Element& x) { return f4->pow(x, 3); };
    const bool additive = cube(f4->add(a, b)) == f4->add(cube(a), cube(b));
    const bool multiplicative = cube(f4->mul(a, b)) == f4->mul(cube(a), cube(b));
    CHECK_FALSE((additive && multiplicative));
  }
}

TEST_CASE("maps that are not unital or not well-defined are rejected") {
  auto z6 = R("zmod:6");
  CHECK_THROWS_AS(build_endo(z6, "zero", [&](const Element&) { return z6->zero(); }), EndoError);
  CHECK_THROWS_AS(build_endo(z6, "endo:frob"), SpecError);
  CHECK_THROWS_AS(build_endo(z6, "endo:bogus"), SpecError);
}

TEST_CASE("identity powers") {
  auto z8 = R("zmod:8");
  auto id = identity_endo(z8);
  for (const auto& a : z8->elements()) CHECK(id->power_apply(17, a) == a);
}

TEST_CASE("the square-x map on xyq") {
  auto x = R("xyq:gf:2:1:N=8");
  auto e = build_endo(x, "endo:xsq");
  CHECK(x->format(e->apply(x->parse("x+y"))) == "x^2+y");
  CHECK(x->format(e->apply(x->parse("1+x^3+y^2"))) == "1+x^6+y^2");
  CHECK(x->format(e->power_apply(2, x->parse("x"))) == "x^4");
  CHECK(x->is_zero(e->apply(x->parse("x^5"))));
  CHECK_FALSE(e->image_faithful(1, x->parse("x^5")));
  CHECK(e->image_faithful(1, x->parse("x^4")));
}

TEST_CASE("diagonal map on Zmod(2) x Zmod(2)") {
  auto r = R("prod(zmod:2,zmod:2)");
  auto d = build_endo(r, "endo:diag");
  auto inj = is_injective(*d);
  CHECK_FALSE(inj.value);
  REQUIRE(inj.witness.size() == 2);
  CHECK(r->format(inj.witness[0]) == "(0,1)");
  CHECK(r->format(inj.witness[1]) == "(0,0)");
  auto pres = preserves_nonunits(*d);
  CHECK_FALSE(pres.value);
  CHECK(r->format(pres.witness.at(0)) == "(1,0)");
  CHECK(r->format(pres.witness.at(1)) == "(1,1)");
}

TEST_CASE("rigidity and compatibility examples") {
  auto z6 = identity_endo(R("zmod:6"));
  auto z8 = identity_endo(R("zmod:8"));
  auto frob = build_endo(R("gf:2:2"), "endo:frob");
  CHECK(is_rigid(*z6).value);
  auto r8 = is_rigid(*z8);
  CHECK_FALSE(r8.value);
  CHECK(z8->ring()->format(r8.witness.at(0)) == "4");
  CHECK(is_rigid(*frob).value);
  CHECK(is_compatible(*z8).value);
  CHECK(is_compatible(*frob).value);
  CHECK(preserves_nonunits(*frob).value);

  auto d6 = rigid_decomposition_check(*z6);
  CHECK((d6.rigid.value && d6.compatible.value && d6.reduced.value && d6.consistent));
  auto d8 = rigid_decomposition_check(*z8);
  CHECK((!d8.rigid.value && d8.compatible.value && !d8.reduced.value && d8.consistent));
}

TEST_CASE("xyq square-x map predicates are scope-exact") {
  auto e = build_endo(R("xyq:gf:2:1:N=8"), "endo:xsq");
  auto c = is_compatible(*e);
  CHECK(c.value);
  CHECK_FALSE(c.exact);
  CHECK(is_rigid(*e).value);
  CHECK(preserves_nonunits(*e).value);
  CHECK(is_injective(*e).value);
}

TEST_CASE("table endomorphisms") {
  const std::string path = "endo_table_test.txt";
  {
    std::ofstream out(path);
    out << "# frobenius on gf:2:2\n[0,0] -> [0,0]\n[1,0] -> [1,0]\n[0,1] -> [1,1]\n[1,1] -> [0,1]\n";
  }
  auto f4 = R("gf:2:2");
  auto t = build_endo(f4, "endo:table:" + path);
  auto frob = build_endo(f4, "endo:frob");
  for (const auto& a : f4->elements()) CHECK(t->apply(a) == frob->apply(a));
  {
    std::ofstream out(path);
    out << "[0,0] -> [0,0]\n[1,0] -> [1,0]\n";
  }
  CHECK_THROWS_AS(build_endo(f4, "endo:table:" + path), SpecError);
  std::remove(path.c_str());
}

// ---------------------------------------------------------------------------- properties

TEST_CASE("predicates agree with brute force") {
  for (const auto& e : corpus_endos()) {
    CAPTURE(e->ring()->name());
    CAPTURE(e->name());
    CHECK(is_rigid(*e).value == oracle::rigid(*e));
    CHECK(is_compatible(*e).value == oracle::compatible(*e));
    CHECK(is_injective(*e).value == oracle::injective(*e));
    CHECK(preserves_nonunits(*e).value == oracle::preserves_nonunits(*e));
  }
}

TEST_CASE("rigid iff compatible and reduced; rigid implies injective") {
  for (const auto& e : corpus_endos()) {
    CAPTURE(e->name());
    const bool rigid = is_rigid(*e).value;
    CHECK(rigid == (is_compatible(*e).value && is_reduced(*e->ring()).value));
    if (rigid) CHECK(is_injective(*e).value);
    CHECK(rigid_decomposition_check(*e).consistent);
  }
}

TEST_CASE("powers compose") {
  for (const auto& e : corpus_endos()) {
    for (const auto& a : e->ring()->elements()) {
      for (std::uint64_t s : {0u, 1u, 3u, 20u}) {
        for (std::uint64_t t : {0u, 2u, 5u}) {
          CHECK(e->power_apply(s, e->power_apply(t, a)) == e->power_apply(s + t, a));
        }
      }
      CHECK(e->power_apply(5, a) == oracle::iterate(*e, 5, a));
    }
  }
}

TEST_CASE("validated maps are homomorphisms") {
  for (const auto& e : corpus_endos()) {
    const Ring& r = *e->ring();
    CHECK(e->apply(r.one()) == r.one());
    for (const auto& a : r.elements())
      for (const auto& b : r.elements()) {
        CHECK(e->apply(r.add(a, b)) == r.add(e->apply(a), e->apply(b)));
        CHECK(e->apply(r.mul(a, b)) == r.mul(e->apply(a), e->apply(b)));
      }
  }
}
