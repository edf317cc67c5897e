#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "skewarch/error.hpp"
#include "skewarch/skew.hpp"

using namespace skewarch;

namespace {

EndoHandle endo(const char* ring, const char* e = "endo:id") { return build_endo(construct_ring(ring), e); }

std::vector<Element> coeffs(const EndoHandle& e, std::initializer_list<const char*> cs) {
  std::vector<Element> out;
  for (const char* c : cs) out.push_back(e->ring()->parse(c));
  return out;
}

SkewPoly P(const EndoHandle& e, std::initializer_list<const char*> cs) { return SkewPoly(e, coeffs(e, cs)); }
TruncSeries T(const EndoHandle& e, int n, std::initializer_list<const char*> cs) {
  return TruncSeries(e, n, coeffs(e, cs));
}

SkewPoly random_poly(const EndoHandle& e, std::mt19937_64& rng, int max_degree) {
  std::vector<Element> cs;
  const int d = static_cast<int>(rng() % (max_degree + 1));
  for (int i = 0; i <= d; ++i) cs.push_back(e->ring()->random_scope_element(rng));
  return SkewPoly(e, cs);
}

TruncSeries random_series(const EndoHandle& e, std::mt19937_64& rng, int n) {
  std::vector<Element> cs;
  for (int i = 0; i <= n; ++i) cs.push_back(e->ring()->random_scope_element(rng));
  return TruncSeries(e, n, cs);
}

std::vector<EndoHandle> registry_like() {
  return {endo("zmod:6"),
          endo("zmod:8"),
          endo("gf:2:2", "endo:frob"),
          endo("prod(zmod:2,zmod:2)", "endo:diag"),
          endo("gf:3:2", "endo:frob"),
          endo("xyq:gf:2:1:N=8", "endo:xsq")};
}

// Least h in enumeration order (h_0 most significant) with f = h g^n, by exhaustion.
std::optional<std::vector<Element>> brute_divide(const TruncSeries& f, const TruncSeries& g, std::uint64_t n) {
  const Ring& r = f.ring();
  const auto& el = r.elements();
  const std::size_t len = static_cast<std::size_t>(f.precision()) + 1;
  const TruncSeries gn = skew_pow(g, n);
  std::vector<std::size_t> idx(len, 0);
  while (true) {
    std::vector<Element> h;
    for (auto i : idx) h.push_back(el[i]);
    if (skew_mul(TruncSeries(f.endo(), f.precision(), h), gn) == f) return h;
    std::size_t pos = len;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < el.size()) break;
      idx[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
  }
}

}  // namespace

TEST_CASE("polynomial basics") {
  auto e = endo("zmod:6");
  auto f = P(e, {"1", "2", "0", "0"});
  CHECK(f.degree() == 1);
  CHECK(SkewPoly(e, {}).degree() == -1);
  CHECK(SkewPoly(e, coeffs(e, {"0", "0"})).is_zero());
  CHECK(skew_mul(f, poly_constant(e, e->ring()->one())) == f);
  CHECK(skew_mul(poly_constant(e, e->ring()->one()), f) == f);
}

TEST_CASE("twisted product examples") {
  auto frob = endo("gf:2:2", "endo:frob");
  const Ring& f4 = *frob->ring();
  const Element w = f4.parse("[0,1]");
  auto xw = skew_mul(poly_monomial(frob, f4.one(), 1), poly_constant(frob, w));
  CHECK(xw == poly_monomial(frob, f4.mul(w, w), 1));
  auto f2 = endo("gf:2:1");
  CHECK(skew_pow(P(f2, {"1", "1"}), 2) == P(f2, {"1", "0", "1"}));
}

TEST_CASE("mixing different twists fails") {
  auto a = endo("gf:2:2"), b = endo("gf:2:2", "endo:frob");
  CHECK_THROWS_AS(skew_mul(P(a, {"[1,0]"}), P(b, {"[1,0]"})), MismatchError);
}

TEST_CASE("geometric inverse examples") {
  auto f2 = endo("gf:2:1");
  auto gi = geometric_inverse(SkewPoly(f2, {}), 4);
  CHECK(gi.inverse == series_constant(f2, 4, f2->ring()->one()));
  auto g1 = geometric_inverse(P(f2, {"1"}), 4);
  CHECK(g1.inverse == T(f2, 4, {"1", "1", "1", "1", "1"}));
  CHECK_FALSE(g1.terminated_at);
  auto z4 = endo("zmod:4");
  auto g2 = geometric_inverse(P(z4, {"2"}), 4);
  CHECK(g2.inverse == T(z4, 4, {"1", "2"}));
  REQUIRE(g2.terminated_at);
  CHECK(*g2.terminated_at == 2);
}

TEST_CASE("series inverse examples") {
  auto f2 = endo("gf:2:1");
  CHECK(series_inverse(series_constant(f2, 3, f2->ring()->one())) == series_constant(f2, 3, f2->ring()->one()));
  CHECK(series_inverse(T(f2, 3, {"1", "1"})) == T(f2, 3, {"1", "1", "1", "1"}));
  auto z8 = endo("zmod:8");
  try {
    series_inverse(T(z8, 3, {"2", "1"}));
    FAIL("expected NotInvertibleError");
  } catch (const NotInvertibleError& err) {
    CHECK(std::string(err.what()).find("constant term 2 is not a unit") != std::string::npos);
  }
}

TEST_CASE("nilpotency probe examples") {
  auto z4 = endo("zmod:4");
  auto p = nilpotency_probe(P(z4, {"0", "2"}), 4);
  CHECK(p.kind == ProbeKind::nilpotent);
  CHECK(p.index == 2);
  auto f2 = endo("gf:2:1");
  auto t = nilpotency_probe(T(f2, 4, {"0", "1"}), 8);
  CHECK(t.kind == ProbeKind::truncation_artifact);
  CHECK(t.index == 5);
  CHECK(nilpotency_probe(P(f2, {"1", "1"}), 8).kind == ProbeKind::not_within_bound);
}

TEST_CASE("divisibility examples") {
  auto f2 = endo("gf:2:1");
  auto r = solve_right_divisibility(T(f2, 6, {"0", "0", "1"}), T(f2, 6, {"0", "1"}), 2);
  REQUIRE(r.status == DivisibilityStatus::found);
  CHECK(*r.h == T(f2, 6, {"1"}));
  CHECK(solve_right_divisibility(T(f2, 6, {"0", "1"}), T(f2, 6, {"0", "1"}), 2).status == DivisibilityStatus::none);
  auto z = solve_right_divisibility(series_zero(f2, 6), T(f2, 6, {"0", "1", "1"}), 3);
  REQUIRE(z.status == DivisibilityStatus::found);
  CHECK(z.h->is_zero());
}

TEST_CASE("text form round-trips") {
  auto e = endo("gf:2:2", "endo:frob");
  auto f = P(e, {"[1,0]", "[0,0]", "[1,1]"});
  CHECK(format(f) == "[[1,0],[0,0],[1,1]]@gf:2:2:1,1,1;endo:frob");
  CHECK(parse_poly(format(f)) == f);
  auto s = T(e, 5, {"[0,1]", "[1,0]"});
  CHECK(format(s) == "[[0,1],[1,0]]@gf:2:2:1,1,1;endo:frob;N=5");
  CHECK(parse_series(format(s)) == s);
  CHECK(format(SkewPoly(e, {})) == "[]@gf:2:2:1,1,1;endo:frob");
  auto g = parse_series("[x+y,1,x^3]@xyq:gf:2:1:N=8;endo:xsq;N=4");
  CHECK(parse_series(format(g)) == g);
  CHECK_THROWS_AS(parse_poly("[1,2@zmod:6;endo:id"), SpecError);
}

// ---------------------------------------------------------------------------- properties

TEST_CASE("associativity, twist identity and the convolution oracle") {
  std::mt19937_64 rng(11);
  for (const auto& e : registry_like()) {
    CAPTURE(e->ring()->name());
    const Ring& r = *e->ring();
    for (int i = 0; i < 300; ++i) {
      auto f = random_poly(e, rng, 3), g = random_poly(e, rng, 3), h = random_poly(e, rng, 3);
      CHECK(skew_mul(skew_mul(f, g), h) == skew_mul(f, skew_mul(g, h)));
      CHECK(skew_mul(f, skew_add(g, h)) == skew_add(skew_mul(f, g), skew_mul(f, h)));
      const std::size_t limit = static_cast<std::size_t>(std::max(0, f.degree() + g.degree() + 1));
      CHECK(skew_mul(f, g) == SkewPoly(e, oracle::twisted_product(*e, f.coefficients(), g.coefficients(), limit)));
    }
    const SkewPoly x = poly_monomial(e, r.one(), 1);
    for (int i = 0; i < 50; ++i) {
      const Element a = r.random_scope_element(rng);
      CHECK(skew_mul(x, poly_constant(e, a)) == poly_monomial(e, e->apply(a), 1));
    }
  }
}

TEST_CASE("series products match truncated polynomial products") {
  std::mt19937_64 rng(12);
  for (const auto& e : registry_like()) {
    for (int i = 0; i < 100; ++i) {
      auto f = random_poly(e, rng, 5), g = random_poly(e, rng, 5);
      CHECK(skew_mul(to_series(f, 6), to_series(g, 6)) == to_series(skew_mul(f, g), 6));
    }
  }
}

TEST_CASE("geometric and series inverses are exact") {
  std::mt19937_64 rng(13);
  for (const auto& e : registry_like()) {
    CAPTURE(e->ring()->name());
    const Ring& r = *e->ring();
    const TruncSeries one = series_constant(e, 16, r.one());
    for (int i = 0; i < 40; ++i) {
      auto f = random_poly(e, rng, 3);
      auto gi = geometric_inverse(f, 16);
      std::vector<Element> shifted{r.zero()};
      for (const auto& c : f.coefficients()) shifted.push_back(c);
      const SkewPoly fx(e, shifted);
      const TruncSeries u = to_series(skew_add(poly_constant(e, r.one()), fx), 16);
      CHECK(skew_mul(u, gi.inverse) == one);
      CHECK(skew_mul(gi.inverse, u) == one);
      auto probe = nilpotency_probe(fx, 17);
      if (gi.terminated_at) {
        CHECK(probe.kind == ProbeKind::nilpotent);
        CHECK(probe.index == *gi.terminated_at);
      } else {
        CHECK(probe.kind != ProbeKind::nilpotent);
      }
      auto g = random_series(e, rng, 8);
      if (!r.is_unit(g.coefficient(0))) continue;
      auto h = series_inverse(g);
      CHECK(skew_mul(g, h) == series_constant(e, 8, r.one()));
      CHECK(skew_mul(h, g) == series_constant(e, 8, r.one()));
    }
  }
}

TEST_CASE("the divisibility solver returns the least witness") {
  std::mt19937_64 rng(14);
  for (const char* spec : {"zmod:4", "gf:2:1", "zmod:6"}) {
    auto e = endo(spec);
    CAPTURE(spec);
    const int n = std::string(spec) == "zmod:6" ? 2 : 3;
    for (int i = 0; i < 40; ++i) {
      auto f = random_series(e, rng, n), g = random_series(e, rng, n);
      if (i % 2 == 0) f = skew_mul(random_series(e, rng, n), skew_pow(g, 2));
      for (std::uint64_t k = 1; k <= 2; ++k) {
        auto got = solve_right_divisibility(f, g, k);
        auto want = brute_divide(f, g, k);
        REQUIRE(got.status != DivisibilityStatus::budget);
        CHECK((got.status == DivisibilityStatus::found) == want.has_value());
        if (want && got.h) CHECK(got.h->coefficients() == *want);
      }
    }
  }
}

TEST_CASE("twisted divisibility replays") {
  std::mt19937_64 rng(15);
  auto e = endo("gf:2:2", "endo:frob");
  for (int i = 0; i < 30; ++i) {
    auto g = random_series(e, rng, 6), h = random_series(e, rng, 6);
    auto f = skew_mul(h, skew_pow(g, 2));
    auto got = solve_right_divisibility(f, g, 2);
    REQUIRE(got.status == DivisibilityStatus::found);
    CHECK(skew_mul(*got.h, skew_pow(g, 2)) == f);
  }
}
