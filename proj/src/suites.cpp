#include "skewarch/suites.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <random>
#include <thread>

#include "props_internal.hpp"
#include "suites_internal.hpp"

namespace skewarch {

namespace detail {

const ClassificationReport& EntryContext::classification() {
  if (!classification_) classification_ = classify(endo());
  return *classification_;
}

const Verdict& EntryContext::falsifier() {
  if (!falsifier_) falsifier_ = archimedean_falsifier(endo(), probe());
  return *falsifier_;
}

const Verdict& EntryContext::sampler() {
  if (!sampler_) sampler_ = nilpotent_sampler(endo(), probe());
  return *sampler_;
}

Verdict renamed(Verdict v, std::string suite) {
  v.suite = std::move(suite);
  return v;
}

Verdict aggregate(std::string suite, const std::vector<Verdict>& parts, const std::string& what,
                  std::vector<std::string> tags) {
  std::size_t holds = 0;
  for (const auto& p : parts) {
    if (p.status == Status::fails) {
      Verdict v = renamed(p, suite);
      v.certificate = what + ": " + p.certificate;
      v.theorem_tags = tags;
      return v;
    }
    if (is_holds(p.status)) ++holds;
  }
  const std::string cert = std::to_string(holds) + " of " + plural(parts.size(), what) + " meet the hypothesis and hold";
  if (holds > 0) return make_verdict(std::move(suite), Status::holds, cert, nullptr, std::move(tags));
  const Status s = parts.empty() ? Status::hypothesis_not_met : parts.front().status;
  return make_verdict(std::move(suite), s, cert, parts.empty() ? Json(nullptr) : parts.front().witness,
                      std::move(tags));
}

namespace {

// ---------------------------------------------------------------------------- arithmetic

Verdict arithmetic_verdict(const std::string& name, const std::optional<Json>& violation, const std::string& scope) {
  Verdict v = violation ? make_verdict(name, Status::fails, "identity violated", *violation)
                        : make_verdict(name, Status::holds, "no violation: " + scope);
  v.predicted_holds = true;
  return v;
}

std::vector<Element> sample_elements(const Ring& r, std::mt19937_64& rng, std::size_t n) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(r.random_element(rng));
  return out;
}

Verdict ring_axioms(const Ring& r, std::uint64_t seed) {
  std::vector<std::array<Element, 3>> triples;
  std::string scope;
  if (r.is_finite() && *r.cardinality() <= 32) {
    const auto& el = r.elements();
    for (const auto& a : el)
      for (const auto& b : el)
        for (const auto& c : el) triples.push_back({a, b, c});
    scope = "exhaustive over all " + plural(triples.size(), "triple");
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 1000; ++i) {
      auto s = sample_elements(r, rng, 3);
      triples.push_back({s[0], s[1], s[2]});
    }
    scope = "1000 seeded triples";
  }
  const Element zero = r.zero(), one = r.one();
  for (const auto& [a, b, c] : triples) {
    const bool ok = r.add(r.add(a, b), c) == r.add(a, r.add(b, c)) && r.add(a, b) == r.add(b, a) &&
                    r.add(a, zero) == a && r.add(a, r.neg(a)) == zero &&
                    r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)) && r.mul(a, one) == a && r.mul(one, a) == a &&
                    r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)) &&
                    r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c));
    if (!ok) return arithmetic_verdict("ring-axioms", Json{{"a", r.format(a)}, {"b", r.format(b)}, {"c", r.format(c)}}, "");
  }
  return arithmetic_verdict("ring-axioms", std::nullopt, scope);
}

Verdict endo_validation(const Endo& e, std::uint64_t seed) {
  const Ring& r = *e.ring();
  std::vector<std::pair<Element, Element>> pairs;
  std::string scope;
  if (r.is_finite()) {
    for (const auto& a : r.elements())
      for (const auto& b : r.elements()) pairs.emplace_back(a, b);
    scope = "exhaustive over all " + plural(pairs.size(), "pair");
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < 1000; ++i) {
      auto s = sample_elements(r, rng, 2);
      pairs.emplace_back(s[0], s[1]);
    }
    scope = "1000 seeded pairs";
  }
  if (e.apply(r.one()) != r.one()) return arithmetic_verdict("endo-validation", Json{{"a", r.format(r.one())}}, "");
  for (const auto& [a, b] : pairs) {
    if (e.apply(r.add(a, b)) != r.add(e.apply(a), e.apply(b)) || e.apply(r.mul(a, b)) != r.mul(e.apply(a), e.apply(b)))
      return arithmetic_verdict("endo-validation", Json{{"a", r.format(a)}, {"b", r.format(b)}}, "");
  }
  return arithmetic_verdict("endo-validation", std::nullopt, scope);
}

Verdict twist_identity(const EndoHandle& e) {
  const Ring& r = *e->ring();
  const SkewPoly x = poly_monomial(e, r.one(), 1);
  for (const auto& a : r.scope_elements()) {
    const SkewPoly lhs = skew_mul(x, poly_constant(e, a));
    const SkewPoly rhs = poly_monomial(e, e->apply(a), 1);
    if (!(lhs == rhs)) return arithmetic_verdict("twist-identity", Json{{"a", r.format(a)}}, "");
  }
  return arithmetic_verdict("twist-identity", std::nullopt,
                            "x a = alpha(a) x for " + plural(r.scope_elements().size(), "scope element"));
}

SkewPoly random_poly(const EndoHandle& e, std::mt19937_64& rng, int max_degree) {
  const Ring& r = *e->ring();
  const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
  std::vector<Element> cs;
  for (int i = 0; i <= d; ++i) cs.push_back(r.random_scope_element(rng));
  return SkewPoly(e, std::move(cs));
}

Verdict skew_associativity(const EndoHandle& e, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 1000; ++i) {
    const SkewPoly f = random_poly(e, rng, 3), g = random_poly(e, rng, 3), h = random_poly(e, rng, 3);
    if (!(skew_mul(skew_mul(f, g), h) == skew_mul(f, skew_mul(g, h))))
      return arithmetic_verdict("skew-associativity", Json{{"f", format(f)}, {"g", format(g)}, {"h", format(h)}}, "");
  }
  return arithmetic_verdict("skew-associativity", std::nullopt, "1000 seeded triples of degree <= 3");
}

// Coefficient k of f g is sum_{i+j=k} f_i alpha^i(g_j), with alpha^i applied i times.
Verdict product_oracle(const EndoHandle& e, std::uint64_t seed) {
  const Ring& r = *e->ring();
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 1000; ++i) {
    const SkewPoly f = random_poly(e, rng, 4), g = random_poly(e, rng, 4);
    std::vector<Element> cs(static_cast<std::size_t>(std::max(0, f.degree() + g.degree() + 1)), r.zero());
    for (int a = 0; a <= f.degree(); ++a) {
      for (int b = 0; b <= g.degree(); ++b) {
        Element t = g.coefficient(static_cast<std::size_t>(b));
        for (int s = 0; s < a; ++s) t = e->apply(t);
        cs[static_cast<std::size_t>(a + b)] = r.add(cs[static_cast<std::size_t>(a + b)], r.mul(f.coefficient(a), t));
      }
    }
    if (!(skew_mul(f, g) == SkewPoly(e, cs)))
      return arithmetic_verdict("product-oracle", Json{{"f", format(f)}, {"g", format(g)}}, "");
  }
  return arithmetic_verdict("product-oracle", std::nullopt,
                            "1000 seeded pairs of degree <= 4 against the termwise twisted convolution");
}

Verdict series_inverse_check(const EndoHandle& e, int precision, std::uint64_t seed) {
  const Ring& r = *e->ring();
  std::vector<Element> units;
  for (const auto& a : r.scope_elements())
    if (r.is_unit(a)) units.push_back(a);
  std::mt19937_64 rng(seed);
  const TruncSeries one = series_constant(e, precision, r.one());
  for (int i = 0; i < 200; ++i) {
    std::vector<Element> cs;
    cs.push_back(units[rng() % units.size()]);
    for (int k = 1; k <= precision; ++k) cs.push_back(r.random_scope_element(rng));
    const TruncSeries g(e, precision, std::move(cs));
    const TruncSeries inv = series_inverse(g);
    if (!(skew_mul(g, inv) == one) || !(skew_mul(inv, g) == one))
      return arithmetic_verdict("series-inverse", Json{{"g", format(g)}, {"inverse", format(inv)}}, "");
  }
  return arithmetic_verdict("series-inverse", std::nullopt,
                            "200 seeded series with unit constant term at precision " + std::to_string(precision) +
                                ": g g^-1 = g^-1 g = 1");
}

}  // namespace

std::vector<Verdict> suite_arithmetic(EntryContext& ctx) {
  const auto seed = ctx.config().seed;
  return {ring_axioms(*ctx.ring(), seed),       endo_validation(*ctx.endo(), seed),
          twist_identity(ctx.endo()),           skew_associativity(ctx.endo(), seed),
          product_oracle(ctx.endo(), seed),     series_inverse_check(ctx.endo(), ctx.config().precision, seed)};
}

// ---------------------------------------------------------------------------- coefficient-ring suites

std::vector<Verdict> suite_lemma_2_3(EntryContext& ctx) { return lemma_2_3_suite(ctx.ring()); }

std::vector<Verdict> suite_prop_2_2(EntryContext& ctx) {
  const RingHandle& r = ctx.ring();
  if (!r->is_finite()) {
    return {make_verdict("prop-2-2", Status::inconclusive_at_scale, r->name() + " is not enumerated", nullptr,
                         {"Proposition 2.2"})};
  }
  std::vector<Verdict> parts{proposition_2_2_check(subring_generated(r, {}), r)};
  for (const auto& a : r->elements()) parts.push_back(proposition_2_2_check(subring_generated(r, {a}), r));
  return {aggregate("prop-2-2", parts, "subring", {"Proposition 2.2"})};
}

std::vector<Verdict> suite_remark_2_4(EntryContext& ctx) { return {remark_2_4_check(ctx.ring())}; }

std::vector<Verdict> suite_lemma_4_2(EntryContext& ctx) { return {lemma_4_2_check(*ctx.endo())}; }

std::vector<Verdict> suite_lemma_4_3(EntryContext& ctx) {
  const Ring& r = *ctx.ring();
  int n_max = 2;
  if (r.is_finite()) {
    const std::size_t q = *r.cardinality();
    if (q * q * q <= 300) n_max = 3;
  }
  return {lemma_4_3_bruteforce(ctx.endo(), n_max, 3, 3)};
}

std::vector<Verdict> suite_prop_4_7(EntryContext& ctx) {
  const RingHandle& r = ctx.ring();
  const std::vector<std::string> tags{"Proposition 4.7"};
  if (!r->is_finite() || !r->is_commutative()) {
    std::vector<Verdict> out;
    for (const char* c : {"a", "b", "c"}) {
      out.push_back(make_verdict(std::string("prop-4-7(") + c + ")",
                                 r->is_finite() ? Status::hypothesis_not_met : Status::inconclusive_at_scale,
                                 r->name() + (r->is_finite() ? " is not commutative" : " is not enumerated"), nullptr,
                                 tags));
    }
    return out;
  }
  const auto ideals = two_sided_ideals(*r);
  std::vector<std::vector<Verdict>> per_clause(3);
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t j = i; j < ideals.size(); ++j) {
      auto vs = quotient_intersection_check(r, ideals[i], ideals[j]);
      for (std::size_t c = 0; c < 3; ++c) per_clause[c].push_back(std::move(vs[c]));
    }
  }
  std::vector<Verdict> out;
  for (std::size_t c = 0; c < 3; ++c) {
    const std::string suite = std::string("prop-4-7(") + static_cast<char>('a' + c) + ")";
    out.push_back(aggregate(suite, per_clause[c], "ideal pair", tags));
  }
  return out;
}

std::vector<Verdict> suite_classify(EntryContext& ctx) { return {to_verdict(ctx.classification())}; }

std::vector<Verdict> suite_falsify(EntryContext& ctx) { return {ctx.falsifier()}; }

}  // namespace detail

// ---------------------------------------------------------------------------- zero-divisor probe

ZeroDivisorProbe zero_divisor_probe(const EndoHandle& endo, int max_degree, std::uint64_t samples,
                                    std::uint64_t seed) {
  const Ring& r = *endo->ring();
  std::vector<Element> constants;
  // Truncated models: monomial annihilator candidates only.
  for (const auto& a : r.scope_elements()) {
    if (r.is_zero(a)) continue;
    if (r.is_finite() || std::count_if(a.coords.begin(), a.coords.end(), [](auto c) { return c != 0; }) == 1)
      constants.push_back(a);
  }
  auto genuine_zero = [&](const SkewPoly& g, const SkewPoly& f) {
    if (!skew_mul(g, f).is_zero()) return false;
    for (int i = 0; i <= g.degree(); ++i)
      for (int j = 0; j <= f.degree(); ++j)
        if (!endo->twisted_product_faithful(g.coefficient(i), static_cast<std::uint64_t>(i), f.coefficient(j)))
          return false;
    return true;
  };
  std::mt19937_64 rng(seed);
  auto sample = [&] {
    while (true) {
      const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
      std::vector<Element> cs;
      for (int i = 0; i <= d; ++i) cs.push_back(r.random_scope_element(rng));
      SkewPoly p(endo, std::move(cs));
      if (!p.is_zero()) return p;
    }
  };
  ZeroDivisorProbe out;
  for (; out.samples < samples; ++out.samples) {
    const SkewPoly f = sample();
    for (const auto& c : constants) {
      const SkewPoly g = poly_constant(endo, c);
      if (genuine_zero(g, f)) {
        out.witness.emplace(g, f);
        return out;
      }
    }
    const SkewPoly g = sample();
    if (genuine_zero(g, f)) {
      out.witness.emplace(g, f);
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------- driver

std::vector<SuiteReport> run_suites(const std::vector<const RegistryEntry*>& entries,
                                    const std::vector<std::string>& suites, const RunConfig& config) {
  using namespace detail;
  static const std::map<std::string, SuiteFn> table = {
      {"arithmetic", suite_arithmetic}, {"lemma-2-3", suite_lemma_2_3}, {"prop-2-2", suite_prop_2_2},
      {"remark-2-4", suite_remark_2_4}, {"prop-3-1", suite_prop_3_1},   {"cor-3-2", suite_cor_3_2},
      {"thm-3-3", suite_thm_3_3},       {"thm-3-4", suite_thm_3_4},     {"prop-4-1", suite_prop_4_1},
      {"lemma-4-2", suite_lemma_4_2},   {"lemma-4-3", suite_lemma_4_3}, {"thm-4-4", suite_thm_4_4},
      {"thm-4-5", suite_thm_4_5},       {"cor-4-6", suite_cor_4_6},     {"prop-4-7", suite_prop_4_7},
      {"examples-4-8-9", suite_examples_4_8_9}, {"classify", suite_classify}, {"falsify", suite_falsify}};
  std::vector<std::vector<SuiteReport>> per_entry(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());
  auto work = [&](std::size_t i) {
    try {
      EntryContext ctx(resolve(*entries[i]), config);
      for (const auto& s : suites) per_entry[i].push_back({entries[i]->id, s, table.at(s)(ctx)});
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const std::size_t jobs = std::min(static_cast<std::size_t>(std::max(1, config.jobs)), entries.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) work(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<SuiteReport> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    for (auto& r : per_entry[i]) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace skewarch
