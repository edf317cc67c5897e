#include <random>

#include "props_internal.hpp"
#include "skewarch/ring_kinds.hpp"
#include "suites_internal.hpp"

namespace skewarch::detail {

namespace {

const std::string kPoly = "R[x;a]";
const std::string kSeries = "R[[x;a]]";

std::string scope_note(bool exact) { return exact ? "exhaustive" : "scope-exact"; }

SkewPoly random_poly(const EndoHandle& e, std::mt19937_64& rng, int max_degree) {
  const Ring& r = *e->ring();
  const int d = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
  std::vector<Element> cs;
  for (int i = 0; i <= d; ++i) cs.push_back(r.random_scope_element(rng));
  return SkewPoly(e, std::move(cs));
}

// Exact witnesses that a condition of a characterization fails, phrased for the
// extension ring it concerns.
Json not_domain_witness(const Ring& r, const Check& domain) {
  Json w;
  w["a"] = r.format(domain.witness.at(0));
  w["b"] = r.format(domain.witness.at(1));
  w["ab"] = r.format(r.zero());
  w["note"] = "constants a, b are nonzero zero-divisors of the extension";
  return w;
}

Json not_injective_witness(const Endo& e, const EndoPredicate& inj) {
  const Ring& r = *e.ring();
  const Element k = r.sub(inj.witness.at(0), inj.witness.at(1));
  Json w;
  w["a"] = r.format(k);
  w["alpha(a)"] = r.format(e.apply(k));
  w["note"] = "x a = alpha(a) x = 0, so a is a nonzero right zero-divisor";
  return w;
}

Json not_rigid_witness(const Endo& e, const EndoPredicate& rigid) {
  const Ring& r = *e.ring();
  const Element& a = rigid.witness.at(0);
  Json w;
  w["a"] = r.format(a);
  w["alpha(a)"] = r.format(e.apply(a));
  w["a*alpha(a)"] = r.format(r.mul(a, e.apply(a)));
  w["note"] = "(a x)^2 = a alpha(a) x^2 = 0 with a x nonzero";
  return w;
}

Json unit_image_witness(const Endo& e, const EndoPredicate& pres) {
  const Ring& r = *e.ring();
  const Element& a = pres.witness.at(0);
  Json w;
  w["a"] = r.format(a);
  w["alpha(a)"] = r.format(e.apply(a));
  w["f"] = "x";
  w["h_n"] = "alpha(a)^-n x";
  w["note"] = "x = alpha(a)^-n x a^n for every n, with a a nonunit";
  return w;
}

Verdict condition_verdict(const std::string& suite, const std::vector<std::pair<std::string, bool>>& conds,
                          const std::optional<Json>& negative, const std::string& tag) {
  std::string listing;
  bool all = true;
  for (const auto& [name, value] : conds) {
    listing += (listing.empty() ? "" : ", ") + name + (value ? " yes" : " no");
    all = all && value;
  }
  if (all) return make_verdict(suite, Status::holds, "every condition holds: " + listing, nullptr, {tag});
  return make_verdict(suite, Status::hypothesis_not_met, "conditions: " + listing,
                      negative ? *negative : Json(nullptr), {tag});
}

// ---------------------------------------------------------------------------- zero-divisor probes on R[x; alpha]

std::vector<Verdict> thm_3_x(EntryContext& ctx, Side side) {
  const auto& e = ctx.endo();
  const Ring& r = *ctx.ring();
  const auto& rep = ctx.classification();
  const bool right = side == Side::right;
  const std::string id = right ? "thm-3-3" : "thm-3-4";
  const std::string tag = right ? "Theorem 3.3" : "Theorem 3.4";
  const Condition& arch = right ? rep.right_archimedean : rep.left_archimedean;
  std::vector<std::pair<std::string, bool>> conds{{to_string(side) + " Archimedean", arch.value},
                                                  {"domain", rep.domain.value},
                                                  {"alpha injective", rep.injective.value}};
  if (right) conds.push_back({"alpha preserves nonunits", rep.preserves_nonunits.value});

  std::optional<Json> negative;
  if (!rep.domain.value) {
    negative = not_domain_witness(r, is_domain(r));
  } else if (!rep.injective.value) {
    negative = not_injective_witness(*e, is_injective(*e));
  } else if (!arch.value) {
    negative = is_archimedean(ctx.ring(), side).witness;
  } else if (right && !rep.preserves_nonunits.value) {
    negative = unit_image_witness(*e, preserves_nonunits(*e));
  }
  std::vector<Verdict> out{condition_verdict(id + "(iii)", conds, negative, tag)};
  const bool predicted = rep.predicted(kPoly, "reduced " + to_string(side) + " Archimedean").value_or(false);
  if (!predicted) return out;

  const ZeroDivisorProbe probe = zero_divisor_probe(e, 6, ctx.config().budget, ctx.config().seed);
  if (probe.witness) {
    Json w;
    w["g"] = format(probe.witness->first);
    w["f"] = format(probe.witness->second);
    w["gf"] = "0";
    Verdict v = make_verdict(id + "(domain-probe)", Status::fails, "nonzero zero-divisor in a predicted domain",
                             std::move(w), {tag});
    v.predicted_holds = true;
    out.push_back(std::move(v));
  } else {
    Verdict v = make_verdict(id + "(domain-probe)", Status::holds_by_theorem,
                             "no nonzero zero-divisor among " + plural(probe.samples, "sampled polynomial") +
                                 " of degree <= 6",
                             nullptr, {tag});
    v.predicted_holds = true;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------- polynomial suites

std::vector<Verdict> suite_prop_3_1(EntryContext& ctx) {
  const auto& e = ctx.endo();
  const Ring& r = *ctx.ring();
  const int N = ctx.config().precision;
  std::mt19937_64 rng(ctx.config().seed);
  const TruncSeries one = series_constant(e, N, r.one());
  std::size_t terminated = 0;
  for (int i = 0; i < 200; ++i) {
    const SkewPoly f = random_poly(e, rng, 3);
    const GeometricInverse gi = geometric_inverse(f, N);
    std::vector<Element> shifted{r.zero()};
    for (const auto& c : f.coefficients()) shifted.push_back(c);
    const SkewPoly fx(e, shifted);
    const TruncSeries unit = to_series(skew_add(poly_constant(e, r.one()), fx), N);
    const NilpotencyProbe probe = nilpotency_probe(fx, static_cast<std::uint64_t>(N) + 1);
    const bool inverse_ok = skew_mul(unit, gi.inverse) == one && skew_mul(gi.inverse, unit) == one;
    const bool index_ok = gi.terminated_at ? probe.kind == ProbeKind::nilpotent && probe.index == *gi.terminated_at
                                           : probe.kind != ProbeKind::nilpotent;
    if (!inverse_ok || !index_ok) {
      Json w;
      w["f"] = format(f);
      w["inverse"] = format(gi.inverse);
      w["terminated_at"] = gi.terminated_at ? Json(*gi.terminated_at) : Json(nullptr);
      w["probe_index"] = probe.kind == ProbeKind::nilpotent ? Json(probe.index) : Json(nullptr);
      Verdict v = make_verdict("prop-3-1", Status::fails,
                               inverse_ok ? "expansion termination disagrees with the nilpotency probe"
                                          : "(1 + f x) times its geometric inverse is not 1",
                               std::move(w), {"Proposition 3.1"});
      v.predicted_holds = true;
      return {v};
    }
    if (gi.terminated_at) ++terminated;
  }
  Verdict v = make_verdict("prop-3-1", Status::holds,
                           "200 seeded f of degree <= 3 at precision " + std::to_string(N) +
                               ": (1 + f x) g = g (1 + f x) = 1 for the geometric inverse g; " +
                               std::to_string(terminated) + " expansions terminate, each at the nilpotency index of f x",
                           nullptr, {"Proposition 3.1"});
  v.predicted_holds = true;
  return {v};
}

std::vector<Verdict> suite_cor_3_2(EntryContext& ctx) {
  const auto& e = ctx.endo();
  const auto& rep = ctx.classification();
  const bool predicted = rep.predicted(kPoly, "reduced right Archimedean").value_or(false) ||
                         rep.predicted(kPoly, "reduced left Archimedean").value_or(false);
  const std::string tag = e->is_identity() ? "Corollary 3.2" : "Proposition 3.1";
  const std::uint64_t samples = predicted ? ctx.config().budget : std::min<std::uint64_t>(ctx.config().budget, 1000);
  std::mt19937_64 rng(ctx.config().seed);
  std::uint64_t zero_divisors = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const ZeroDivisorProbe p = zero_divisor_probe(e, 6, 1, rng());
    if (!p.witness) continue;
    ++zero_divisors;
    const SkewPoly& f = p.witness->second;
    const NilpotencyProbe np = nilpotency_probe(f, 64);
    if (np.kind == ProbeKind::nilpotent) continue;
    Json w;
    w["f"] = format(f);
    w["g"] = format(p.witness->first);
    w["gf"] = "0";
    w["nilpotent"] = false;
    if (predicted) {
      Verdict v = make_verdict("cor-3-2", Status::fails, "a right zero-divisor that is not nilpotent", std::move(w),
                               {tag});
      v.predicted_holds = true;
      return {v};
    }
    w["contrapositive"] = "this zero-divisor is not nilpotent, so R[x;a] is not Archimedean";
    return {make_verdict("cor-3-2", Status::hypothesis_not_met, "R[x;a] is not predicted Archimedean", std::move(w),
                         {tag})};
  }
  const std::string cert = std::to_string(zero_divisors) + " certified zero-divisors among " +
                           plural(samples, "sampled polynomial") + " of degree <= 6, each nilpotent";
  if (!predicted) return {make_verdict("cor-3-2", Status::hypothesis_not_met, cert, nullptr, {tag})};
  Verdict v = make_verdict("cor-3-2", Status::holds_by_theorem, cert, nullptr, {tag});
  v.predicted_holds = true;
  return {v};
}

std::vector<Verdict> suite_thm_3_3(EntryContext& ctx) { return thm_3_x(ctx, Side::right); }
std::vector<Verdict> suite_thm_3_4(EntryContext& ctx) { return thm_3_x(ctx, Side::left); }

// ---------------------------------------------------------------------------- series suites

std::vector<Verdict> suite_prop_4_1(EntryContext& ctx) {
  const EndoPredicate rigid = is_rigid(*ctx.endo());
  const Verdict& s = ctx.sampler();
  const std::vector<std::string> tags{"Proposition 4.1"};
  const std::string scope = scope_note(rigid.exact);
  if (rigid.value) {
    if (s.status == Status::fails) {
      Verdict v = make_verdict("prop-4-1", Status::fails, "alpha is rigid (" + scope + ") but the sampler found " +
                                                              "a nonzero nilpotent", s.witness, tags);
      v.predicted_holds = true;
      return {v};
    }
    Verdict v = make_verdict("prop-4-1", Status::holds_by_theorem,
                             "alpha is rigid (" + scope + "); sampler: " + s.certificate, nullptr, tags);
    v.predicted_holds = true;
    return {v};
  }
  Json w = s.witness.is_object() ? s.witness : Json::object();
  w["rigidity_witness"] = not_rigid_witness(*ctx.endo(), rigid);
  if (s.status == Status::fails) {
    return {make_verdict("prop-4-1", Status::holds,
                         "alpha is not rigid and R[[x;a]] has a nonzero nilpotent: both sides of the equivalence fail",
                         std::move(w), tags)};
  }
  return {make_verdict("prop-4-1", Status::inconclusive_at_scale,
                       "alpha is not rigid but the sampler found no faithful nonzero nilpotent: " + s.certificate,
                       std::move(w), tags)};
}

namespace {

std::vector<Verdict> thm_4_x(EntryContext& ctx, Side side) {
  const auto& e = ctx.endo();
  const auto& rep = ctx.classification();
  const bool right = side == Side::right;
  const std::string id = right ? "thm-4-4" : "thm-4-5";
  const std::string tag = right ? "Theorem 4.4" : "Theorem 4.5";
  const Condition& arch = right ? rep.right_archimedean : rep.left_archimedean;
  std::vector<std::pair<std::string, bool>> conds{{to_string(side) + " Archimedean", arch.value},
                                                  {"alpha rigid", rep.rigid.value}};
  if (right) conds.push_back({"alpha preserves nonunits", rep.preserves_nonunits.value});
  std::optional<Json> negative;
  if (!rep.rigid.value) {
    negative = not_rigid_witness(*e, is_rigid(*e));
  } else if (!arch.value) {
    negative = is_archimedean(ctx.ring(), side).witness;
  } else if (right && !rep.preserves_nonunits.value) {
    negative = unit_image_witness(*e, preserves_nonunits(*e));
  }
  std::vector<Verdict> out{condition_verdict(id + "(ii)", conds, negative, tag)};
  const bool predicted = rep.predicted(kSeries, "reduced " + to_string(side) + " Archimedean").value_or(false);

  Verdict reduced = renamed(ctx.sampler(), id + "(reduced)");
  reduced.predicted_holds = predicted;
  if (predicted && reduced.status == Status::inconclusive_at_scale) reduced.status = Status::holds_by_theorem;
  out.push_back(std::move(reduced));

  const bool mirrored = !right && e->is_identity() && ctx.ring()->is_commutative();
  if (right || mirrored) {
    Verdict arch_probe = renamed(ctx.falsifier(), id + "(archimedean)");
    if (mirrored) arch_probe.certificate += "; commutative ring, so left and right divisibility coincide";
    out.push_back(std::move(arch_probe));
  } else {
    Verdict v = make_verdict(id + "(archimedean)", predicted ? Status::holds_by_theorem : Status::inconclusive_at_scale,
                             "the falsifier searches right divisibility only; left side not probed", nullptr, {tag});
    v.predicted_holds = predicted;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<Verdict> suite_thm_4_4(EntryContext& ctx) { return thm_4_x(ctx, Side::right); }
std::vector<Verdict> suite_thm_4_5(EntryContext& ctx) { return thm_4_x(ctx, Side::left); }

std::vector<Verdict> suite_cor_4_6(EntryContext& ctx) {
  const std::vector<std::string> tags{"Corollary 4.6"};
  if (!ctx.endo()->is_identity()) {
    return {make_verdict("cor-4-6", Status::hypothesis_not_met, "the twist is not the identity", nullptr, tags)};
  }
  const auto& rep = ctx.classification();
  const Verdict& fals = ctx.falsifier();
  const Verdict& samp = ctx.sampler();
  std::vector<Verdict> out;
  for (Side side : {Side::right, Side::left}) {
    const std::string suite = "cor-4-6(" + to_string(side) + ")";
    const bool arch = side == Side::right ? rep.right_archimedean.value : rep.left_archimedean.value;
    const bool probed = side == Side::right || ctx.ring()->is_commutative();
    const std::string conds = std::string("reduced ") + (rep.reduced.value ? "yes" : "no") + ", " + to_string(side) +
                              " Archimedean " + (arch ? "yes" : "no");
    const Verdict* failure = samp.status == Status::fails ? &samp
                             : probed && fals.status == Status::fails ? &fals
                                                                      : nullptr;
    if (rep.reduced.value && arch) {
      Verdict v = failure ? make_verdict(suite, Status::fails, conds + "; probe found: " + failure->certificate,
                                         failure->witness, tags)
                          : make_verdict(suite, Status::holds_by_theorem,
                                         conds + "; no nilpotent and no divisibility witness within the probe budget",
                                         nullptr, tags);
      v.predicted_holds = true;
      out.push_back(std::move(v));
    } else {
      out.push_back(make_verdict(suite, Status::hypothesis_not_met,
                                 conds + (failure ? "; the conclusion fails too: " + failure->certificate : ""),
                                 failure ? failure->witness : Json(nullptr), tags));
    }
  }
  return out;
}

std::vector<Verdict> suite_examples_4_8_9(EntryContext& ctx) {
  const std::vector<std::string> tags{"Example 4.8", "Example 4.9"};
  const auto* xyq = as_xy_quotient(*ctx.ring());
  if (!xyq) {
    return {make_verdict("examples-4-8-9", Status::hypothesis_not_met, "applies to xyq registry rings only", nullptr,
                         tags)};
  }
  const auto& e = ctx.endo();
  const Ring& r = *ctx.ring();
  const int N = ctx.config().precision;
  std::vector<Verdict> out;

  const Check red = is_reduced(r);
  out.push_back(red.value ? make_verdict("examples-4-8-9(reduced)", Status::holds,
                                         "scope-exact: no nonzero nilpotent among " +
                                             plural(r.scope_elements().size(), "scope element"),
                                         nullptr, {"Example 4.8"})
                          : make_verdict("examples-4-8-9(reduced)", Status::fails, "nonzero nilpotent",
                                         detail::element_list(r, red.witness), {"Example 4.8"}));
  out.back().predicted_holds = true;
  out.push_back(renamed(is_archimedean(ctx.ring(), Side::right), "examples-4-8-9(archimedean)"));

  // x and y are nonzero with xy = 0, also as constants of R[[t; alpha]].
  const Element x = xyq->x_power(1), y = xyq->y_power(1);
  const TruncSeries sx = series_constant(e, N, x), sy = series_constant(e, N, y);
  const TruncSeries sxy = skew_mul(sx, sy);
  Json dw;
  dw["a"] = r.format(x);
  dw["b"] = r.format(y);
  dw["ab"] = format_coefficients(r, sxy.coefficients());
  const bool zero = sxy.is_zero() && product_faithful(sx, sy);
  out.push_back(make_verdict("examples-4-8-9(not-domain)", zero ? Status::holds : Status::fails,
                             zero ? "x y = 0 exactly: R[[t;a]] is not a domain" : "x y is not 0", std::move(dw),
                             {"Example 4.8"}));
  out.back().predicted_holds = true;

  if (!e->is_identity()) {
    const EndoPredicate rigid = is_rigid(*e);
    const EndoPredicate pres = preserves_nonunits(*e);
    out.push_back(make_verdict("examples-4-8-9(endomorphism)", Status::holds,
                               e->name() + " validates as a unital ring endomorphism", nullptr, {"Example 4.9"}));
    out.push_back(rigid.value ? make_verdict("examples-4-8-9(rigid)", Status::holds,
                                             "scope-exact over " + plural(rigid.tested, "element"), nullptr,
                                             {"Example 4.9"})
                              : make_verdict("examples-4-8-9(rigid)", Status::fails, "a alpha(a) = 0 with a nonzero",
                                             detail::element_list(r, rigid.witness), {"Example 4.9"}));
    out.back().predicted_holds = true;
    out.push_back(pres.value ? make_verdict("examples-4-8-9(preserves-nonunits)", Status::holds,
                                            "scope-exact over " + plural(pres.tested, "element"), nullptr,
                                            {"Example 4.9"})
                             : make_verdict("examples-4-8-9(preserves-nonunits)", Status::fails,
                                            "a nonunit maps to a unit", detail::element_list(r, pres.witness),
                                            {"Example 4.9"}));
    out.back().predicted_holds = true;
    // t x = alpha(x) t, while x t keeps x on the left.
    const TruncSeries t = series_monomial(e, N, r.one(), 1);
    const TruncSeries tx = skew_mul(t, sx), xt = skew_mul(sx, t);
    Json nw;
    nw["t*x"] = format_coefficients(r, tx.coefficients());
    nw["x*t"] = format_coefficients(r, xt.coefficients());
    const bool differ = !(tx == xt);
    out.push_back(make_verdict("examples-4-8-9(noncommutative)", differ ? Status::holds : Status::fails,
                               differ ? "t x = alpha(x) t differs from x t: R[[t;a]] is not commutative, although R is"
                                      : "t x = x t",
                               std::move(nw), {"Example 4.9"}));
    out.back().predicted_holds = true;
  }

  ProbeConfig pc = ctx.probe();
  pc.depth = 4;
  const Verdict fals = pc.depth == ctx.config().depth ? ctx.falsifier() : archimedean_falsifier(e, pc);
  out.push_back(renamed(fals, "examples-4-8-9(falsifier)"));
  out.push_back(renamed(to_verdict(ctx.classification()), "examples-4-8-9(classify)"));
  return out;
}

}  // namespace skewarch::detail
