// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "skewarch/props.hpp"
#include "skewarch/registry.hpp"
#include "skewarch/ring_props.hpp"
#include "skewarch/skew.hpp"
#include "skewarch/suites.hpp"

using namespace skewarch;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::vector<const RegistryEntry*> all_entries() {
  std::vector<const RegistryEntry*> out;
  for (const auto& e : registry_list()) out.push_back(&e);
  return out;
}

Outcome finite_ground_truth() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const char* s : {"zmod:8", "gf:2:2", "gf:5:1"})
    for (Side side : {Side::right, Side::left})
      o.require(is_archimedean(construct_ring(s), side).status == Status::holds, std::string(s) + " should hold");
  for (Side side : {Side::right, Side::left}) {
    const auto z6 = is_archimedean(construct_ring("zmod:6"), side);
    o.require(z6.status == Status::fails && z6.witness.at("a") == "2" && z6.witness.at("stabilized") == "{0,2,4}",
              "zmod:6 witness");
    const auto p = is_archimedean(construct_ring("prod(zmod:2,zmod:2)"), side);
    o.require(p.status == Status::fails && p.witness.at("a") == "(1,0)", "prod witness");
  }
  const double s = seconds_since(t0);
  o.require(s < 1.0, "runtime " + std::to_string(s) + " s");
  return o;
}

Outcome lemma_2_3_on_registry() {
  Outcome o;
  for (const auto& e : registry_list()) {
    const auto r = resolve(e).ring;
    const auto right = is_archimedean(r, Side::right).status, left = is_archimedean(r, Side::left).status;
    if (right != Status::holds && left != Status::holds) continue;
    for (const auto& v : lemma_2_3_suite(r)) o.require(v.status == Status::holds, e.id + " " + v.suite);
  }
  bool idempotent3 = false;
  for (const auto& v : lemma_2_3_suite(construct_ring("zmod:6")))
    if (v.suite == "lemma-2-3(c)" && v.status == Status::hypothesis_not_met && v.witness.contains("idempotent"))
      idempotent3 = v.witness.at("idempotent") == "3";
  o.require(idempotent3, "zmod:6 idempotent witness");
  return o;
}

Outcome remark_2_4_census_check() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto v = remark_2_4_census(3);
  o.require(v.status == Status::holds, v.certificate);
  const double s = seconds_since(t0);
  o.require(s < 10.0, "runtime " + std::to_string(s) + " s");
  return o;
}

Outcome rigidity_biconditional() {
  Outcome o;
  for (const auto& e : registry_list()) {
    const auto re = resolve(e);
    const bool rigid = is_rigid(*re.endo).value;
    const bool rhs = is_compatible(*re.endo).value && is_reduced(*re.ring).value;
    o.require(rigid == rhs, e.id);
    if (re.ring->is_finite()) o.require(is_rigid(*re.endo).exact, e.id + " not exhaustive");
  }
  return o;
}

Outcome geometric_inverse_check() {
  Outcome o;
  constexpr int N = 16;
  for (const auto& e : registry_list()) {
    const auto re = resolve(e);
    const Ring& r = *re.ring;
    std::mt19937_64 rng(42);
    const TruncSeries one = series_constant(re.endo, N, r.one());
    for (int i = 0; i < 200; ++i) {
      const int d = static_cast<int>(rng() % 4);
      std::vector<Element> fx{r.zero()};
      for (int k = 0; k <= d; ++k) fx.push_back(r.random_scope_element(rng));
      const SkewPoly f(re.endo, std::vector<Element>(fx.begin() + 1, fx.end()));
      const SkewPoly fxp(re.endo, fx);
      const auto gi = geometric_inverse(f, N);
      const TruncSeries unit = to_series(skew_add(poly_constant(re.endo, r.one()), fxp), N);
      o.require(skew_mul(unit, gi.inverse) == one, e.id + " inverse of 1 + " + format(fxp));
      if (gi.terminated_at) {
        const auto probe = nilpotency_probe(fxp, N + 1);
        o.require(probe.kind == ProbeKind::nilpotent && probe.index == *gi.terminated_at, e.id + " probe index");
        // Independent index: least k with (fx)^k = 0 by repeated multiplication.
        SkewPoly p = fxp;
        std::uint64_t k = 1;
        while (!p.is_zero()) p = skew_mul(p, fxp), ++k;
        o.require(k == *gi.terminated_at, e.id + " power index");
      }
    }
  }
  return o;
}

Outcome lemma_4_3_check() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto v = lemma_4_3_bruteforce(identity_endo(construct_ring("zmod:6")), 3, 3, 3);
  o.require(v.status == Status::holds, v.certificate);
  const double s = seconds_since(t0);
  o.require(s < 30.0, "runtime " + std::to_string(s) + " s");
  return o;
}

Outcome example_4_9() {
  Outcome o;
  const auto* entry = find_entry("xyq:gf:2:1:N=8;endo:xsq");
  o.require(entry != nullptr, "registry entry missing");
  if (!entry) return o;
  RunConfig config;
  config.depth = 4;
  config.budget = 10000;
  const auto reports = run_suites({entry}, {"examples-4-8-9"}, config);
  auto status = [&](const std::string& part) -> const Verdict* {
    for (const auto& v : reports.at(0).verdicts)
      if (v.suite == "examples-4-8-9(" + part + ")") return &v;
    return nullptr;
  };
  for (const char* part : {"endomorphism", "rigid", "preserves-nonunits"}) {
    const Verdict* v = status(part);
    o.require(v && v->status == Status::holds, part);
  }
  const Verdict* nd = status("not-domain");
  o.require(nd && nd->status == Status::holds && nd->witness.at("a") == "x" && nd->witness.at("b") == "y", "not-domain");
  const Verdict* nc = status("noncommutative");
  o.require(nc && nc->status == Status::holds && nc->witness.at("t*x") != nc->witness.at("x*t"), "noncommutative");
  const Verdict* fz = status("falsifier");
  o.require(fz && fz->status != Status::fails, "falsifier");
  const Verdict* cl = status("classify");
  o.require(cl && cl->status == Status::holds_by_theorem, "classify");
  if (cl) {
    const auto& t = cl->theorem_tags;
    o.require(std::find(t.begin(), t.end(), "Theorem 4.4") != t.end() &&
                  std::find(t.begin(), t.end(), "Theorem 4.5") != t.end(),
              "classify tags");
  }
  return o;
}

Outcome negative_series_control() {
  Outcome o;
  const auto e = identity_endo(construct_ring("zmod:6"));
  ProbeConfig pc;
  pc.depth = 5;
  const auto v = archimedean_falsifier(e, pc);
  o.require(v.status == Status::fails, "no witness");
  if (v.status != Status::fails) return o;
  o.require(v.witness.at("f") == "[2]" && v.witness.at("g") == "[2]", "witness " + v.witness.dump());
  const int n = v.witness.at("precision").get<int>();
  const TruncSeries f = parse_series(e, n, "[2]"), g = parse_series(e, n, "[2]");
  std::uint64_t k = 1;
  for (const auto& h : v.witness.at("h")) {
    o.require(skew_mul(parse_series(e, n, h.get<std::string>()), skew_pow(g, k)) == f, "replay");
    ++k;
  }
  o.require(k == 6, "depth");
  return o;
}

Outcome proposition_4_7() {
  Outcome o;
  const auto r = construct_ring("zmod:6");
  const auto i1 = make_subset(*r, std::vector<Element>{r->parse("0"), r->parse("2"), r->parse("4")});
  const auto i2 = make_subset(*r, std::vector<Element>{r->parse("0"), r->parse("3")});
  const auto v = quotient_intersection_check(r, i1, i2);
  o.require(v.size() == 3, "clause count");
  if (v.size() != 3) return o;
  o.require(v[0].status == Status::holds, "(a)");
  o.require(v[1].status == Status::holds, "(b)");
  o.require(v[2].status == Status::hypothesis_not_met, "(c)");
  return o;
}

Outcome induction_audit_check() {
  Outcome o;
  const auto z8 = identity_endo(construct_ring("zmod:8"));
  const Ring& r8 = *z8->ring();
  const TruncSeries f0 = series_zero(z8, 3), g8 = parse_series(z8, 3, "[2]");
  std::size_t replayed = 0;
  // Every constant h_list that replays f = h_n g^n for n = 1..3.
  for (const auto& a : r8.elements())
    for (const auto& b : r8.elements())
      for (const auto& c : r8.elements()) {
        const std::vector<TruncSeries> hs{series_constant(z8, 3, a), series_constant(z8, 3, b),
                                          series_constant(z8, 3, c)};
        bool ok = true;
        for (std::uint64_t n = 1; n <= 3; ++n) ok = ok && skew_mul(hs[n - 1], skew_pow(g8, n)) == f0;
        if (!ok) continue;
        ++replayed;
        const auto v = induction_audit(f0, g8, hs, 3);
        const bool derived = v.witness.is_object() && v.witness.contains("derived") &&
                             !v.witness.at("derived").empty() && v.witness.at("derived").at(0) == "f_0 = 0";
        o.require(derived, "zmod:8 h_list " + r8.format(a) + "," + r8.format(b) + "," + r8.format(c));
      }
  o.require(replayed > 0, "no replayed h_list");

  const auto z6 = identity_endo(construct_ring("zmod:6"));
  const TruncSeries two = parse_series(z6, 3, "[2]");
  const auto v = induction_audit(two, two, {parse_series(z6, 3, "[1]"), two, parse_series(z6, 3, "[1]")}, 3);
  o.require(v.status == Status::hypothesis_not_met && v.witness.at("halted_at") == "eq6", "zmod:6 halt");
  return o;
}

std::string run_cli(const std::string& args) {
  const std::string cmd = "\"" SKEWARCH_BIN "\" " + args;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {};
  std::string out;
  std::array<char, 65536> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  pclose(p);
  return out;
}

Outcome determinism() {
  Outcome o;
  const std::string a = run_cli("run --entry all --suite all --seed 42");
  const std::string b = run_cli("run --entry all --suite all --seed 42");
  o.require(!a.empty(), "empty output");
  o.require(a == b, "outputs differ");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"finite-ring ground truth", finite_ground_truth},
      {"idempotent and unit clauses on Archimedean registry rings", lemma_2_3_on_registry},
      {"product-of-fields census", remark_2_4_census_check},
      {"rigidity biconditional", rigidity_biconditional},
      {"geometric inverse", geometric_inverse_check},
      {"twisted product biconditional brute force", lemma_4_3_check},
      {"xyq with x-squaring twist end-to-end", example_4_9},
      {"negative series control", negative_series_control},
      {"Proposition 4.7", proposition_4_7},
      {"induction audit", induction_audit_check},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
    if (!o.pass) std::cout << ": " << o.detail, ++failures;
    std::cout << "\n";
  }
  return failures ? 1 : 0;
}
