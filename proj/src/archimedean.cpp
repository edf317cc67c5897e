#include <algorithm>
#include <functional>

#include "props_internal.hpp"
#include "skewarch/error.hpp"
#include "skewarch/ring_kinds.hpp"

namespace skewarch {

using detail::element_list;
using detail::plural;

namespace {

const std::vector<Side> kSides{Side::right, Side::left};

std::string chain_name(Side side) { return side == Side::right ? "R a^n" : "a^n R"; }

Verdict archimedean_by_theorem(const RingHandle& ring, Side side) {
  const std::string suite = "archimedean-" + to_string(side);
  if (auto* xy = as_xy_quotient(*ring)) {
    Verdict v = make_verdict(suite, Status::holds_by_theorem,
                             "R = F[[x,y]]/((x) ∩ (y)) over the field " + xy->base()->name() +
                                 ": (x), (y) lie in J, are incomparable, and F[[x]], F[[y]] are reduced Archimedean; "
                                 "the truncated model itself is not decided",
                             nullptr, {"Proposition 4.7", "Corollary 4.6"});
    return v;
  }
  if (auto* ts = as_truncated_series(*ring)) {
    const RingHandle& base = ts->base();
    const Verdict base_arch = is_archimedean(base, side);
    const Check reduced = is_reduced(*base);
    if (base_arch.status == Status::fails) {
      Json w = base_arch.witness;
      w["lifted_from"] = base->name();
      return make_verdict(suite, Status::fails,
                          "a constant power chain of the coefficient ring does not vanish, and constants lift to " +
                              ring->name(),
                          std::move(w), {"Definition 1.1"});
    }
    if (base_arch.status == Status::holds && reduced.value) {
      return make_verdict(suite, Status::holds_by_theorem,
                          "coefficient ring " + base->name() + " is reduced and " + to_string(side) + " Archimedean",
                          nullptr, {"Corollary 4.6"});
    }
    return make_verdict(suite, Status::inconclusive_at_scale,
                        "coefficient ring " + base->name() + " is not reduced; no characterization applies", nullptr,
                        {"Corollary 4.6"});
  }
  return make_verdict(suite, Status::inconclusive_at_scale, ring->name() + " cannot be enumerated");
}

}  // namespace

Verdict is_archimedean(const RingHandle& ring, Side side) {
  const std::string suite = "archimedean-" + to_string(side);
  if (!ring->is_finite()) return archimedean_by_theorem(ring, side);
  const auto& t = ring->tables();
  std::size_t nonunits = 0;
  for (std::size_t a = 0; a < t.size; ++a) {
    if (t.unit(static_cast<std::uint32_t>(a))) continue;
    ++nonunits;
    const Element e = ring->at(a);
    const PowerChain pc = principal_power_chain(*ring, e, side);
    if (pc.intersection.size() != 1) {
      Json w;
      w["side"] = to_string(side);
      w["a"] = ring->format(e);
      Json chain = Json::array();
      for (const auto& s : pc.chain) chain.push_back(format_subset(*ring, s));
      w["chain"] = chain;
      w["stabilized"] = format_subset(*ring, pc.intersection);
      return make_verdict(suite, Status::fails,
                          "the chain " + chain_name(side) + " stabilizes at a nonzero ideal after " +
                              plural(pc.chain.size(), "step"),
                          std::move(w), {"Definition 1.1"});
    }
  }
  return make_verdict(suite, Status::holds,
                      "exhaustive scan: the chains " + chain_name(side) + " of all " + plural(nonunits, "nonunit") +
                          " stabilize at {0}",
                      nullptr, {"Definition 1.1"});
}

// ---------------------------------------------------------------------------- consequences of the Archimedean property

namespace {

struct ClauseResult {
  std::optional<Json> violation;
  std::string scanned;
};

using ClauseCheck = std::function<ClauseResult(const Ring&, Side)>;

ClauseResult clause_a(const Ring& ring, Side side) {
  const auto& t = ring.tables();
  const std::uint32_t n = static_cast<std::uint32_t>(t.size);
  for (std::uint32_t a = 0; a < n; ++a) {
    if (a == t.zero) continue;
    for (std::uint32_t b = 0; b < n; ++b) {
      const std::uint32_t ba = t.times(b, a);
      for (std::uint32_t c = 0; c < n; ++c) {
        if (t.times(ba, c) != a) continue;
        const std::uint32_t must = side == Side::right ? c : b;
        if (t.unit(must)) continue;
        Json w;
        w["side"] = to_string(side);
        w["a"] = ring.format(ring.at(a));
        w["b"] = ring.format(ring.at(b));
        w["c"] = ring.format(ring.at(c));
        w["nonunit"] = side == Side::right ? "c" : "b";
        return {w, ""};
      }
    }
  }
  return {std::nullopt, plural(static_cast<std::size_t>(n) * n * n, "triple")};
}

ClauseResult clause_b(const Ring& ring, Side side) {
  const SubsetHandle zd = zero_divisors(ring, side);
  const SubsetHandle j = jacobson_radical(ring);
  for (auto z : zd.members) {
    if (j.contains(z)) continue;
    Json w;
    w["side"] = to_string(side);
    w["zero_divisor"] = ring.format(ring.at(z));
    w["jacobson_radical"] = format_subset(ring, j);
    return {w, ""};
  }
  return {std::nullopt, format_subset(ring, zd) + " ⊆ J = " + format_subset(ring, j)};
}

ClauseResult clause_c(const Ring& ring, Side) {
  const SubsetHandle idem = idempotents(ring);
  const auto& t = ring.tables();
  for (auto e : idem.members) {
    if (e == t.zero || e == t.one) continue;
    Json w;
    w["idempotent"] = ring.format(ring.at(e));
    w["idempotents"] = format_subset(ring, idem);
    return {w, ""};
  }
  return {std::nullopt, "idempotents " + format_subset(ring, idem)};
}

ClauseResult clause_d(const Ring& ring, Side) {
  const auto& t = ring.tables();
  std::size_t pairs = 0;
  for (std::uint32_t a = 0; a < t.size; ++a) {
    for (std::uint32_t b = 0; b < t.size; ++b) {
      if (t.times(a, b) != t.one) continue;
      ++pairs;
      if (t.times(b, a) == t.one) continue;
      Json w;
      w["a"] = ring.format(ring.at(a));
      w["b"] = ring.format(ring.at(b));
      w["ba"] = ring.format(ring.at(t.times(b, a)));
      return {w, ""};
    }
  }
  return {std::nullopt, plural(pairs, "pair") + " with ab = 1, all with ba = 1"};
}

}  // namespace

std::vector<Verdict> lemma_2_3_suite(const RingHandle& ring) {
  const std::vector<std::pair<std::string, ClauseCheck>> clauses{
      {"a", clause_a}, {"b", clause_b}, {"c", clause_c}, {"d", clause_d}};
  std::vector<Verdict> out;
  if (!ring->is_finite() || *ring->cardinality() > kMaxTabulated) {
    for (const auto& [name, check] : clauses) {
      out.push_back(make_verdict("lemma-2-3(" + name + ")", Status::inconclusive_at_scale,
                                 ring->name() + " is not enumerated; the clauses need exhaustive scans", nullptr,
                                 {"Lemma 2.3"}));
    }
    return out;
  }
  std::vector<Side> archimedean_sides;
  std::vector<Verdict> side_verdicts;
  for (Side s : kSides) {
    side_verdicts.push_back(is_archimedean(ring, s));
    if (side_verdicts.back().status == Status::holds) archimedean_sides.push_back(s);
  }
  for (const auto& [name, check] : clauses) {
    const std::string suite = "lemma-2-3(" + name + ")";
    if (!archimedean_sides.empty()) {
      std::vector<std::string> scans;
      std::optional<Json> violation;
      for (Side s : archimedean_sides) {
        ClauseResult r = check(*ring, s);
        if (r.violation) {
          violation = r.violation;
          break;
        }
        scans.push_back(to_string(s) + ": " + r.scanned);
      }
      if (violation) {
        Verdict v = make_verdict(suite, Status::fails, "clause violated on an Archimedean ring", *violation,
                                 {"Lemma 2.3"});
        v.predicted_holds = true;
        out.push_back(std::move(v));
        continue;
      }
      std::string cert = "exhaustive scan";
      for (const auto& s : scans) cert += "; " + s;
      out.push_back(make_verdict(suite, Status::holds, cert, nullptr, {"Lemma 2.3"}));
      continue;
    }
    std::optional<Json> violation;
    for (Side s : kSides) {
      ClauseResult r = check(*ring, s);
      if (r.violation) {
        violation = r.violation;
        break;
      }
    }
    if (violation) {
      Json w = *violation;
      w["contrapositive"] = "this violation independently certifies that " + ring->name() +
                            " is not Archimedean";
      out.push_back(make_verdict(suite, Status::hypothesis_not_met,
                                 "ring is neither right nor left Archimedean; the clause fails, as the "
                                 "contrapositive requires",
                                 std::move(w), {"Lemma 2.3"}));
    } else {
      out.push_back(make_verdict(suite, Status::hypothesis_not_met,
                                 "ring is neither right nor left Archimedean; the clause holds regardless",
                                 side_verdicts.front().witness, {"Lemma 2.3"}));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------- subrings

Verdict proposition_2_2_check(const Subring& sub, const RingHandle& ambient) {
  const std::string suite = "prop-2-2";
  const RingHandle a = sub.ring;
  if (!sub.units_inherited) {
    Json w;
    w["subring"] = a->name();
    w["unit_of_ambient"] = ambient->format(*sub.unit_witness);
    return make_verdict(suite, Status::hypothesis_not_met, "A ∩ U(B) ⊄ U(A)", std::move(w), {"Proposition 2.2"});
  }
  std::vector<std::string> notes;
  bool any = false;
  for (Side s : kSides) {
    const Verdict b_arch = is_archimedean(ambient, s);
    if (b_arch.status != Status::holds) {
      notes.push_back(to_string(s) + ": B not Archimedean");
      continue;
    }
    any = true;
    const Verdict a_arch = is_archimedean(a, s);
    if (a_arch.status != Status::holds) {
      Json w = a_arch.witness;
      w["subring"] = a->name();
      Verdict v = make_verdict(suite, Status::fails, "B is " + to_string(s) + " Archimedean but A is not",
                               std::move(w), {"Proposition 2.2"});
      v.predicted_holds = true;
      return v;
    }
    notes.push_back(to_string(s) + ": A and B Archimedean");
  }
  std::string cert = "A = " + a->name() + " (" + plural(*a->cardinality(), "element") + "), A ∩ U(B) ⊆ U(A)";
  for (const auto& n : notes) cert += "; " + n;
  return make_verdict(suite, any ? Status::holds : Status::hypothesis_not_met, cert, nullptr, {"Proposition 2.2"});
}

// ---------------------------------------------------------------------------- von Neumann regular rings

Verdict remark_2_4_check(const RingHandle& ring) {
  const std::string suite = "remark-2-4";
  if (!ring->is_finite() || *ring->cardinality() > kMaxTabulated) {
    return make_verdict(suite, Status::inconclusive_at_scale, ring->name() + " is not enumerated", nullptr,
                        {"Remark 2.4"});
  }
  const Check vnr = is_von_neumann_regular(*ring);
  if (!vnr.value) {
    Json w;
    w["no_quasi_inverse"] = ring->format(vnr.witness.at(0));
    return make_verdict(suite, Status::hypothesis_not_met, "ring is not von Neumann regular", std::move(w),
                        {"Remark 2.4"});
  }
  const Check division = is_division_ring(*ring);
  Json w = Json::object();
  bool consistent = true;
  std::string cert = "von Neumann regular; ";
  cert += division.value ? "division ring" : "not a division ring (" + ring->format(division.witness.at(0)) + " is a nonzero nonunit)";
  for (Side s : kSides) {
    const Verdict arch = is_archimedean(ring, s);
    const bool holds = arch.status == Status::holds;
    if (holds != division.value) consistent = false;
    if (!arch.witness.is_null() && w.empty()) w = arch.witness;
    cert += "; " + to_string(s) + " Archimedean: " + (holds ? "yes" : "no");
  }
  if (!consistent) {
    if (w.empty()) w["ring"] = ring->name();
    Verdict v = make_verdict(suite, Status::fails, cert, std::move(w), {"Remark 2.4"});
    v.predicted_holds = true;
    return v;
  }
  return make_verdict(suite, Status::holds, cert, w.empty() ? Json(nullptr) : w, {"Remark 2.4"});
}

Verdict remark_2_4_census(int max_factors) {
  const std::vector<std::string> fields{"gf:2:1", "gf:3:1", "gf:2:2", "gf:5:1"};
  std::size_t rings = 0, single = 0;
  std::vector<std::size_t> pick;
  std::function<std::optional<Verdict>(std::size_t)> visit = [&](std::size_t start) -> std::optional<Verdict> {
    if (!pick.empty()) {
      std::string text = fields[pick[0]];
      if (pick.size() > 1) {
        text = "prod(";
        for (std::size_t i = 0; i < pick.size(); ++i) text += (i ? "," : "") + fields[pick[i]];
        text += ")";
      }
      const RingHandle ring = construct_ring(text);
      ++rings;
      if (pick.size() == 1) ++single;
      for (Side s : kSides) {
        const bool arch = is_archimedean(ring, s).status == Status::holds;
        if (arch != (pick.size() == 1)) {
          Json w;
          w["ring"] = ring->name();
          w["side"] = to_string(s);
          w["archimedean"] = arch;
          Verdict v = make_verdict("remark-2-4-census", Status::fails,
                                   "Archimedean status disagrees with the number of field factors", std::move(w),
                                   {"Remark 2.4"});
          v.predicted_holds = true;
          return v;
        }
      }
    }
    if (static_cast<int>(pick.size()) == max_factors) return std::nullopt;
    for (std::size_t f = start; f < fields.size(); ++f) {
      pick.push_back(f);
      auto r = visit(f);
      pick.pop_back();
      if (r) return r;
    }
    return std::nullopt;
  };
  if (auto failure = visit(0)) return *failure;
  return make_verdict("remark-2-4-census", Status::holds,
                      "exhaustive scan of " + plural(rings, "product") + " of at most " +
                          std::to_string(max_factors) + " fields from {F2, F3, F4, F5}: the " +
                          std::to_string(single) + " single fields are Archimedean, the other " +
                          std::to_string(rings - single) + " are not",
                      nullptr, {"Remark 2.4"});
}

}  // namespace skewarch
