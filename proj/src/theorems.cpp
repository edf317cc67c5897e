#include <algorithm>
#include <numeric>

#include "props_internal.hpp"
#include "skewarch/error.hpp"
#include "skewarch/ring_kinds.hpp"

namespace skewarch {

using detail::element_list;
using detail::plural;

// ---------------------------------------------------------------------------- rigidity

Verdict lemma_4_2_check(const Endo& endo) {
  const Ring& r = *endo.ring();
  const RigidDecomposition d = rigid_decomposition_check(endo);
  Json w;
  w["rigid"] = d.rigid.value;
  w["compatible"] = d.compatible.value;
  w["reduced"] = d.reduced.value;
  if (!d.rigid.witness.empty()) w["rigidity_witness"] = element_list(r, d.rigid.witness);
  if (!d.compatible.witness.empty()) w["compatibility_witness"] = element_list(r, d.compatible.witness);
  if (!d.reduced.witness.empty()) w["nilpotent"] = element_list(r, d.reduced.witness);
  const bool exact = d.rigid.exact && d.compatible.exact && d.reduced.exact;
  const std::string scope = exact ? "exhaustive scan" : "scope-exact scan (support <= N/2)";
  if (!d.consistent) {
    Verdict v = make_verdict("lemma-4-2", Status::fails, scope + ": rigid differs from compatible and reduced",
                             std::move(w), {"Lemma 4.2"});
    v.predicted_holds = true;
    return v;
  }
  return make_verdict("lemma-4-2", Status::holds,
                      scope + " of " + plural(d.compatible.tested, "pair") + ": rigid == (compatible && reduced)",
                      std::move(w), {"Lemma 4.2"});
}

// ---------------------------------------------------------------------------- product biconditional

Verdict lemma_4_3_bruteforce(const EndoHandle& endo, int n_max, int k_max, int t_max) {
  const std::string suite = "lemma-4-3";
  const RingHandle& ring = endo->ring();
  if (!ring->is_finite() || *ring->cardinality() > kMaxTabulated) {
    return make_verdict(suite, Status::inconclusive_at_scale,
                        ring->name() + " is not enumerated; the tuple scan needs a finite ring", nullptr, {"Lemma 4.3"});
  }
  if (n_max < 1 || k_max < 1 || t_max < 0) throw SpecError("lemma 4.3 bounds must satisfy n, k >= 1 and t >= 0");
  const EndoPredicate rigid = is_rigid(*endo);
  if (!rigid.value) {
    Json w;
    w["a"] = ring->format(rigid.witness.at(0));
    w["a_alpha_a"] = ring->format(ring->mul(rigid.witness[0], endo->apply(rigid.witness[0])));
    return make_verdict(suite, Status::hypothesis_not_met, endo->name() + " is not rigid on " + ring->name(),
                        std::move(w), {"Lemma 4.3"});
  }
  const auto& t = ring->tables();
  const std::size_t size = t.size;
  // twist[s][k-1][a] = alpha^s(a^k)
  std::vector<std::vector<std::vector<std::uint32_t>>> twist(
      t_max + 1, std::vector<std::vector<std::uint32_t>>(k_max, std::vector<std::uint32_t>(size)));
  for (std::size_t a = 0; a < size; ++a) {
    std::uint32_t p = static_cast<std::uint32_t>(a);
    for (int k = 1; k <= k_max; ++k) {
      if (k > 1) p = t.times(p, static_cast<std::uint32_t>(a));
      const Element pe = ring->at(p);
      for (int s = 0; s <= t_max; ++s) twist[s][k - 1][a] = static_cast<std::uint32_t>(ring->index(endo->power_apply(s, pe)));
    }
  }
  std::uint64_t checks = 0;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::size_t> tuple(n, 0);
    std::vector<int> sigma(n);
    const std::size_t choices = static_cast<std::size_t>(k_max) * (t_max + 1);
    for (;;) {
      // zero pattern of the permuted plain products
      std::iota(sigma.begin(), sigma.end(), 0);
      std::optional<bool> plain;
      std::vector<int> plain_sigma;
      bool mixed = false;
      std::vector<int> other_sigma;
      do {
        std::uint32_t p = t.one;
        for (int i = 0; i < n; ++i) p = t.times(p, static_cast<std::uint32_t>(tuple[sigma[i]]));
        const bool z = p == t.zero;
        ++checks;
        if (!plain) {
          plain = z;
          plain_sigma = sigma;
        } else if (*plain != z) {
          mixed = true;
          other_sigma = sigma;
          break;
        }
      } while (std::next_permutation(sigma.begin(), sigma.end()));
      auto tuple_json = [&] {
        std::vector<Element> es;
        for (auto i : tuple) es.push_back(ring->at(i));
        return element_list(*ring, es);
      };
      if (mixed) {
        Json w;
        w["tuple"] = tuple_json();
        w["zero_permutation"] = *plain ? plain_sigma : other_sigma;
        w["nonzero_permutation"] = *plain ? other_sigma : plain_sigma;
        Verdict v = make_verdict(suite, Status::fails, "permuted products disagree on vanishing", std::move(w),
                                 {"Lemma 4.3"});
        v.predicted_holds = true;
        return v;
      }
      // every exponent/twist vector
      std::vector<std::size_t> choice(n, 0);
      for (;;) {
        std::uint32_t p = t.one;
        for (int i = 0; i < n; ++i) {
          const int k = static_cast<int>(choice[i] % k_max) + 1;
          const int s = static_cast<int>(choice[i] / k_max);
          p = t.times(p, twist[s][k - 1][tuple[i]]);
        }
        ++checks;
        if ((p == t.zero) != *plain) {
          Json w;
          w["tuple"] = tuple_json();
          Json ks = Json::array(), ts = Json::array();
          for (int i = 0; i < n; ++i) {
            ks.push_back(static_cast<int>(choice[i] % k_max) + 1);
            ts.push_back(static_cast<int>(choice[i] / k_max));
          }
          w["k"] = ks;
          w["t"] = ts;
          w["twisted_product"] = ring->format(ring->at(p));
          w["plain_product_zero"] = *plain;
          Verdict v = make_verdict(suite, Status::fails, "twisted and plain products disagree on vanishing",
                                   std::move(w), {"Lemma 4.3"});
          v.predicted_holds = true;
          return v;
        }
        int i = 0;
        while (i < n && ++choice[i] == choices) choice[i++] = 0;
        if (i == n) break;
      }
      int i = 0;
      while (i < n && ++tuple[i] == size) tuple[i++] = 0;
      if (i == n) break;
    }
  }
  return make_verdict(suite, Status::holds,
                      "exhaustive scan: all tuples of length <= " + std::to_string(n_max) + ", exponents 1.." +
                          std::to_string(k_max) + ", twists 0.." + std::to_string(t_max) +
                          " and all permutations (" + std::to_string(checks) + " products), zero violations",
                      nullptr, {"Lemma 4.3"});
}

// ---------------------------------------------------------------------------- induction audit

Verdict induction_audit(const TruncSeries& f, const TruncSeries& g, const std::vector<TruncSeries>& h_list,
                        int depth) {
  const std::string suite = "induction-audit";
  const std::vector<std::string> tags{"Theorem 4.4"};
  const EndoHandle& endo = f.endo();
  const RingHandle& ring = endo->ring();
  const Ring& r = *ring;
  if (!r.is_finite()) throw SpecError("induction audit requires a finite coefficient ring");
  if (depth < 1 || h_list.size() < static_cast<std::size_t>(depth)) {
    throw SpecError("induction audit needs h_n for n = 1.." + std::to_string(depth));
  }
  const int N = f.precision();
  Json derived = Json::array();
  auto halt = [&](Status status, const std::string& step, int m, std::string cert, Json w) {
    w["halted_at"] = step;
    w["degree"] = m;
    w["derived"] = derived;
    Verdict v = make_verdict(suite, status, std::move(cert), std::move(w), tags);
    return v;
  };

  // Replay f = h_n g^n.
  for (int n = 1; n <= depth; ++n) {
    const TruncSeries rhs = skew_mul(h_list[n - 1], skew_pow(g, static_cast<std::uint64_t>(n)));
    if (rhs != f) {
      Json w;
      w["n"] = n;
      w["f"] = format_coefficients(r, f.coefficients());
      w["h_n g^n"] = format_coefficients(r, rhs.coefficients());
      return halt(Status::fails, "replay", 0, "f differs from h_n g^n", std::move(w));
    }
  }
  const Element g0 = g.coefficient(0);
  if (r.is_unit(g0)) {
    Json w;
    w["g_0"] = r.format(g0);
    return halt(Status::hypothesis_not_met, "setup", 0, "g_0 is a unit, so g is a unit of the series ring",
                std::move(w));
  }
  const Verdict arch = is_archimedean(ring, Side::right);
  const EndoPredicate rigid = is_rigid(*endo);
  const int top = std::min(depth - 1, N);
  for (int m = 0; m <= top; ++m) {
    const std::string eq = m == 0 ? "eq6" : "eq10";
    const Element base = endo->power_apply(static_cast<std::uint64_t>(m), g0);
    // f_m = h_m^(n) alpha^m(g_0)^n for n > m
    for (int n = m + 1; n <= depth; ++n) {
      const Element rhs = r.mul(h_list[n - 1].coefficient(m), r.pow(base, static_cast<std::uint64_t>(n)));
      if (rhs != f.coefficient(m)) {
        Json w;
        w["n"] = n;
        w["f_m"] = r.format(f.coefficient(m));
        w["h_m alpha^m(g_0)^n"] = r.format(rhs);
        return halt(Status::fails, eq, m, "the degree-m coefficient equation is violated", std::move(w));
      }
    }
    if (m > 0 && r.is_unit(base)) {
      Json w;
      w["alpha^m(g_0)"] = r.format(base);
      return halt(Status::hypothesis_not_met, eq, m, "alpha^m(g_0) is a unit: alpha does not preserve nonunits",
                  std::move(w));
    }
    const PowerChain chain = principal_power_chain(r, base, Side::right);
    if (arch.status != Status::holds) {
      Json w;
      w["f_m"] = r.format(f.coefficient(m));
      w["stabilized"] = format_subset(r, chain.intersection);
      return halt(Status::hypothesis_not_met, eq, m,
                  r.name() + " is not right Archimedean, so f_m in the intersection of R alpha^m(g_0)^n need not vanish",
                  std::move(w));
    }
    // The finite data pins f_m to R alpha^m(g_0)^n for n <= depth; it is {0} once the chain has stabilized.
    const std::size_t needed = chain.chain.size();
    if (static_cast<std::size_t>(depth) < needed) {
      Json w;
      w["f_m"] = r.format(f.coefficient(m));
      w["chain_length"] = needed;
      return halt(Status::inconclusive_at_scale, eq, m,
                  "depth " + std::to_string(depth) + " does not reach the stabilization of the chain at " +
                      r.format(base),
                  std::move(w));
    }
    if (!r.is_zero(f.coefficient(m))) {
      Json w;
      w["f_m"] = r.format(f.coefficient(m));
      return halt(Status::fails, eq, m, "f_m lies in a vanishing chain but is nonzero", std::move(w));
    }
    derived.push_back("f_" + std::to_string(m) + " = 0");
    if (!rigid.value) {
      Json w;
      w["rigidity_witness"] = r.format(rigid.witness.at(0));
      return halt(Status::hypothesis_not_met, "lemma-4-3", m,
                  endo->name() + " is not rigid, so h_m alpha^m(g_0)^n = 0 does not give h_m g_0 = 0",
                  std::move(w));
    }
    for (int n = m + 1; n <= depth; ++n) {
      const Element hg = r.mul(h_list[n - 1].coefficient(m), g0);
      if (!r.is_zero(hg)) {
        Json w;
        w["n"] = n;
        w["h_m g_0"] = r.format(hg);
        return halt(Status::fails, "lemma-4-3", m, "h_m^(n) g_0 is nonzero", std::move(w));
      }
    }
    derived.push_back("h_" + std::to_string(m) + " g_0 = 0");
  }
  Json w;
  w["derived"] = derived;
  return make_verdict(suite, Status::holds,
                      "audited degrees 0.." + std::to_string(top) + ": every f_m vanishes and h_m g_0 = 0",
                      std::move(w), tags);
}

// ---------------------------------------------------------------------------- quotient intersections

std::vector<Verdict> quotient_intersection_check(const RingHandle& ring, const SubsetHandle& i1,
                                                 const SubsetHandle& i2) {
  const std::vector<std::string> tags{"Proposition 4.7"};
  if (!ring->is_finite() || *ring->cardinality() > kMaxTabulated) {
    throw NonEnumerableError("quotient checks need an enumerated ring, got " + ring->name());
  }
  if (!ring->is_commutative()) throw SpecError(ring->name() + " is not commutative");
  if (!is_ideal(*ring, i1) || !is_ideal(*ring, i2)) throw SpecError("input subsets must be ideals");
  std::vector<std::size_t> common;
  std::set_intersection(i1.members.begin(), i1.members.end(), i2.members.begin(), i2.members.end(),
                        std::back_inserter(common));
  const SubsetHandle i12 = make_subset(*ring, common);
  const auto q1 = make_quotient(ring, i1.members);
  const auto q2 = make_quotient(ring, i2.members);
  const auto q12 = make_quotient(ring, i12.members);
  auto base_witness = [&] {
    Json w;
    w["I1"] = format_subset(*ring, i1);
    w["I2"] = format_subset(*ring, i2);
    w["quotient"] = q12->name();
    return w;
  };
  std::vector<Verdict> out;

  // (a)
  {
    const Check r1 = is_reduced(*q1), r2 = is_reduced(*q2);
    Json w = base_witness();
    if (!r1.value || !r2.value) {
      w["not_reduced"] = !r1.value ? q1->name() : q2->name();
      w["nilpotent"] = !r1.value ? q1->format(r1.witness.at(0)) : q2->format(r2.witness.at(0));
      out.push_back(make_verdict("prop-4-7(a)", Status::hypothesis_not_met, "R/I1 or R/I2 is not reduced",
                                 std::move(w), tags));
    } else {
      const Check r12 = is_reduced(*q12);
      if (r12.value) {
        out.push_back(make_verdict("prop-4-7(a)", Status::holds,
                                   "exhaustive scan: R/I1, R/I2 and R/(I1 ∩ I2) are reduced", std::move(w), tags));
      } else {
        w["nilpotent"] = q12->format(r12.witness.at(0));
        Verdict v = make_verdict("prop-4-7(a)", Status::fails, "R/(I1 ∩ I2) has a nonzero nilpotent", std::move(w),
                                 tags);
        v.predicted_holds = true;
        out.push_back(std::move(v));
      }
    }
  }
  // (b)
  {
    Json w = base_witness();
    std::optional<std::size_t> a, b;
    for (auto x : i1.members)
      if (!i2.contains(x)) {
        a = x;
        break;
      }
    for (auto x : i2.members)
      if (!i1.contains(x)) {
        b = x;
        break;
      }
    if (!a || !b) {
      w["comparable"] = a ? "I2 ⊆ I1" : "I1 ⊆ I2";
      out.push_back(make_verdict("prop-4-7(b)", Status::hypothesis_not_met, "the ideals are comparable",
                                 std::move(w), tags));
    } else {
      const Element abar = q12->project(ring->at(*a));
      const Element bbar = q12->project(ring->at(*b));
      const Element prod = q12->mul(abar, bbar);
      w["a"] = q12->format(abar);
      w["b"] = q12->format(bbar);
      w["ab"] = q12->format(prod);
      if (!q12->is_zero(abar) && !q12->is_zero(bbar) && q12->is_zero(prod)) {
        out.push_back(make_verdict("prop-4-7(b)", Status::holds,
                                   "a ∈ I1 \\ I2 and b ∈ I2 \\ I1 give nonzero cosets with zero product", std::move(w),
                                   tags));
      } else {
        Verdict v = make_verdict("prop-4-7(b)", Status::fails, "the incomparability witnesses do not multiply to 0",
                                 std::move(w), tags);
        v.predicted_holds = true;
        out.push_back(std::move(v));
      }
    }
  }
  // (c)
  {
    Json w = base_witness();
    const SubsetHandle j = jacobson_radical(*ring);
    std::optional<std::size_t> outside;
    for (const SubsetHandle* ideal : {&i1, &i2})
      for (auto x : ideal->members)
        if (!outside && !j.contains(x)) outside = x;
    std::vector<std::string> failed;
    if (outside) {
      w["outside_jacobson"] = ring->format(ring->at(*outside));
      w["jacobson_radical"] = format_subset(*ring, j);
      out.push_back(make_verdict("prop-4-7(c)", Status::hypothesis_not_met, "I1 or I2 is not contained in J(R)",
                                 std::move(w), tags));
    } else {
      std::string cert = "I1, I2 ⊆ J(R)";
      std::optional<Verdict> failure;
      bool any = false;
      for (Side s : {Side::right, Side::left}) {
        const bool h1 = is_archimedean(q1, s).status == Status::holds;
        const bool h2 = is_archimedean(q2, s).status == Status::holds;
        if (!h1 || !h2) {
          cert += "; " + to_string(s) + ": hypothesis fails";
          continue;
        }
        any = true;
        const Verdict v12 = is_archimedean(q12, s);
        if (v12.status != Status::holds && !failure) failure = v12;
        cert += "; " + to_string(s) + ": R/(I1 ∩ I2) Archimedean";
      }
      if (failure) {
        Json fw = failure->witness;
        fw["quotient"] = q12->name();
        Verdict v = make_verdict("prop-4-7(c)", Status::fails, "R/(I1 ∩ I2) is not Archimedean", std::move(fw), tags);
        v.predicted_holds = true;
        out.push_back(std::move(v));
      } else {
        out.push_back(make_verdict("prop-4-7(c)", any ? Status::holds : Status::hypothesis_not_met, cert,
                                   std::move(w), tags));
      }
    }
  }
  return out;
}

}  // namespace skewarch
