#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewarch/endo.hpp"
#include "skewarch/ring.hpp"
#include "skewarch/ring_props.hpp"
#include "skewarch/skew.hpp"
#include "skewarch/verdict.hpp"

namespace skewarch {

// ---------------------------------------------------------------------------- Archimedean rings

/// Finite rings: every nonunit chain must vanish. Truncated models are decided by
/// theorem where one applies, otherwise inconclusive-at-scale.
Verdict is_archimedean(const RingHandle& ring, Side side);

/// Clauses (a)-(d), each checked on every side where the ring is Archimedean.
std::vector<Verdict> lemma_2_3_suite(const RingHandle& ring);

/// A ∩ U(B) ⊆ U(A), and B Archimedean implies A Archimedean, on both sides.
Verdict proposition_2_2_check(const Subring& sub, const RingHandle& ambient);

/// For von Neumann regular rings: Archimedean iff division ring.
Verdict remark_2_4_check(const RingHandle& ring);

/// The regular-ring check over all products of one to `max_factors` fields from {F2, F3, F4, F5}:
/// Archimedean iff exactly one factor.
Verdict remark_2_4_census(int max_factors = 3);

// ---------------------------------------------------------------------------- endomorphism lemmas

/// rigid == (compatible && reduced).
Verdict lemma_4_2_check(const Endo& endo);

/// Exhaustive check of the product/permutation biconditional for rigid endomorphisms,
/// with exponents 1..k_max and twists 0..t_max.
Verdict lemma_4_3_bruteforce(const EndoHandle& endo, int n_max, int k_max, int t_max);

// ---------------------------------------------------------------------------- series probes

struct ProbeConfig {
  int precision = 16;
  int depth = 5;
  std::uint64_t budget = 10000;
  std::uint64_t seed = 42;
};

/// Searches for a nonunit g and nonzero f with f = h_n g^n (mod x^{N+1}) for n = 1..depth.
Verdict archimedean_falsifier(const EndoHandle& endo, const ProbeConfig& config);

/// Samples the truncated R[[x; alpha]] for a faithfully represented nonzero f with f^2 = 0.
Verdict nilpotent_sampler(const EndoHandle& endo, const ProbeConfig& config);

/// Replays the degree induction for f in the intersection of A g^n, given h_n for n = 1..depth.
Verdict induction_audit(const TruncSeries& f, const TruncSeries& g, const std::vector<TruncSeries>& h_list,
                        int depth);

// ---------------------------------------------------------------------------- classification

struct Prediction {
  std::string target;    // "R[x;a]" or "R[[x;a]]"
  std::string property;  // e.g. "reduced right Archimedean"
  bool value = false;
  std::string tag;       // theorem justifying the prediction
};

struct Condition {
  bool value = false;
  bool exact = true;  // false for scope-exact or theorem-derived answers
};

struct ClassificationReport {
  std::string ring;
  std::string endo;
  Condition reduced, domain, right_archimedean, left_archimedean, injective, rigid, compatible, preserves_nonunits;
  std::vector<Prediction> predictions;

  /// The prediction for `target`/`property`, if emitted.
  std::optional<bool> predicted(const std::string& target, const std::string& property) const;
};

ClassificationReport classify(const EndoHandle& endo);
Verdict to_verdict(const ClassificationReport& report);

// ---------------------------------------------------------------------------- quotients

/// Clauses (a), (b), (c) for R/I1, R/I2 and R/(I1 ∩ I2) on a finite commutative ring.
std::vector<Verdict> quotient_intersection_check(const RingHandle& ring, const SubsetHandle& i1,
                                                 const SubsetHandle& i2);

}  // namespace skewarch
