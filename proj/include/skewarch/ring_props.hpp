#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skewarch/ring.hpp"
#include "skewarch/ring_kinds.hpp"

namespace skewarch {

/// Two-sided inverse of `a`, if any. Exhaustive on finite rings; constant-term
/// criterion on truncated models.
std::optional<Element> unit_inverse(const Ring& ring, const Element& a);

enum class Nilpotency { nilpotent, not_within_bound, provably_not_nilpotent };

struct NilpotencyVerdict {
  Nilpotency kind = Nilpotency::not_within_bound;
  std::uint64_t index = 0;  // least k with a^k = 0, when nilpotent
};

/// On finite rings the power sequence is followed until it hits 0 or repeats,
/// so the answer is exact regardless of `bound`.
NilpotencyVerdict is_nilpotent(const Ring& ring, const Element& a, std::uint64_t bound);

SubsetHandle units(const Ring& ring);
/// Right zero-divisors: a with ba = 0 for some b != 0 (left: ab = 0). Includes 0.
SubsetHandle zero_divisors(const Ring& ring, Side side);
SubsetHandle idempotents(const Ring& ring);
/// {a : 1 - ra is a unit for every r}.
SubsetHandle jacobson_radical(const Ring& ring);
SubsetHandle nilpotents(const Ring& ring);

struct PowerChain {
  std::vector<SubsetHandle> chain;  // Ra, Ra^2, ... up to the first repeat
  SubsetHandle intersection;
};

/// Ra ⊇ Ra^2 ⊇ ... (right) or aR ⊇ a^2R ⊇ ... (left) until it stabilizes.
PowerChain principal_power_chain(const Ring& ring, const Element& a, Side side);

struct Subring {
  std::shared_ptr<const SubRing> ring;
  std::vector<std::size_t> embedding;  // subring index -> ambient index
  bool units_inherited = true;         // A ∩ U(B) ⊆ U(A)
  std::optional<Element> unit_witness;  // ambient unit of A that is not a unit of A
};

Subring subring_generated(const RingHandle& ring, const std::vector<Element>& generators);

/// Outcome of a boolean predicate with an optional counterexample.
/// `exact` is false when only the support-bounded scope of a truncated model was searched.
struct Check {
  bool value = true;
  bool exact = true;
  std::vector<Element> witness;
};

Check is_reduced(const Ring& ring);
Check is_domain(const Ring& ring);
/// Every a has some x with a = axa.
Check is_von_neumann_regular(const Ring& ring);
/// Every nonzero element is a unit.
Check is_division_ring(const Ring& ring);

/// All two-sided ideals of a finite ring, ordered by size then members.
std::vector<SubsetHandle> two_sided_ideals(const Ring& ring);
bool is_ideal(const Ring& ring, const SubsetHandle& subset);

}  // namespace skewarch
