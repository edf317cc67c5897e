#include "skewarch/ring_props.hpp"

#include <algorithm>
#include <set>

#include "skewarch/error.hpp"

namespace skewarch {

std::optional<Element> unit_inverse(const Ring& ring, const Element& a) { return ring.inverse(a); }

NilpotencyVerdict is_nilpotent(const Ring& ring, const Element& a, std::uint64_t bound) {
  ring.check(a);
  if (bound < 1) throw SpecError("nilpotency bound must be >= 1");
  if (ring.is_finite()) {
    std::set<Coords> seen;
    Element power = a;
    for (std::uint64_t k = 1;; ++k) {
      if (ring.is_zero(power)) return {Nilpotency::nilpotent, k};
      if (!seen.insert(power.coords).second) return {Nilpotency::provably_not_nilpotent, 0};
      power = ring.mul(power, a);
    }
  }
  Element power = a;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    if (ring.is_zero(power)) return {Nilpotency::nilpotent, k};
    power = ring.mul(power, a);
  }
  return {Nilpotency::not_within_bound, 0};
}

SubsetHandle units(const Ring& ring) {
  const auto& t = ring.tables();
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < t.size; ++a)
    if (t.unit(a)) out.push_back(a);
  return make_subset(ring, std::move(out));
}

SubsetHandle zero_divisors(const Ring& ring, Side side) {
  const auto& t = ring.tables();
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < t.size; ++a) {
    for (std::size_t b = 0; b < t.size; ++b) {
      if (b == t.zero) continue;
      const auto product = side == Side::right ? t.times(b, a) : t.times(a, b);
      if (product == t.zero) {
        out.push_back(a);
        break;
      }
    }
  }
  return make_subset(ring, std::move(out));
}

SubsetHandle idempotents(const Ring& ring) {
  const auto& t = ring.tables();
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < t.size; ++a)
    if (t.times(a, a) == a) out.push_back(a);
  return make_subset(ring, std::move(out));
}

SubsetHandle jacobson_radical(const Ring& ring) {
  const auto& t = ring.tables();
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < t.size; ++a) {
    bool inside = true;
    for (std::size_t r = 0; r < t.size && inside; ++r) inside = t.unit(t.plus(t.one, t.neg[t.times(r, a)]));
    if (inside) out.push_back(a);
  }
  return make_subset(ring, std::move(out));
}

SubsetHandle nilpotents(const Ring& ring) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < ring.tables().size; ++a)
    if (is_nilpotent(ring, ring.at(a), 1).kind == Nilpotency::nilpotent) out.push_back(a);
  return make_subset(ring, std::move(out));
}

PowerChain principal_power_chain(const Ring& ring, const Element& a, Side side) {
  const auto& t = ring.tables();
  std::size_t power = ring.index(a);
  PowerChain result;
  for (;;) {
    std::vector<std::size_t> term;
    term.reserve(t.size);
    for (std::size_t r = 0; r < t.size; ++r) term.push_back(side == Side::right ? t.times(r, power) : t.times(power, r));
    auto subset = make_subset(ring, std::move(term));
    // The chain is descending, so the first repeat is the full intersection.
    if (!result.chain.empty() && result.chain.back() == subset) break;
    result.chain.push_back(std::move(subset));
    power = t.times(power, ring.index(a));
  }
  result.intersection = result.chain.back();
  return result;
}

Subring subring_generated(const RingHandle& ring, const std::vector<Element>& generators) {
  Subring out;
  out.ring = make_subring(ring, generators);
  out.embedding = out.ring->embedding();
  const auto& ambient = ring->tables();
  const auto& sub = out.ring->tables();
  for (std::size_t i = 0; i < out.embedding.size(); ++i) {
    if (ambient.unit(out.embedding[i]) && !sub.unit(i)) {
      out.units_inherited = false;
      out.unit_witness = ring->at(out.embedding[i]);
      break;
    }
  }
  return out;
}

namespace {

Check scope_reduced(const Ring& ring) {
  Check c{true, false, {}};
  for (const auto& a : ring.scope_elements()) {
    if (ring.is_zero(a)) continue;
    const auto p = ring.degree_profile(a);
    if (!ring.profiles_fit(p, p)) continue;
    if (ring.is_zero(ring.mul(a, a))) {
      c.value = false;
      c.witness = {a};
      return c;
    }
  }
  return c;
}

Check scope_domain(const Ring& ring) {
  Check c{true, false, {}};
  const auto& scope = ring.scope_elements();
  for (const auto& a : scope) {
    if (ring.is_zero(a)) continue;
    const auto pa = ring.degree_profile(a);
    for (const auto& b : scope) {
      if (ring.is_zero(b)) continue;
      if (!ring.profiles_fit(pa, ring.degree_profile(b))) continue;
      if (ring.is_zero(ring.mul(a, b))) {
        c.value = false;
        c.witness = {a, b};
        return c;
      }
    }
  }
  return c;
}

}  // namespace

Check is_reduced(const Ring& ring) {
  if (!ring.is_finite()) return scope_reduced(ring);
  const auto& t = ring.tables();
  for (std::size_t a = 0; a < t.size; ++a) {
    if (a == t.zero) continue;
    if (is_nilpotent(ring, ring.at(a), 1).kind == Nilpotency::nilpotent) return Check{false, true, {ring.at(a)}};
  }
  return Check{};
}

Check is_domain(const Ring& ring) {
  if (!ring.is_finite()) return scope_domain(ring);
  const auto& t = ring.tables();
  for (std::size_t a = 0; a < t.size; ++a) {
    if (a == t.zero) continue;
    for (std::size_t b = 0; b < t.size; ++b) {
      if (b != t.zero && t.times(a, b) == t.zero) return Check{false, true, {ring.at(a), ring.at(b)}};
    }
  }
  return Check{};
}

Check is_von_neumann_regular(const Ring& ring) {
  const auto& t = ring.tables();
  for (std::size_t a = 0; a < t.size; ++a) {
    bool found = false;
    for (std::size_t x = 0; x < t.size && !found; ++x) found = t.times(t.times(a, x), a) == a;
    if (!found) return Check{false, true, {ring.at(a)}};
  }
  return Check{};
}

Check is_division_ring(const Ring& ring) {
  const auto& t = ring.tables();
  for (std::size_t a = 0; a < t.size; ++a)
    if (a != t.zero && !t.unit(a)) return Check{false, true, {ring.at(a)}};
  return Check{};
}

bool is_ideal(const Ring& ring, const SubsetHandle& subset) {
  if (subset.ring_tag != ring.tag()) throw MismatchError("subset does not belong to ring " + ring.name());
  const auto& t = ring.tables();
  if (!subset.contains(t.zero)) return false;
  for (auto a : subset.members) {
    for (auto b : subset.members)
      if (!subset.contains(t.plus(a, b))) return false;
    for (std::size_t r = 0; r < t.size; ++r)
      if (!subset.contains(t.times(r, a)) || !subset.contains(t.times(a, r))) return false;
  }
  return true;
}

std::vector<SubsetHandle> two_sided_ideals(const Ring& ring) {
  const auto& t = ring.tables();
  std::set<std::vector<std::size_t>> found;
  for (std::size_t a = 0; a < t.size; ++a) found.insert(ideal_generated(ring, {a}));
  // Close under sums of ideals.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<std::size_t>> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<std::size_t> gens(current[i]);
        gens.insert(gens.end(), current[j].begin(), current[j].end());
        // Sum of two ideals is the ideal generated by their union.
        std::vector<std::size_t> sum;
        {
          std::vector<char> in(t.size, 0);
          std::vector<std::size_t> members;
          for (auto g : gens)
            if (!in[g]) in[g] = 1, members.push_back(g);
          for (std::size_t k = 0; k < members.size(); ++k)
            for (std::size_t l = 0; l <= k; ++l) {
              auto s = t.plus(members[k], members[l]);
              if (!in[s]) in[s] = 1, members.push_back(s);
            }
          std::sort(members.begin(), members.end());
          sum = std::move(members);
        }
        if (found.insert(sum).second) grew = true;
      }
    }
  }
  std::vector<SubsetHandle> out;
  for (auto& f : found) out.push_back(make_subset(ring, f));
  std::stable_sort(out.begin(), out.end(), [](const SubsetHandle& a, const SubsetHandle& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members < b.members;
  });
  return out;
}

}  // namespace skewarch
