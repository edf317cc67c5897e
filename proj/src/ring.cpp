#include "skewarch/ring.hpp"

#include <algorithm>
#include <atomic>

#include "skewarch/error.hpp"
#include "skewarch/ring_kinds.hpp"

namespace skewarch {

namespace {

std::atomic<std::uint64_t> next_tag{1};

}  // namespace

std::string to_string(Side side) { return side == Side::right ? "right" : "left"; }

Ring::Ring(RingSpec spec, std::optional<std::size_t> cardinality)
    : spec_(std::move(spec)), tag_(next_tag.fetch_add(1)), cardinality_(cardinality) {}

void Ring::check(const Element& a) const {
  if (a.ring_tag != tag_) {
    throw MismatchError("element does not belong to ring " + name());
  }
}

Element Ring::zero() const { return wrap(do_zero()); }
Element Ring::one() const { return wrap(do_one()); }

Element Ring::add(const Element& a, const Element& b) const {
  check(a);
  check(b);
  return wrap(do_add(a.coords, b.coords));
}

Element Ring::neg(const Element& a) const {
  check(a);
  return wrap(do_neg(a.coords));
}

Element Ring::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element Ring::mul(const Element& a, const Element& b) const {
  check(a);
  check(b);
  return wrap(do_mul(a.coords, b.coords));
}

Element Ring::pow(const Element& a, std::uint64_t k) const {
  check(a);
  Coords result = do_one();
  Coords base = a.coords;
  while (k > 0) {
    if (k & 1) result = do_mul(result, base);
    k >>= 1;
    if (k) base = do_mul(base, base);
  }
  return wrap(std::move(result));
}

Element Ring::from_integer(std::int64_t k) const {
  const bool negative = k < 0;
  std::uint64_t m = negative ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Coords result = do_zero();
  Coords step = do_one();
  while (m > 0) {
    if (m & 1) result = do_add(result, step);
    m >>= 1;
    if (m) step = do_add(step, step);
  }
  return negative ? wrap(do_neg(result)) : wrap(std::move(result));
}

bool Ring::is_zero(const Element& a) const {
  check(a);
  return a.coords == do_zero();
}

std::string Ring::format(const Element& a) const {
  check(a);
  return do_format(a.coords);
}

Element Ring::parse(std::string_view text) const { return wrap(do_parse(trim(text))); }

std::size_t Ring::index(const Element& a) const {
  check(a);
  if (!is_finite()) throw NonEnumerableError(name() + " is a truncated model and cannot be enumerated");
  return do_index(a.coords);
}

Element Ring::at(std::size_t i) const {
  if (!is_finite()) throw NonEnumerableError(name() + " is a truncated model and cannot be enumerated");
  if (i >= *cardinality_) throw SpecError("element index out of range");
  return wrap(do_at(i));
}

const std::vector<Element>& Ring::elements() const {
  if (!is_finite()) throw NonEnumerableError(name() + " is a truncated model and cannot be enumerated");
  std::call_once(elements_once_, [this] {
    elements_.reserve(*cardinality_);
    for (std::size_t i = 0; i < *cardinality_; ++i) elements_.push_back(wrap(do_at(i)));
  });
  return elements_;
}

const FiniteTables& Ring::tables() const {
  if (!is_finite() || *cardinality_ > kMaxTabulated) {
    throw NonEnumerableError(name() + " is too large for exhaustive computation");
  }
  std::call_once(tables_once_, [this] {
    const auto& els = elements();
    auto t = std::make_unique<FiniteTables>();
    const std::size_t n = els.size();
    t->size = n;
    t->zero = static_cast<std::uint32_t>(do_index(do_zero()));
    t->one = static_cast<std::uint32_t>(do_index(do_one()));
    t->add.resize(n * n);
    t->mul.resize(n * n);
    t->neg.resize(n);
    t->inverse.assign(n, -1);
    for (std::size_t a = 0; a < n; ++a) {
      t->neg[a] = static_cast<std::uint32_t>(do_index(do_neg(els[a].coords)));
      for (std::size_t b = 0; b < n; ++b) {
        t->add[a * n + b] = static_cast<std::uint32_t>(do_index(do_add(els[a].coords, els[b].coords)));
        t->mul[a * n + b] = static_cast<std::uint32_t>(do_index(do_mul(els[a].coords, els[b].coords)));
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (t->mul[a * n + b] == t->one && t->mul[b * n + a] == t->one) {
          t->inverse[a] = static_cast<std::int64_t>(b);
          break;
        }
      }
    }
    tables_ = std::move(t);
  });
  return *tables_;
}

const std::vector<Element>& Ring::scope_elements() const {
  if (is_finite()) return elements();
  std::call_once(scope_once_, [this] {
    for (auto& c : do_scope()) scope_.push_back(wrap(std::move(c)));
  });
  return scope_;
}

std::optional<Element> Ring::inverse(const Element& a) const {
  check(a);
  auto inv = do_inverse(a.coords);
  if (!inv) return std::nullopt;
  return wrap(std::move(*inv));
}

std::vector<int> Ring::degree_profile(const Element& a) const {
  check(a);
  return do_profile(a.coords);
}

bool Ring::profiles_fit(std::span<const int> a, std::span<const int> b) const {
  for (std::size_t i = 0; i < profile_limit_.size(); ++i) {
    const int da = i < a.size() ? a[i] : 0;
    const int db = i < b.size() ? b[i] : 0;
    if (da + db > profile_limit_[i]) return false;
  }
  return true;
}

Element Ring::random_element(std::mt19937_64& rng) const { return wrap(do_random(rng)); }

Element Ring::random_scope_element(std::mt19937_64& rng) const {
  const auto& scope = scope_elements();
  return scope[rng() % scope.size()];
}

std::size_t Ring::do_index(const Coords&) const {
  throw NonEnumerableError(name() + " does not support indexing");
}

Coords Ring::do_at(std::size_t) const { throw NonEnumerableError(name() + " does not support enumeration"); }

std::optional<Coords> Ring::do_inverse(const Coords& a) const {
  if (!is_finite()) throw NonEnumerableError(name() + " has no unit test");
  if (*cardinality_ <= kMaxTabulated) {
    const auto& t = tables();
    const auto inv = t.inverse[do_index(a)];
    if (inv < 0) return std::nullopt;
    return elements()[static_cast<std::size_t>(inv)].coords;
  }
  const Coords one = do_one();
  for (const auto& b : elements()) {
    if (do_mul(a, b.coords) == one && do_mul(b.coords, a) == one) return b.coords;
  }
  return std::nullopt;
}

std::vector<Coords> Ring::do_scope() const { throw NonEnumerableError(name() + " has no scope"); }

Coords Ring::do_random(std::mt19937_64& rng) const {
  if (!is_finite()) throw NonEnumerableError(name() + " has no sampler");
  return do_at(rng() % *cardinality_);
}

void Ring::validate(const ConstructOptions& options) {
  auto fail = [this](const std::string& law, const Coords& a, const Coords& b, const Coords& c) {
    throw AxiomError(name() + ": " + law + " fails at (" + do_format(a) + ", " + do_format(b) + ", " +
                     do_format(c) + ")");
  };
  const Coords zero = do_zero();
  const Coords one = do_one();
  auto check_triple = [&](const Coords& a, const Coords& b, const Coords& c) {
    if (do_add(do_add(a, b), c) != do_add(a, do_add(b, c))) fail("additive associativity", a, b, c);
    if (do_mul(do_mul(a, b), c) != do_mul(a, do_mul(b, c))) fail("multiplicative associativity", a, b, c);
    if (do_mul(a, do_add(b, c)) != do_add(do_mul(a, b), do_mul(a, c))) fail("left distributivity", a, b, c);
    if (do_mul(do_add(a, b), c) != do_add(do_mul(a, c), do_mul(b, c))) fail("right distributivity", a, b, c);
    if (do_add(a, b) != do_add(b, a)) fail("additive commutativity", a, b, c);
    if (do_add(a, zero) != a) fail("additive identity", a, b, c);
    if (do_mul(a, one) != a || do_mul(one, a) != a) fail("multiplicative identity", a, b, c);
    if (do_add(a, do_neg(a)) != zero) fail("additive inverse", a, b, c);
  };

  if (is_finite() && *cardinality_ <= options.exhaustive_axiom_bound) {
    const auto& els = elements();
    for (auto& a : els)
      for (auto& b : els)
        for (auto& c : els) check_triple(a.coords, b.coords, c.coords);
  } else {
    std::mt19937_64 rng(options.seed);
    for (std::size_t i = 0; i < options.sampled_triples; ++i) {
      const Coords a = do_random(rng), b = do_random(rng), c = do_random(rng);
      check_triple(a, b, c);
    }
  }

  if (is_finite()) {
    bool commutative = true;
    if (*cardinality_ <= kMaxTabulated) {
      const auto& t = tables();
      for (std::size_t a = 0; a < t.size && commutative; ++a)
        for (std::size_t b = a + 1; b < t.size && commutative; ++b)
          commutative = t.times(a, b) == t.times(b, a);
    } else {
      std::mt19937_64 rng(options.seed + 1);
      for (std::size_t i = 0; i < options.sampled_triples && commutative; ++i) {
        const Coords a = do_random(rng), b = do_random(rng);
        commutative = do_mul(a, b) == do_mul(b, a);
      }
    }
    commutative_ = commutative;
  }
}

bool SubsetHandle::contains(std::size_t i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

SubsetHandle make_subset(const Ring& ring, std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  return SubsetHandle{ring.tag(), std::move(indices)};
}

SubsetHandle make_subset(const Ring& ring, const std::vector<Element>& elements) {
  std::vector<std::size_t> idx;
  idx.reserve(elements.size());
  for (auto& e : elements) idx.push_back(ring.index(e));
  return make_subset(ring, std::move(idx));
}

std::vector<std::string> subset_strings(const Ring& ring, const SubsetHandle& subset) {
  if (subset.ring_tag != ring.tag()) throw MismatchError("subset does not belong to ring " + ring.name());
  std::vector<std::string> out;
  for (auto i : subset.members) out.push_back(ring.format(ring.at(i)));
  return out;
}

std::string format_subset(const Ring& ring, const SubsetHandle& subset) {
  std::string out = "{";
  bool first = true;
  for (auto& s : subset_strings(ring, subset)) {
    if (!first) out += ",";
    out += s;
    first = false;
  }
  return out + "}";
}

const ProductRing* as_product(const Ring& ring) { return dynamic_cast<const ProductRing*>(&ring); }
const TruncatedSeriesRing* as_truncated_series(const Ring& ring) {
  return dynamic_cast<const TruncatedSeriesRing*>(&ring);
}
const XYQuotientRing* as_xy_quotient(const Ring& ring) { return dynamic_cast<const XYQuotientRing*>(&ring); }
const GaloisRing* as_galois(const Ring& ring) { return dynamic_cast<const GaloisRing*>(&ring); }

}  // namespace skewarch
