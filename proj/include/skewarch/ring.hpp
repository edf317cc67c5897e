#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewarch/spec.hpp"

namespace skewarch {

class SubRing;
class QuotientRing;
struct ConstructOptions;

using Coords = std::vector<std::int64_t>;

/// A member of one specific ring. Equality is equality of canonical coordinates.
struct Element {
  std::uint64_t ring_tag = 0;
  Coords coords;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

enum class Side { right, left };

std::string to_string(Side side);

/// Flat arithmetic tables of a small finite ring, indexed by enumeration order.
struct FiniteTables {
  std::size_t size = 0;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;
  std::vector<std::uint32_t> add;  // add[a * size + b]
  std::vector<std::uint32_t> mul;
  std::vector<std::uint32_t> neg;
  std::vector<std::int64_t> inverse;  // two-sided inverse or -1

  std::uint32_t plus(std::uint32_t a, std::uint32_t b) const { return add[a * size + b]; }
  std::uint32_t times(std::uint32_t a, std::uint32_t b) const { return mul[a * size + b]; }
  bool unit(std::uint32_t a) const { return inverse[a] >= 0; }
};

/// Rings with at most this many elements get arithmetic tables.
inline constexpr std::size_t kMaxTabulated = 1024;

struct ConstructOptions {
  /// Exhaustive triple checks up to this cardinality; seeded sampling above it.
  std::size_t exhaustive_axiom_bound = 32;
  std::size_t sampled_triples = 10000;
  std::uint64_t seed = 0x5eed;
};

/// Realized arithmetic of a coefficient ring. Immutable after construction.
///
/// Finite rings enumerate their elements in a fixed order. Truncated models
/// (tser, xyq) are not enumerated; instead they expose a "scope": the elements
/// whose support lies in degrees <= N/2, together with a degree profile that
/// decides whether a product is represented faithfully at precision N.
class Ring : public std::enable_shared_from_this<Ring> {
 public:
  virtual ~Ring() = default;
  Ring(const Ring&) = delete;
  Ring& operator=(const Ring&) = delete;

  const RingSpec& spec() const { return spec_; }
  std::string name() const { return spec_.to_string(); }
  std::uint64_t tag() const { return tag_; }

  /// Number of elements, or nullopt for a truncated model.
  std::optional<std::size_t> cardinality() const { return cardinality_; }
  bool is_finite() const { return cardinality_.has_value(); }
  bool is_commutative() const { return commutative_; }

  Element zero() const;
  Element one() const;
  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element sub(const Element& a, const Element& b) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, std::uint64_t k) const;
  Element from_integer(std::int64_t k) const;
  bool is_zero(const Element& a) const;

  std::string format(const Element& a) const;
  Element parse(std::string_view text) const;

  // Finite rings only; throw NonEnumerableError otherwise.
  std::size_t index(const Element& a) const;
  Element at(std::size_t i) const;
  const std::vector<Element>& elements() const;
  const FiniteTables& tables() const;

  /// All elements of a finite ring; the support-bounded fragment of a truncated model.
  const std::vector<Element>& scope_elements() const;

  std::optional<Element> inverse(const Element& a) const;
  bool is_unit(const Element& a) const { return inverse(a).has_value(); }

  /// Per-variable degrees of `a` in a truncated model (empty for finite rings).
  std::vector<int> degree_profile(const Element& a) const;
  /// Largest representable degree per variable (empty for finite rings).
  const std::vector<int>& profile_limit() const { return profile_limit_; }
  /// True when the product of elements with these profiles loses no terms to truncation.
  bool profiles_fit(std::span<const int> a, std::span<const int> b) const;

  Element random_element(std::mt19937_64& rng) const;
  Element random_scope_element(std::mt19937_64& rng) const;

  void check(const Element& a) const;

 protected:
  Ring(RingSpec spec, std::optional<std::size_t> cardinality);

  /// Runs the axiom checks and computes the commutativity flag; call at the end of
  /// the derived constructor path (done by construct_ring).
  void validate(const ConstructOptions& options);
  void set_profile_limit(std::vector<int> limit) { profile_limit_ = std::move(limit); }
  void set_commutative(bool c) { commutative_ = c; }

  Element wrap(Coords c) const { return Element{tag_, std::move(c)}; }

  virtual Coords do_zero() const = 0;
  virtual Coords do_one() const = 0;
  virtual Coords do_add(const Coords& a, const Coords& b) const = 0;
  virtual Coords do_neg(const Coords& a) const = 0;
  virtual Coords do_mul(const Coords& a, const Coords& b) const = 0;
  virtual std::string do_format(const Coords& a) const = 0;
  virtual Coords do_parse(std::string_view text) const = 0;

  virtual std::size_t do_index(const Coords& a) const;
  virtual Coords do_at(std::size_t i) const;
  virtual std::optional<Coords> do_inverse(const Coords& a) const;
  virtual std::vector<Coords> do_scope() const;
  virtual std::vector<int> do_profile(const Coords&) const { return {}; }
  virtual Coords do_random(std::mt19937_64& rng) const;

 private:
  friend std::shared_ptr<const Ring> construct_ring(const RingSpec&, const ConstructOptions&);
  friend std::shared_ptr<const Ring> construct_ring_uncached(const RingSpec&, const ConstructOptions&);
  friend class SubRing;
  friend class QuotientRing;
  friend std::shared_ptr<const SubRing> make_subring(const std::shared_ptr<const Ring>&, const std::vector<Element>&,
                                                     const ConstructOptions&);
  friend std::shared_ptr<const QuotientRing> make_quotient(const std::shared_ptr<const Ring>&,
                                                           const std::vector<std::size_t>&, const ConstructOptions&);

  RingSpec spec_;
  std::uint64_t tag_;
  std::optional<std::size_t> cardinality_;
  bool commutative_ = false;
  std::vector<int> profile_limit_;

  mutable std::once_flag elements_once_;
  mutable std::vector<Element> elements_;
  mutable std::once_flag tables_once_;
  mutable std::unique_ptr<FiniteTables> tables_;
  mutable std::once_flag scope_once_;
  mutable std::vector<Element> scope_;
};

using RingHandle = std::shared_ptr<const Ring>;

RingHandle construct_ring(const RingSpec& spec, const ConstructOptions& options = {});
RingHandle construct_ring(std::string_view spec_text);
/// Builds a fresh ring, bypassing the handle cache used by construct_ring.
RingHandle construct_ring_uncached(const RingSpec& spec, const ConstructOptions& options = {});

/// Elements of a ring kept as sorted, deduplicated enumeration indices.
struct SubsetHandle {
  std::uint64_t ring_tag = 0;
  std::vector<std::size_t> members;

  bool contains(std::size_t i) const;
  std::size_t size() const { return members.size(); }
  friend bool operator==(const SubsetHandle&, const SubsetHandle&) = default;
};

SubsetHandle make_subset(const Ring& ring, std::vector<std::size_t> indices);
SubsetHandle make_subset(const Ring& ring, const std::vector<Element>& elements);
/// "{0,2,4}"
std::string format_subset(const Ring& ring, const SubsetHandle& subset);
std::vector<std::string> subset_strings(const Ring& ring, const SubsetHandle& subset);

// Accessors for structured kinds (nullptr when the ring is of another kind).
class ProductRing;
class TruncatedSeriesRing;
class XYQuotientRing;
class GaloisRing;

const ProductRing* as_product(const Ring& ring);
const TruncatedSeriesRing* as_truncated_series(const Ring& ring);
const XYQuotientRing* as_xy_quotient(const Ring& ring);
const GaloisRing* as_galois(const Ring& ring);

}  // namespace skewarch
