#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "skewarch/ring.hpp"
#include "skewarch/ring_props.hpp"

namespace skewarch {

struct EndoOptions {
  /// Pairs sampled when validating on a truncated model.
  std::size_t sampled_pairs = 10000;
  std::uint64_t seed = 0x5eed;
  /// Powers alpha^t with t <= cache_depth are tabulated on finite rings.
  std::uint64_t cache_depth = 16;
};

/// A validated unital ring endomorphism. Immutable after construction.
class Endo {
 public:
  using Action = std::function<Element(const Element&)>;
  using PowerAction = std::function<Element(std::uint64_t, const Element&)>;
  using ProfileMap = std::function<std::vector<int>(std::uint64_t, std::vector<int>)>;

  const RingHandle& ring() const { return ring_; }
  /// Text form, e.g. "endo:frob".
  const std::string& name() const { return name_; }
  std::uint64_t tag() const { return tag_; }
  bool is_identity() const { return identity_; }

  Element apply(const Element& a) const;
  Element power_apply(std::uint64_t t, const Element& a) const;

  /// Degree profile bound for alpha^t(a) given the profile of a (truncated models).
  std::vector<int> profile_after(std::uint64_t t, std::vector<int> profile) const;
  /// alpha^t(a) loses no terms to truncation.
  bool image_faithful(std::uint64_t t, const Element& a) const;
  /// a * alpha^t(b) is represented without truncation loss.
  bool twisted_product_faithful(const Element& a, std::uint64_t t, const Element& b) const;

  struct Parts {
    RingHandle ring;
    std::string name;
    Action action;
    PowerAction structural_power;  // optional closed form for alpha^t
    ProfileMap profile_map;        // optional; identity on profiles when empty
    bool identity = false;
  };
  static std::shared_ptr<const Endo> build(Parts parts, const EndoOptions& options = {});

 private:
  explicit Endo(Parts parts);
  void validate(const EndoOptions& options) const;
  void tabulate(std::uint64_t depth);

  RingHandle ring_;
  std::string name_;
  std::uint64_t tag_;
  bool identity_;
  Action action_;
  PowerAction structural_power_;
  ProfileMap profile_map_;
  std::vector<std::vector<std::uint32_t>> power_tables_;  // [t][index] for finite tabulated rings
};

using EndoHandle = std::shared_ptr<const Endo>;

EndoHandle build_endo(const RingHandle& ring, std::string name, Endo::Action action, const EndoOptions& options = {});
/// endo:id, endo:frob, endo:diag, endo:xsq, endo:table:<file>
EndoHandle build_endo(const RingHandle& ring, std::string_view spec_text, const EndoOptions& options = {});
EndoHandle identity_endo(const RingHandle& ring);

/// Result of an endomorphism predicate. `exact` is false for scope-exact answers on
/// truncated models; `tested` counts the elements (or pairs) examined.
struct EndoPredicate {
  bool value = true;
  bool exact = true;
  std::vector<Element> witness;
  std::size_t tested = 0;
};

EndoPredicate is_injective(const Endo& endo);
/// No nonzero a with a * alpha(a) = 0.
EndoPredicate is_rigid(const Endo& endo);
/// ab = 0 iff a * alpha(b) = 0, for all a, b.
EndoPredicate is_compatible(const Endo& endo);
/// No nonunit is mapped to a unit.
EndoPredicate preserves_nonunits(const Endo& endo);

struct RigidDecomposition {
  EndoPredicate rigid;
  EndoPredicate compatible;
  Check reduced;
  bool consistent = true;  // rigid == (compatible && reduced)
};

RigidDecomposition rigid_decomposition_check(const Endo& endo);

}  // namespace skewarch
