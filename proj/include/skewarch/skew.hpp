#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "skewarch/endo.hpp"
#include "skewarch/ring.hpp"

namespace skewarch {

/// Element of R[x; alpha], coefficients on the left of powers of x.
/// Trailing zeros are stripped; the zero polynomial has no coefficients.
class SkewPoly {
 public:
  SkewPoly(EndoHandle endo, std::vector<Element> coefficients);

  const EndoHandle& endo() const { return endo_; }
  const Ring& ring() const { return *endo_->ring(); }
  const std::vector<Element>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Element coefficient(std::size_t i) const;

  friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  EndoHandle endo_;
  std::vector<Element> coeffs_;
};

/// Element of R[[x; alpha]] / (x^{N+1}); always N+1 coefficients.
class TruncSeries {
 public:
  TruncSeries(EndoHandle endo, int precision, std::vector<Element> coefficients);

  const EndoHandle& endo() const { return endo_; }
  const Ring& ring() const { return *endo_->ring(); }
  int precision() const { return precision_; }
  const std::vector<Element>& coefficients() const { return coeffs_; }
  const Element& coefficient(std::size_t i) const { return coeffs_.at(i); }
  bool is_zero() const;
  /// Largest index with a nonzero coefficient, or -1.
  int degree() const;
  /// Smallest index with a nonzero coefficient, or precision + 1 for zero.
  int order() const;

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.precision_ == b.precision_ && a.coeffs_ == b.coeffs_;
  }

 private:
  EndoHandle endo_;
  int precision_;
  std::vector<Element> coeffs_;
};

SkewPoly poly_constant(const EndoHandle& endo, const Element& c);
/// c * x^k
SkewPoly poly_monomial(const EndoHandle& endo, const Element& c, int k);
TruncSeries series_zero(const EndoHandle& endo, int precision);
TruncSeries series_constant(const EndoHandle& endo, int precision, const Element& c);
TruncSeries series_monomial(const EndoHandle& endo, int precision, const Element& c, int k);
TruncSeries to_series(const SkewPoly& f, int precision);

SkewPoly skew_add(const SkewPoly& f, const SkewPoly& g);
SkewPoly skew_neg(const SkewPoly& f);
SkewPoly skew_sub(const SkewPoly& f, const SkewPoly& g);
SkewPoly skew_mul(const SkewPoly& f, const SkewPoly& g);
SkewPoly skew_pow(const SkewPoly& f, std::uint64_t k);
TruncSeries skew_add(const TruncSeries& f, const TruncSeries& g);
TruncSeries skew_neg(const TruncSeries& f);
TruncSeries skew_sub(const TruncSeries& f, const TruncSeries& g);
TruncSeries skew_mul(const TruncSeries& f, const TruncSeries& g);
TruncSeries skew_pow(const TruncSeries& f, std::uint64_t k);

/// The exact product f*g (before reduction mod x^{N+1}) has no term of degree > N
/// and, on truncated coefficient rings, no coefficient product loses terms.
bool product_faithful(const TruncSeries& f, const TruncSeries& g);

struct GeometricInverse {
  TruncSeries inverse;
  /// Least k with (fx)^k = 0 exactly, when found with k <= N + 1.
  std::optional<std::uint64_t> terminated_at;
};

/// sum_k (-1)^k (fx)^k truncated at N, the inverse of 1 + fx.
GeometricInverse geometric_inverse(const SkewPoly& f, int precision);

/// Two-sided inverse computed degree by degree. Throws NotInvertibleError when the
/// constant term is not a unit.
TruncSeries series_inverse(const TruncSeries& g);

enum class ProbeKind { nilpotent, not_within_bound, truncation_artifact };

struct NilpotencyProbe {
  ProbeKind kind = ProbeKind::not_within_bound;
  std::uint64_t index = 0;  // first k with f^k = 0 (also set for artifacts)
};

NilpotencyProbe nilpotency_probe(const SkewPoly& f, std::uint64_t bound);
/// A zero power counts as genuine only if every product on the way was faithful.
NilpotencyProbe nilpotency_probe(const TruncSeries& f, std::uint64_t bound);

enum class DivisibilityStatus { found, none, budget };

/// Residual lookup tables {c : c * v = r}, reusable across solver calls on one ring.
class DivisibilityCache {
 public:
  using Table = std::unordered_map<Coords, std::vector<std::size_t>, CoordsHash>;
  const Table& table(const Ring& ring, const std::vector<Element>& candidates, const Element& v);

 private:
  std::uint64_t ring_tag_ = 0;
  std::unordered_map<Coords, Table, CoordsHash> tables_;
};

struct DivisibilityOptions {
  std::uint64_t node_limit = 2'000'000;
  DivisibilityCache* cache = nullptr;  // optional, not thread-safe
};

struct DivisibilityResult {
  DivisibilityStatus status = DivisibilityStatus::none;
  std::optional<TruncSeries> h;
  /// False when coefficient candidates were limited to the support-bounded scope.
  bool exact = true;
  std::uint64_t nodes = 0;
};

/// Finds the least h (lexicographic in coefficient enumeration order) with
/// f = h * g^n mod x^{N+1}, by depth-first search with conflict-directed backjumping.
DivisibilityResult solve_right_divisibility(const TruncSeries& f, const TruncSeries& g, std::uint64_t n,
                                            const DivisibilityOptions& options = {});

/// `[c0,...,cd]@<ring>;<endo>`; series text appends `;N=<precision>`.
std::string format(const SkewPoly& f);
std::string format(const TruncSeries& f);
/// Coefficient list only, e.g. `[1,0,1]`.
std::string format_coefficients(const Ring& ring, const std::vector<Element>& coefficients);
SkewPoly parse_poly(std::string_view text);
TruncSeries parse_series(std::string_view text);
/// Coefficient list parsed against an existing endomorphism.
SkewPoly parse_poly(const EndoHandle& endo, std::string_view coefficients);
TruncSeries parse_series(const EndoHandle& endo, int precision, std::string_view coefficients);

}  // namespace skewarch
