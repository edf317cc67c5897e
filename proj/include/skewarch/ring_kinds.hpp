#pragma once

#include <unordered_map>

#include "skewarch/ring.hpp"

namespace skewarch {

struct CoordsHash {
  std::size_t operator()(const Coords& c) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : c) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    return h;
  }
};

class ZmodRing final : public Ring {
 public:
  explicit ZmodRing(RingSpec spec);
  std::int64_t modulus() const { return n_; }

 protected:
  Coords do_zero() const override { return {0}; }
  Coords do_one() const override { return {1 % n_}; }
  Coords do_add(const Coords& a, const Coords& b) const override;
  Coords do_neg(const Coords& a) const override;
  Coords do_mul(const Coords& a, const Coords& b) const override;
  std::string do_format(const Coords& a) const override;
  Coords do_parse(std::string_view text) const override;
  std::size_t do_index(const Coords& a) const override { return static_cast<std::size_t>(a[0]); }
  Coords do_at(std::size_t i) const override { return {static_cast<std::int64_t>(i)}; }

 private:
  std::int64_t n_;
};

/// GF(p^k) as F_p[t]/(modulus); coordinates are the residues c_0..c_{k-1}.
class GaloisRing final : public Ring {
 public:
  GaloisRing(RingSpec spec, std::int64_t p, int k, std::vector<std::int64_t> modulus);
  std::int64_t characteristic() const { return p_; }
  int degree() const { return k_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }

 protected:
  Coords do_zero() const override { return Coords(k_, 0); }
  Coords do_one() const override;
  Coords do_add(const Coords& a, const Coords& b) const override;
  Coords do_neg(const Coords& a) const override;
  Coords do_mul(const Coords& a, const Coords& b) const override;
  std::string do_format(const Coords& a) const override;
  Coords do_parse(std::string_view text) const override;
  std::size_t do_index(const Coords& a) const override;
  Coords do_at(std::size_t i) const override;

 private:
  std::int64_t p_;
  int k_;
  std::vector<std::int64_t> modulus_;
};

/// Least monic irreducible of degree k over F_p, preferring the Conway polynomial when tabulated.
std::vector<std::int64_t> default_modulus(std::int64_t p, int k);
bool is_irreducible_mod_p(const std::vector<std::int64_t>& poly, std::int64_t p);
bool is_prime(std::int64_t n);

class ProductRing final : public Ring {
 public:
  ProductRing(RingSpec spec, std::vector<RingHandle> factors);
  const std::vector<RingHandle>& factors() const { return factors_; }
  Element component(const Element& a, std::size_t i) const;
  Element make(const std::vector<Element>& components) const;

 protected:
  Coords do_zero() const override;
  Coords do_one() const override;
  Coords do_add(const Coords& a, const Coords& b) const override;
  Coords do_neg(const Coords& a) const override;
  Coords do_mul(const Coords& a, const Coords& b) const override;
  std::string do_format(const Coords& a) const override;
  Coords do_parse(std::string_view text) const override;
  std::size_t do_index(const Coords& a) const override;
  Coords do_at(std::size_t i) const override;

 private:
  template <class F>
  Coords componentwise(const Coords& a, const Coords& b, F f) const;
  std::vector<RingHandle> factors_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> dims_;
};

/// Smallest subring containing the ambient unity and the generators.
class SubRing final : public Ring {
 public:
  SubRing(RingSpec spec, RingHandle parent, std::vector<std::size_t> members);
  const RingHandle& parent() const { return parent_; }
  /// Parent enumeration index of each subring element.
  const std::vector<std::size_t>& embedding() const { return members_; }
  Element embed(const Element& a) const;

 protected:
  Coords do_zero() const override;
  Coords do_one() const override;
  Coords do_add(const Coords& a, const Coords& b) const override;
  Coords do_neg(const Coords& a) const override;
  Coords do_mul(const Coords& a, const Coords& b) const override;
  std::string do_format(const Coords& a) const override;
  Coords do_parse(std::string_view text) const override;
  std::size_t do_index(const Coords& a) const override;
  Coords do_at(std::size_t i) const override;

 private:
  RingHandle parent_;
  std::vector<std::size_t> members_;
  std::unordered_map<std::size_t, std::size_t> position_;
};

/// R/I with each coset represented by its first member in parent enumeration order.
class QuotientRing final : public Ring {
 public:
  /// `rep_of` maps each parent index to its coset representative; `reps` lists them sorted.
  QuotientRing(RingSpec spec, RingHandle parent, std::vector<std::size_t> ideal, std::vector<std::size_t> rep_of,
               std::vector<std::size_t> reps);
  const RingHandle& parent() const { return parent_; }
  const std::vector<std::size_t>& ideal() const { return ideal_; }
  Element project(const Element& parent_element) const;

 protected:
  Coords do_zero() const override;
  Coords do_one() const override;
  Coords do_add(const Coords& a, const Coords& b) const override;
  Coords do_neg(const Coords& a) const override;
  Coords do_mul(const Coords& a, const Coords& b) const override;
  std::string do_format(const Coords& a) const override;
  Coords do_parse(std::string_view text) const override;
  std::size_t do_index(const Coords& a) const override;
  Coords do_at(std::size_t i) const override;

 private:
  Coords canonical(const Coords& parent_coords) const;
  RingHandle parent_;
  std::vector<std::size_t> ideal_;
  std::vector<std::size_t> rep_of_;           // parent index -> representative parent index
  std::vector<std::size_t> reps_;             // sorted representatives
  std::unordered_map<std::size_t, std::size_t> position_;  // representative -> quotient index
};

/// base[[z]] / (z^{N+1}). Coordinates are the concatenated base coordinates of z^0..z^N.
class TruncatedSeriesRing final : public Ring {
 public:
  TruncatedSeriesRing(RingSpec spec, RingHandle base, int precision);
  const RingHandle& base() const { return base_; }
  int precision() const { return n_; }
  Element coefficient(const Element& a, int i) const;
  Element make(const std::vector<Element>& coefficients) const;

 protected:
  Coords do_zero() const override;
  Coords do_one() const override;
  Coords do_add(const Coords& a, const Coords& b) const override;
  Coords do_neg(const Coords& a) const override;
  Coords do_mul(const Coords& a, const Coords& b) const override;
  std::string do_format(const Coords& a) const override;
  Coords do_parse(std::string_view text) const override;
  std::optional<Coords> do_inverse(const Coords& a) const override;
  std::vector<Coords> do_scope() const override;
  std::vector<int> do_profile(const Coords& a) const override;
  Coords do_random(std::mt19937_64& rng) const override;

 private:
  std::vector<Element> split(const Coords& a) const;
  Coords join(const std::vector<Element>& cs) const;
  RingHandle base_;
  int n_;
  std::size_t dim_;
};

/// F[[x,y]]/(xy) truncated: a + B(x) + C(y) with deg B, deg C <= N.
/// Coordinates: [a, b_1..b_N, c_1..c_N], residues modulo the base characteristic.
class XYQuotientRing final : public Ring {
 public:
  XYQuotientRing(RingSpec spec, RingHandle base, int precision);
  const RingHandle& base() const { return base_; }
  int precision() const { return n_; }
  std::int64_t modulus() const { return m_; }
  Element x_power(int k) const;
  Element y_power(int k) const;
  /// a + B(x^{2^t}) + C(y), truncated.
  Element square_x_block(const Element& a, unsigned t) const;

 protected:
  Coords do_zero() const override;
  Coords do_one() const override;
  Coords do_add(const Coords& a, const Coords& b) const override;
  Coords do_neg(const Coords& a) const override;
  Coords do_mul(const Coords& a, const Coords& b) const override;
  std::string do_format(const Coords& a) const override;
  Coords do_parse(std::string_view text) const override;
  std::optional<Coords> do_inverse(const Coords& a) const override;
  std::vector<Coords> do_scope() const override;
  std::vector<int> do_profile(const Coords& a) const override;
  Coords do_random(std::mt19937_64& rng) const override;

 private:
  RingHandle base_;
  int n_;
  std::int64_t m_;
};

/// Subring of `parent` generated by the ambient unity and `generators`.
std::shared_ptr<const SubRing> make_subring(const RingHandle& parent, const std::vector<Element>& generators,
                                            const ConstructOptions& options = {});
/// Quotient of a finite ring by a two-sided ideal given as parent indices.
std::shared_ptr<const QuotientRing> make_quotient(const RingHandle& parent, const std::vector<std::size_t>& ideal,
                                                  const ConstructOptions& options = {});
/// Two-sided ideal generated by `generators` in a finite ring, as sorted parent indices.
std::vector<std::size_t> ideal_generated(const Ring& ring, const std::vector<std::size_t>& generators);

}  // namespace skewarch
