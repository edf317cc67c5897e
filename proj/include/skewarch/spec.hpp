#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace skewarch {

/// Constructible description of a coefficient ring.
///
/// Canonical text forms:
///   zmod:6
///   gf:2:2             (default modulus)    gf:2:2:1,1,1  (modulus c0..ck, low to high)
///   prod(zmod:2,zmod:3)
///   sub(<spec>;g1,g2)  subring generated by g1, g2 (parent element syntax)
///   quot(<spec>;g1,g2) quotient by the two-sided ideal generated by g1, g2
///   tser(<spec>,N=16)  <spec>[[z]] / (z^17)
///   xyq:gf:2:1:N=8     F[[x,y]]/(xy) truncated in degrees > N
struct RingSpec {
  struct Zmod {
    std::int64_t n = 0;
  };
  struct Galois {
    std::int64_t p = 0;
    int k = 0;
    /// Monic modulus, coefficients low to high (size k+1). Empty means "default".
    std::vector<std::int64_t> modulus;
  };
  struct Product {
    std::vector<RingSpec> factors;
  };
  struct Subring {
    std::shared_ptr<const RingSpec> parent;
    std::vector<std::string> generators;
  };
  struct Quotient {
    std::shared_ptr<const RingSpec> parent;
    std::vector<std::string> generators;
  };
  struct TruncatedSeries {
    std::shared_ptr<const RingSpec> base;
    int precision = 0;
  };
  struct XYQuotient {
    std::shared_ptr<const RingSpec> base;
    int precision = 0;
  };

  std::variant<Zmod, Galois, Product, Subring, Quotient, TruncatedSeries, XYQuotient> kind;

  static RingSpec parse(std::string_view text);
  std::string to_string() const;

  static RingSpec zmod(std::int64_t n) { return RingSpec{Zmod{n}}; }
  static RingSpec galois(std::int64_t p, int k) { return RingSpec{Galois{p, k, {}}}; }
  static RingSpec product(std::vector<RingSpec> factors) { return RingSpec{Product{std::move(factors)}}; }
};

/// Splits `text` on `sep`, ignoring separators nested inside (), [] or {}.
std::vector<std::string> split_top_level(std::string_view text, char sep);

std::string trim(std::string_view text);

std::int64_t parse_integer(std::string_view text);

}  // namespace skewarch
