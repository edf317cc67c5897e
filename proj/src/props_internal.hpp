#pragma once

#include <string>
#include <vector>

#include "skewarch/props.hpp"

namespace skewarch::detail {

inline Json element_list(const Ring& ring, const std::vector<Element>& elements) {
  Json out = Json::array();
  for (const auto& e : elements) out.push_back(ring.format(e));
  return out;
}

inline std::string plural(std::size_t n, const std::string& noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

inline bool is_holds(Status s) { return s == Status::holds || s == Status::holds_by_theorem; }

/// R, J, J^2, ... ending at the first power that is {0} or repeats. Cached per ring.
const std::vector<SubsetHandle>& jacobson_powers(const Ring& ring);

/// Adic order of an element of a truncated model (J-adic on finite rings, (x,y)-adic on xyq, z-adic on tser).
int inner_order(const Ring& ring, const Element& a);

}  // namespace skewarch::detail
