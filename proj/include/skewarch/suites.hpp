#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewarch/props.hpp"
#include "skewarch/registry.hpp"

namespace skewarch {

struct SuiteReport {
  std::string entry;
  std::string suite;
  std::vector<Verdict> verdicts;
};

/// Runs each suite on each entry. Entries run in parallel up to config.jobs;
/// reports come back in (entry, suite) order.
std::vector<SuiteReport> run_suites(const std::vector<const RegistryEntry*>& entries,
                                    const std::vector<std::string>& suites, const RunConfig& config);

/// Zero-divisor probe on R[x; alpha]: seeded polynomials of degree <= max_degree,
/// each tested against nonzero constants (monomials on truncated models) and a second
/// seeded polynomial. Zero products count only when every coefficient product is faithful.
struct ZeroDivisorProbe {
  std::uint64_t samples = 0;
  std::optional<std::pair<SkewPoly, SkewPoly>> witness;  // (g, f) with g f = 0
};

ZeroDivisorProbe zero_divisor_probe(const EndoHandle& endo, int max_degree, std::uint64_t samples,
                                    std::uint64_t seed);

}  // namespace skewarch
