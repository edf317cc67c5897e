#include "skewarch/registry.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "skewarch/error.hpp"

namespace skewarch {

const std::vector<RegistryEntry>& registry_list() {
  static const std::vector<RegistryEntry> entries = {
      {"zmod:6", "zmod:6", std::nullopt, "calibration: reduced non-Archimedean"},
      {"zmod:8", "zmod:8", std::nullopt, "calibration: Archimedean, not reduced"},
      {"zmod:12", "zmod:12", std::nullopt, "calibration: neither reduced nor Archimedean"},
      {"gf:2:2", "gf:2:2", std::nullopt, "calibration: field"},
      {"gf:5:1", "gf:5:1", std::nullopt, "calibration: prime field"},
      {"prod(zmod:2,zmod:2)", "prod(zmod:2,zmod:2)", std::nullopt,
       "calibration: von Neumann regular, not a division ring"},
      {"prod(zmod:2,zmod:2);endo:diag", "prod(zmod:2,zmod:2)", "endo:diag",
       "calibration: twist that maps a nonunit to a unit"},
      {"gf:2:2;endo:frob", "gf:2:2", "endo:frob", "calibration: Frobenius twist"},
      {"xyq:gf:2:1:N=8", "xyq:gf:2:1:N=8", std::nullopt, "Example 4.8"},
      {"xyq:gf:2:1:N=8;endo:xsq", "xyq:gf:2:1:N=8", "endo:xsq", "Example 4.8/4.9"},
  };
  return entries;
}

const RegistryEntry* find_entry(std::string_view id) {
  for (const auto& e : registry_list())
    if (e.id == id) return &e;
  return nullptr;
}

ResolvedEntry resolve(const RegistryEntry& entry) {
  static std::mutex mutex;
  static std::map<std::string, ResolvedEntry> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(entry.id); it != cache.end()) return it->second;
  ResolvedEntry out;
  out.entry = &entry;
  out.ring = construct_ring(entry.ring);
  out.endo = entry.endo ? build_endo(out.ring, *entry.endo) : identity_endo(out.ring);
  cache.emplace(entry.id, out);
  return out;
}

std::vector<std::string> self_check() {
  std::vector<std::string> errors;
  std::vector<std::string> seen;
  for (const auto& e : registry_list()) {
    if (std::find(seen.begin(), seen.end(), e.id) != seen.end()) errors.push_back(e.id + ": duplicate id");
    seen.push_back(e.id);
    try {
      resolve(e);
    } catch (const std::exception& ex) {
      errors.push_back(e.id + ": " + ex.what());
    }
  }
  return errors;
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {
      "arithmetic", "lemma-2-3", "prop-2-2",  "remark-2-4", "prop-3-1", "cor-3-2",         "thm-3-3",  "thm-3-4",
      "prop-4-1",   "lemma-4-2", "lemma-4-3", "thm-4-4",    "thm-4-5",  "cor-4-6",         "prop-4-7", "examples-4-8-9",
      "classify",   "falsify"};
  return ids;
}

bool is_suite_id(std::string_view id) {
  const auto& ids = suite_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

}  // namespace skewarch
