#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "skewarch/endo.hpp"
#include "skewarch/ring.hpp"

namespace skewarch {

struct RegistryEntry {
  std::string id;
  std::string ring;                 // ring spec text
  std::optional<std::string> endo;  // endo spec text; identity when absent
  std::string provenance;
};

/// Built-in entries in report order. Ids are unique.
const std::vector<RegistryEntry>& registry_list();
const RegistryEntry* find_entry(std::string_view id);

struct ResolvedEntry {
  const RegistryEntry* entry = nullptr;
  RingHandle ring;
  EndoHandle endo;
};

/// Constructs the ring and validates the endomorphism (once per entry); throws on failure.
ResolvedEntry resolve(const RegistryEntry& entry);

/// Constructs every entry. Returns one message per failure (empty on success).
std::vector<std::string> self_check();

enum class Format { json, text };

struct RunConfig {
  std::uint64_t seed = 42;
  int precision = 16;
  int depth = 5;
  std::uint64_t budget = 10000;
  Format format = Format::json;
  int jobs = 1;
};

/// Suite ids in canonical order (without "all").
const std::vector<std::string>& suite_ids();
bool is_suite_id(std::string_view id);

}  // namespace skewarch
