#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace skewarch {

using Json = nlohmann::ordered_json;

enum class Status { holds, fails, hypothesis_not_met, inconclusive_at_scale, holds_by_theorem };

std::string to_string(Status status);
std::optional<Status> parse_status(std::string_view text);

/// Outcome of one predicate or suite. `witness` is a JSON object (or null) whose
/// element values are canonical element text.
struct Verdict {
  std::string suite;
  Status status = Status::holds;
  Json witness;  // null when absent
  std::string certificate;
  std::vector<std::string> theorem_tags;
  /// The theorems predict that this check holds; a "fails" status then violates
  /// the exit-code contract. Not serialized.
  bool predicted_holds = false;
};

Verdict make_verdict(std::string suite, Status status, std::string certificate, Json witness = nullptr,
                     std::vector<std::string> tags = {});

Json to_json(const Verdict& v);
/// Throws SpecError on schema violations.
Verdict verdict_from_json(const Json& j);

}  // namespace skewarch
