#pragma once

#include <string>
#include <vector>

#include "skewarch/registry.hpp"
#include "skewarch/suites.hpp"
#include "skewarch/verdict.hpp"

namespace skewarch {

inline constexpr int kSchemaVersion = 1;

/// {"schema":1, "config":{...}, "reports":[{"entry","suite","verdicts":[...]}]}
Json stream_json(const RunConfig& config, const std::vector<SuiteReport>& reports);
Json report_json(const SuiteReport& report);
Json registry_json();

/// Pretty JSON with a trailing newline.
std::string dump(const Json& j);

/// Human-readable rendering of a stream, one report, or one verdict. Uses only the
/// JSON, so text and JSON carry the same data.
std::string explain(const Json& doc);
std::string registry_text();

/// 1 when a verdict fails where the theorems predict that it holds, else 0.
int exit_code(const std::vector<SuiteReport>& reports);

}  // namespace skewarch
