#include "skewarch/verdict.hpp"

#include <array>
#include <utility>

#include "skewarch/error.hpp"

namespace skewarch {

namespace {

constexpr std::array<std::pair<Status, std::string_view>, 5> kStatusNames{{
    {Status::holds, "holds"},
    {Status::fails, "fails"},
    {Status::hypothesis_not_met, "hypothesis-not-met"},
    {Status::inconclusive_at_scale, "inconclusive-at-scale"},
    {Status::holds_by_theorem, "holds-by-theorem"},
}};

}  // namespace

std::string to_string(Status status) {
  for (const auto& [s, name] : kStatusNames)
    if (s == status) return std::string(name);
  return "unknown";
}

std::optional<Status> parse_status(std::string_view text) {
  for (const auto& [s, name] : kStatusNames)
    if (name == text) return s;
  return std::nullopt;
}

Verdict make_verdict(std::string suite, Status status, std::string certificate, Json witness,
                     std::vector<std::string> tags) {
  if (status == Status::fails && witness.is_null()) {
    throw Error("a failing verdict for " + suite + " must carry a witness");
  }
  Verdict v;
  v.suite = std::move(suite);
  v.status = status;
  v.witness = std::move(witness);
  v.certificate = std::move(certificate);
  v.theorem_tags = std::move(tags);
  return v;
}

Json to_json(const Verdict& v) {
  Json j;
  j["suite"] = v.suite;
  j["status"] = to_string(v.status);
  j["witness"] = v.witness;
  j["certificate"] = v.certificate;
  j["theorem_tags"] = v.theorem_tags;
  return j;
}

Verdict verdict_from_json(const Json& j) {
  if (!j.is_object()) throw SpecError("verdict must be a JSON object");
  for (const char* key : {"suite", "status", "witness", "certificate", "theorem_tags"}) {
    if (!j.contains(key)) throw SpecError(std::string("verdict is missing '") + key + "'");
  }
  Verdict v;
  v.suite = j.at("suite").get<std::string>();
  const auto status = parse_status(j.at("status").get<std::string>());
  if (!status) throw SpecError("unknown verdict status '" + j.at("status").get<std::string>() + "'");
  v.status = *status;
  v.witness = j.at("witness");
  if (!v.witness.is_null() && !v.witness.is_object()) throw SpecError("verdict witness must be an object or null");
  v.certificate = j.at("certificate").get<std::string>();
  v.theorem_tags = j.at("theorem_tags").get<std::vector<std::string>>();
  return v;
}

}  // namespace skewarch
