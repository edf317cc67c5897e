#include "skewarch/report.hpp"

#include <sstream>

#include "skewarch/error.hpp"

namespace skewarch {

Json report_json(const SuiteReport& report) {
  Json j;
  j["entry"] = report.entry;
  j["suite"] = report.suite;
  Json vs = Json::array();
  for (const auto& v : report.verdicts) vs.push_back(to_json(v));
  j["verdicts"] = std::move(vs);
  return j;
}

Json stream_json(const RunConfig& config, const std::vector<SuiteReport>& reports) {
  Json j;
  j["schema"] = kSchemaVersion;
  Json c;
  c["seed"] = config.seed;
  c["precision"] = config.precision;
  c["depth"] = config.depth;
  c["budget"] = config.budget;
  j["config"] = std::move(c);
  Json rs = Json::array();
  for (const auto& r : reports) rs.push_back(report_json(r));
  j["reports"] = std::move(rs);
  return j;
}

Json registry_json() {
  Json j;
  j["schema"] = kSchemaVersion;
  Json es = Json::array();
  for (const auto& e : registry_list()) {
    Json o;
    o["id"] = e.id;
    o["ring"] = e.ring;
    o["endo"] = e.endo ? *e.endo : "endo:id";
    o["provenance"] = e.provenance;
    es.push_back(std::move(o));
  }
  j["entries"] = std::move(es);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

namespace {

std::string value_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void explain_verdict(std::ostringstream& out, const Json& v, const std::string& indent) {
  const Verdict verdict = verdict_from_json(v);
  out << indent << "[" << to_string(verdict.status) << "] " << verdict.suite;
  if (!verdict.theorem_tags.empty()) {
    out << "  (";
    for (std::size_t i = 0; i < verdict.theorem_tags.size(); ++i) out << (i ? ", " : "") << verdict.theorem_tags[i];
    out << ")";
  }
  out << "\n" << indent << "  certificate: " << verdict.certificate << "\n";
  if (verdict.witness.is_null()) return;
  out << indent << "  witness:\n";
  for (const auto& [key, value] : verdict.witness.items()) {
    if (value.is_array() && !value.empty()) {
      out << indent << "    " << key << ":\n";
      std::size_t step = 1;
      for (const auto& item : value) out << indent << "      " << step++ << ". " << value_text(item) << "\n";
    } else if (value.is_object()) {
      out << indent << "    " << key << ":\n";
      for (const auto& [k2, v2] : value.items()) out << indent << "      " << k2 << " = " << value_text(v2) << "\n";
    } else {
      out << indent << "    " << key << " = " << value_text(value) << "\n";
    }
  }
}

void explain_report(std::ostringstream& out, const Json& r) {
  out << "== " << r.at("entry").get<std::string>() << " / " << r.at("suite").get<std::string>() << "\n";
  for (const auto& v : r.at("verdicts")) explain_verdict(out, v, "  ");
}

}  // namespace

std::string explain(const Json& doc) {
  std::ostringstream out;
  try {
    if (doc.contains("reports")) {
      const auto& c = doc.at("config");
      out << "seed " << c.at("seed").dump() << ", precision " << c.at("precision").dump() << ", depth "
          << c.at("depth").dump() << ", budget " << c.at("budget").dump() << "\n";
      for (const auto& r : doc.at("reports")) explain_report(out, r);
    } else if (doc.contains("verdicts")) {
      explain_report(out, doc);
    } else {
      explain_verdict(out, doc, "");
    }
  } catch (const nlohmann::json::exception& e) {
    throw SpecError(std::string("malformed report: ") + e.what());
  }
  return out.str();
}

std::string registry_text() {
  std::ostringstream out;
  for (const auto& e : registry_list()) {
    out << e.id << "\n  ring " << e.ring << ", " << (e.endo ? *e.endo : "endo:id") << "\n  " << e.provenance << "\n";
  }
  return out.str();
}

int exit_code(const std::vector<SuiteReport>& reports) {
  for (const auto& r : reports)
    for (const auto& v : r.verdicts)
      if (v.status == Status::fails && v.predicted_holds) return 1;
  return 0;
}

}  // namespace skewarch
