#include <array>
#include <cstdio>
#include <set>
#include <string>

#include "doctest.h"
#include "skewarch/registry.hpp"
#include "skewarch/report.hpp"
#include "skewarch/suites.hpp"

using namespace skewarch;

namespace {

struct Run {
  int code = 0;
  std::string out;
};

Run sh(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " \"" SKEWARCH_BIN "\" " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  Run r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("registry") {
  std::set<std::string> ids;
  for (const auto& e : registry_list()) CHECK(ids.insert(e.id).second);
  CHECK(self_check().empty());
  REQUIRE(find_entry("xyq:gf:2:1:N=8;endo:xsq"));
  CHECK(find_entry("xyq:gf:2:1:N=8;endo:xsq")->provenance == "Example 4.8/4.9");
  REQUIRE(find_entry("zmod:6"));
  CHECK(find_entry("zmod:6")->provenance == "calibration: reduced non-Archimedean");
  CHECK_FALSE(find_entry("zmod:7"));
  CHECK(suite_ids().size() == 18);
  CHECK(is_suite_id("falsify"));
  CHECK_FALSE(is_suite_id("all"));
}

TEST_CASE("run_suites shape and exit code") {
  std::vector<const RegistryEntry*> entries;
  for (const auto& e : registry_list()) entries.push_back(&e);
  const auto reports = run_suites(entries, {"classify"}, RunConfig{});
  REQUIRE(reports.size() == entries.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].entry == entries[i]->id);
    CHECK(reports[i].suite == "classify");
    CHECK_FALSE(reports[i].verdicts.empty());
  }
  CHECK(exit_code(reports) == 0);
  SuiteReport bad{"x", "y", {make_verdict("y", Status::fails, "c", Json{{"a", 1}})}};
  bad.verdicts[0].predicted_holds = true;
  CHECK(exit_code({bad}) == 1);
  bad.verdicts[0].predicted_holds = false;
  CHECK(exit_code({bad}) == 0);
}

TEST_CASE("CLI exit codes") {
  CHECK(sh("list").code == 0);
  CHECK(sh("").code == 2);
  CHECK(sh("run --entry zmod:7 --suite classify").code == 2);
  CHECK(sh("run --entry zmod:6 --suite nope").code == 2);
  CHECK(sh("run --entry zmod:6 --suite classify --seed x").code == 2);
  CHECK(sh("run --entry zmod:6 --suite classify --depth 0").code == 2);
  CHECK(sh("explain --input /nonexistent/file.json").code != 0);
  CHECK(sh("--help").code == 0);
}

TEST_CASE("CLI JSON stream") {
  auto r = sh("run --entry zmod:6 --suite lemma-2-3");
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("schema") == kSchemaVersion);
  CHECK(j.at("config").at("seed") == 42);
  REQUIRE(j.at("reports").size() == 1);
  CHECK(j.at("reports")[0].at("entry") == "zmod:6");
  CHECK(j.at("reports")[0].at("verdicts").size() == 4);

  auto listed = Json::parse(sh("list").out);
  CHECK(listed.at("entries").size() == registry_list().size());
}

TEST_CASE("CLI environment and flag precedence") {
  auto env = Json::parse(sh("run --entry zmod:6 --suite classify", "SKEWARCH_SEED=7").out);
  CHECK(env.at("config").at("seed") == 7);
  auto flag = Json::parse(sh("run --entry zmod:6 --suite classify --seed 9", "SKEWARCH_SEED=7").out);
  CHECK(flag.at("config").at("seed") == 9);
  auto text = sh("run --entry zmod:6 --suite classify", "SKEWARCH_FORMAT=text");
  CHECK(text.out.rfind("seed 42", 0) == 0);
}

TEST_CASE("text and JSON carry the same witnesses") {
  const auto j = sh("run --entry zmod:6 --suite falsify");
  const auto t = sh("run --entry zmod:6 --suite falsify --format text");
  REQUIRE(j.code == 0);
  CHECK(explain(Json::parse(j.out)) == t.out);
  CHECK(t.out.find("f = [2]") != std::string::npos);
  CHECK(t.out.find("g = [2]") != std::string::npos);
}

TEST_CASE("explain") {
  const auto e = sh("explain --entry zmod:6 --suite thm-4-4");
  REQUIRE(e.code == 0);
  CHECK(e.out.find("a = 2") != std::string::npos);
  CHECK(e.out.find("stabilized = {0,2,4}") != std::string::npos);

  const auto j = sh("run --entry zmod:6 --suite thm-4-4");
  const std::string path = "test_cli_stream.json";
  FILE* f = std::fopen(path.c_str(), "w");
  REQUIRE(f);
  std::fputs(j.out.c_str(), f);
  std::fclose(f);
  CHECK(sh("explain --input " + path).out == e.out);
  CHECK(sh("explain --input - < " + path).out == e.out);
  std::remove(path.c_str());
}
