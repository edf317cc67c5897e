#include <fstream>
#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skewarch/error.hpp"
#include "skewarch/report.hpp"

using namespace skewarch;

namespace {

struct Options {
  std::vector<std::string> entries{"all"};
  std::vector<std::string> suites{"all"};
  std::string format = "json";
  std::string input;
  RunConfig config;
};

void add_run_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--entry", o.entries, "registry id, or all")->envname("SKEWARCH_ENTRY")->delimiter(' ');
  cmd->add_option("--suite", o.suites, "suite id, or all")->envname("SKEWARCH_SUITE")->delimiter(' ');
  cmd->add_option("--seed", o.config.seed, "64-bit PRNG seed")->envname("SKEWARCH_SEED");
  cmd->add_option("--precision", o.config.precision, "series precision N")
      ->envname("SKEWARCH_PRECISION")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--depth", o.config.depth, "falsifier depth")->envname("SKEWARCH_DEPTH")->check(CLI::PositiveNumber);
  cmd->add_option("--budget", o.config.budget, "sample budget")->envname("SKEWARCH_BUDGET")->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", o.config.jobs, "entries run in parallel")->envname("SKEWARCH_JOBS")->check(CLI::PositiveNumber);
}

// Returns an exit code, or -1 when the selection is valid.
int select(const Options& o, std::vector<const RegistryEntry*>& entries, std::vector<std::string>& suites) {
  for (const auto& id : o.entries) {
    if (id == "all") {
      for (const auto& e : registry_list()) entries.push_back(&e);
    } else if (const auto* e = find_entry(id)) {
      entries.push_back(e);
    } else {
      std::cerr << "skewarch: unknown entry '" << id << "' (see 'skewarch list')\n";
      return 2;
    }
  }
  for (const auto& id : o.suites) {
    if (id == "all") {
      suites.insert(suites.end(), suite_ids().begin(), suite_ids().end());
    } else if (is_suite_id(id)) {
      suites.push_back(id);
    } else {
      std::cerr << "skewarch: unknown suite '" << id << "'\n";
      return 2;
    }
  }
  return -1;
}

int run(Options& o, bool force_text) {
  std::vector<const RegistryEntry*> entries;
  std::vector<std::string> suites;
  if (int code = select(o, entries, suites); code >= 0) return code;
  if (const auto errors = self_check(); !errors.empty()) {
    for (const auto& e : errors) std::cerr << "skewarch: self-check: " << e << "\n";
    return 3;
  }
  std::vector<SuiteReport> reports;
  try {
    reports = run_suites(entries, suites, o.config);
  } catch (const Error& e) {
    std::cerr << "skewarch: " << e.what() << "\n";
    return 3;
  }
  const Json stream = stream_json(o.config, reports);
  std::cout << (force_text || o.format == "text" ? explain(stream) : dump(stream));
  return exit_code(reports);
}

int explain_input(const Options& o) {
  std::string text;
  if (o.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(o.input);
    if (!in) {
      std::cerr << "skewarch: cannot read " << o.input << "\n";
      return 2;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    std::cout << explain(Json::parse(text));
  } catch (const std::exception& e) {
    std::cerr << "skewarch: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew polynomial and skew power series rings over finite rings: Archimedean property suites"};
  app.require_subcommand(1);
  Options o;

  auto* list = app.add_subcommand("list", "list registry entries");
  list->add_option("--format", o.format, "json or text")
      ->envname("SKEWARCH_FORMAT")
      ->check(CLI::IsMember({"json", "text"}));

  auto* run_cmd = app.add_subcommand("run", "run suites and print a report stream");
  add_run_flags(run_cmd, o);
  run_cmd->add_option("--format", o.format, "json or text")
      ->envname("SKEWARCH_FORMAT")
      ->check(CLI::IsMember({"json", "text"}));

  auto* explain_cmd = app.add_subcommand("explain", "render a JSON report as text, or run and render");
  add_run_flags(explain_cmd, o);
  explain_cmd->add_option("--input", o.input, "JSON report file ('-' for stdin)")->envname("SKEWARCH_INPUT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  o.config.format = o.format == "text" ? Format::text : Format::json;

  if (*list) {
    std::cout << (o.format == "text" ? registry_text() : dump(registry_json()));
    return 0;
  }
  if (*run_cmd) return run(o, false);
  if (!o.input.empty()) return explain_input(o);
  return run(o, true);
}
