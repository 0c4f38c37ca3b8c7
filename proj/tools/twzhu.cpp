#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "twzhu/runner.hpp"
#include "twzhu/scenario.hpp"

namespace {

struct Args {
  std::string scenario;
  std::string out;
  int weight_cap = -1;
  long long seed = -1;
  bool dump_tables = false;
  bool no_timing = false;
};

void add_flags(CLI::App* cmd, Args& a) {
  cmd->add_option("--scenario", a.scenario, "Scenario file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--weight-cap", a.weight_cap, "Override the weight cap")->check(CLI::Range(0, 16));
  cmd->add_option("--out", a.out, "Write the report here instead of stdout");
  cmd->add_flag("--dump-tables", a.dump_tables, "Write product and action tables next to the report");
  cmd->add_option("--seed", a.seed, "Override the scenario seed")->check(CLI::NonNegativeNumber);
  cmd->add_flag("--no-timing", a.no_timing, "Omit timing fields");
}

std::string tables_path(const std::string& out) {
  if (out.empty()) return "twzhu_tables.json";
  const auto dot = out.rfind('.');
  const auto slash = out.rfind('/');
  const std::string stem = dot != std::string::npos && (slash == std::string::npos || dot > slash) ? out.substr(0, dot) : out;
  return stem + ".tables.json";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted Zhu algebras and bimodules of the rank-one free boson"};
  app.require_subcommand(1);
  Args args;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"build-zhu", "Truncated twisted Zhu algebras A_g2(V) and A_g1g2(V)"},
      {"build-bimodule", "Truncated bimodule of M1 with its relation spans"},
      {"fusion-bound", "Hom dimension over caps 2, 4, 6, 8"},
      {"verify", "Every identity check for the scenario"},
      {"run", "The tasks listed in the scenario"}};
  for (const auto& [name, help] : commands) add_flags(app.add_subcommand(name, help), args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  twzhu::Scenario s;
  try {
    s = twzhu::parse_scenario_file(args.scenario);
    if (cmd != "run") s.tasks = {cmd};
    if (args.weight_cap >= 0) s.weight_cap = args.weight_cap;
    if (args.seed >= 0) s.seed = static_cast<std::uint64_t>(args.seed);
    twzhu::validate(s);
  } catch (const twzhu::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  }

  twzhu::RunResult r;
  try {
    r = twzhu::run(s, {args.dump_tables, !args.no_timing});
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const std::string text = r.report.dump(2) + "\n";
  if (args.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(args.out);
    if (!f) {
      std::cerr << "cannot write " << args.out << "\n";
      return 2;
    }
    f << text;
  }
  if (args.dump_tables) {
    std::ofstream f(tables_path(args.out));
    f << r.tables.dump(2) << "\n";
  }
  return r.passed ? 0 : 1;
}
