#include <sstream>

#include "support.hpp"
#include "twzhu/runner.hpp"
#include "twzhu/scenario.hpp"

using namespace twzhu;

namespace {

Scenario parse(const std::string& text) {
  std::istringstream in(text);
  return parse_scenario(in);
}

const char* kBase = "T = 2\nbackend = heisenberg\ng1 = id\ng2 = theta\n";
const char* kModules = "M1 = vacuum\nM2 = theta-twisted\nM3 = theta-twisted\n";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("minimal scenario parses") {
    const Scenario s = parse(std::string(kBase) + kModules + "tasks = fusion-bound\n# comment\n");
    CHECK(s.g2 == Aut::Theta);
    CHECK(s.has_modules());
    CHECK(s.tasks == std::vector<std::string>{"fusion-bound"});
    CHECK_NOTHROW(validate(s));
  }

  TEST_CASE("invalid scenarios are rejected") {
    CHECK_THROWS_AS(validate(parse(std::string(kBase) + "M1 = vacuum\nM2 = vacuum\nM3 = theta-twisted\ntasks = verify\n")),
                    ConfigError);
    CHECK_THROWS_AS(validate(parse(std::string(kBase) + "tasks = verify\n")), ConfigError);
    CHECK_NOTHROW(validate(parse(std::string(kBase) + "tasks = build-zhu\n")));
    CHECK_THROWS_AS(validate(parse("backend = lattice\ntasks = build-zhu\n")), ConfigError);
    CHECK_THROWS_AS(parse("weight_cap = six\n"), ConfigError);
    CHECK_THROWS_AS(parse("weight_cap = 4\nweight_cap = 5\n"), ConfigError);
    CHECK_THROWS_AS(parse("colour = red\n"), ConfigError);
    CHECK_THROWS_AS(parse_module_label("twisted-by-sigma"), ConfigError);
  }

  TEST_CASE("empty task list") {
    const RunResult r = run(parse(std::string(kBase) + kModules), {false, false});
    CHECK(r.passed);
    CHECK(r.report.at("schema") == kReportSchema);
    CHECK(!r.report.contains("timing"));
  }

  TEST_CASE("reports are deterministic without timing") {
    const Scenario s = parse(std::string(kBase) + kModules + "weight_cap = 4\nseed = 7\ntasks = build-zhu, build-bimodule\n");
    const RunResult a = run(s, {true, false}), b = run(s, {true, false});
    CHECK(a.passed);
    CHECK(a.report.dump() == b.report.dump());
    CHECK(a.tables.dump() == b.tables.dump());
  }

  TEST_CASE("fusion report") {
    const RunResult r = run(parse(std::string(kBase) + kModules + "tasks = fusion-bound\n"), {false, false});
    CHECK(r.passed);
    const std::string text = r.report.dump();
    CHECK(text.find("\"hom_dims\":[1,1,1,1]") != std::string::npos);
    CHECK(text.find("\"stable\":true") != std::string::npos);
  }

  TEST_CASE("untwisted verify passes") {
    const Scenario s =
        parse("g1 = id\ng2 = id\nM1 = vacuum\nM2 = vacuum\nM3 = vacuum\nweight_cap = 4\nseed = 3\ntasks = verify\n");
    CHECK(run(s, {false, false}).passed);
  }
}
