#include "twzhu/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace twzhu {

const std::vector<std::string> kTaskNames = {"build-zhu", "build-bimodule", "verify", "fusion-bound"};

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const long x = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError("malformed integer for " + key + ": '" + v + "'");
  }
}

Aut parse_twist(const std::string& key, const std::string& v) {
  try {
    return parse_aut(v);
  } catch (const std::exception&) {
    throw ConfigError("unknown automorphism for " + key + ": '" + v + "'");
  }
}

}  // namespace

ModuleLabel parse_module_label(const std::string& s) {
  if (s == "vacuum" || s == "V") return {"vacuum", Aut::Id};
  if (s == "theta-twisted") return {"theta-twisted", Aut::Theta};
  throw ConfigError("unknown module label '" + s + "'");
}

Scenario parse_scenario(std::istream& in) {
  Scenario s;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) throw ConfigError("duplicate key " + key);
    if (key == "T") {
      const long t = parse_int(key, val);
      if (t < 1) throw ConfigError("T must be positive");
      s.T = static_cast<int>(t);
    } else if (key == "backend") {
      s.backend = val;
    } else if (key == "g1") {
      s.g1 = parse_twist(key, val);
    } else if (key == "g2") {
      s.g2 = parse_twist(key, val);
    } else if (key == "M1") {
      s.M1 = parse_module_label(val);
    } else if (key == "M2") {
      s.M2 = parse_module_label(val);
    } else if (key == "M3") {
      s.M3 = parse_module_label(val);
    } else if (key == "weight_cap") {
      const long n = parse_int(key, val);
      if (n < 0 || n > 16) throw ConfigError("weight_cap must lie in [0, 16]");
      s.weight_cap = static_cast<int>(n);
    } else if (key == "tasks") {
      std::stringstream ss(val);
      std::string t;
      while (std::getline(ss, t, ',')) {
        t = trim(t);
        if (!t.empty()) s.tasks.push_back(t);
      }
    } else if (key == "seed") {
      const long v = parse_int(key, val);
      if (v < 0) throw ConfigError("seed must be nonnegative");
      s.seed = static_cast<std::uint64_t>(v);
    } else {
      throw ConfigError("unknown key '" + key + "'");
    }
  }
  validate(s);
  return s;
}

Scenario parse_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read scenario file " + path);
  return parse_scenario(in);
}

void validate(const Scenario& s) {
  if (s.backend != "heisenberg") throw ConfigError("unknown backend '" + s.backend + "'");
  if (s.T != 2) throw ConfigError("backend heisenberg ships theta of order 2 only (T = 2)");
  bool needs_modules = false;
  for (const std::string& t : s.tasks) {
    if (std::find(kTaskNames.begin(), kTaskNames.end(), t) == kTaskNames.end()) {
      throw ConfigError("unknown task '" + t + "'");
    }
    needs_modules = needs_modules || t != "build-zhu";
  }
  if (needs_modules && !s.has_modules()) throw ConfigError("tasks require M1, M2 and M3");
  auto check = [](const std::optional<ModuleLabel>& m, Aut g, const std::string& which) {
    if (m && m->twist != g) {
      throw ConfigError("twist mismatch: " + which + " = " + m->name + " is not " + aut_name(g) + "-twisted");
    }
  };
  check(s.M1, s.g1, "M1");
  check(s.M2, s.g2, "M2");
  check(s.M3, compose(s.g1, s.g2), "M3");
}

}  // namespace twzhu
