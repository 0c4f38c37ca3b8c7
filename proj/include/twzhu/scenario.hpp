#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twzhu/fock.hpp"

namespace twzhu {

/// Invalid or inconsistent scenario input.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Module labels of the free-boson backend: "vacuum" and "theta-twisted".
struct ModuleLabel {
  std::string name;
  Aut twist = Aut::Id;
};
ModuleLabel parse_module_label(const std::string& s);

struct Scenario {
  int T = 2;
  std::string backend = "heisenberg";
  Aut g1 = Aut::Id;
  Aut g2 = Aut::Id;
  std::optional<ModuleLabel> M1, M2, M3;
  int weight_cap = 6;
  std::vector<std::string> tasks;
  std::uint64_t seed = 0;

  bool has_modules() const { return M1 && M2 && M3; }
};

extern const std::vector<std::string> kTaskNames;

/// Flat "key = value" format; '#' starts a comment. tasks is comma-separated.
Scenario parse_scenario(std::istream& in);
Scenario parse_scenario_file(const std::string& path);
/// Throws ConfigError on an unknown backend, task or twist mismatch.
void validate(const Scenario& s);

}  // namespace twzhu
