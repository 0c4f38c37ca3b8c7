#pragma once

#include <json.hpp>

#include "twzhu/check.hpp"
#include "twzhu/fock.hpp"
#include "twzhu/scenario.hpp"

namespace twzhu {

inline constexpr const char* kReportSchema = "twzhu-report/1";

struct RunOptions {
  bool dump_tables = false;
  bool timing = true;
};

struct RunResult {
  nlohmann::json report;
  /// Product and action tables; filled only with dump_tables.
  nlohmann::json tables;
  bool passed = true;
};

/// Executes the scenario tasks in dependency order:
/// build-zhu, build-bimodule, verify, fusion-bound.
RunResult run(const Scenario& s, const RunOptions& opts = {});

/// [[num, den], ...] over the power basis of Q(zeta_order).
nlohmann::json scalar_json(const CycScalar& c, int order);
/// [{"state": ..., "coeff": ...}, ...] in basis order.
nlohmann::json vec_json(const Vec& v, const FockModule& M, int order);
nlohmann::json check_json(const CheckResult& r);
nlohmann::json scenario_json(const Scenario& s);

}  // namespace twzhu
