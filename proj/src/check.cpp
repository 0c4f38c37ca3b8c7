#include "twzhu/check.hpp"

namespace twzhu {

void CheckResult::record(bool ok, const std::string& what) {
  ++instances;
  if (ok) return;
  if (failures == 0) first_failure = what;
  ++failures;
}

void CheckResult::merge(const CheckResult& o) {
  instances += o.instances;
  if (failures == 0 && o.failures > 0) {
    first_failure = o.first_failure;
    first_residual = o.first_residual;
  }
  failures += o.failures;
  retried += o.retried;
}

bool certify_zero(const std::function<Vec(int)>& residual, int N, CheckResult& res,
                  const std::function<std::string()>& describe, const FockModule* M) {
  if (residual(N).empty()) {
    res.record(true);
    return true;
  }
  const Vec r = residual(N + 2);
  if (r.empty()) {
    ++res.retried;
    res.record(true);
    return true;
  }
  if (res.failures == 0 && M != nullptr) res.first_residual = M->vec_str(r);
  res.record(false, describe());
  return false;
}

}  // namespace twzhu
