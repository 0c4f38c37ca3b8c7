#pragma once

#include <functional>
#include <string>
#include <utility>

#include "twzhu/fock.hpp"
#include "twzhu/vec.hpp"

namespace twzhu {

/// Outcome of one family of verified identities at a given cap.
struct CheckResult {
  explicit CheckResult(std::string n = {}, int c = 0) : name(std::move(n)), cap(c) {}

  std::string name;
  int cap = 0;
  long instances = 0;
  long failures = 0;
  /// Instances that only reduced to zero after raising the cap by 2.
  long retried = 0;
  std::string first_failure;
  /// Residual of the first persistent expected-zero failure, if any.
  std::string first_residual;

  bool passed() const { return failures == 0; }
  void record(bool ok, const std::string& what = {});
  void merge(const CheckResult& o);
};

/// Runs an expected-zero test: residual(cap) must return the reduced residual
/// at that cap. A nonzero residual at N is retried once at N + 2.
/// M, when given, is used to print the residual of a persistent failure.
bool certify_zero(const std::function<Vec(int)>& residual, int N, CheckResult& res,
                  const std::function<std::string()>& describe, const FockModule* M = nullptr);

}  // namespace twzhu
