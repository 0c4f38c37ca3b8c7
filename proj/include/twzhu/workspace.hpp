#pragma once

#include <map>
#include <memory>
#include <tuple>

#include "twzhu/bimodule.hpp"
#include "twzhu/fock.hpp"
#include "twzhu/zhu.hpp"

namespace twzhu {

/// Owns the backend and caches every truncated quotient by (kind, twist, cap).
class Workspace {
 public:
  explicit Workspace(int T = 2) : H_(T) {}

  Heisenberg& H() { return H_; }
  int T() const { return H_.T(); }

  ZhuAlgebra& zhu(Aut g, int N);
  /// M^1 / O'(M^1) at cap N.
  const Quotient& prime(Aut g1, Aut g2, int N);
  Bimodule& bimodule(Aut g1, Aut g2, int N);

 private:
  Heisenberg H_;
  std::map<std::tuple<int, int>, std::unique_ptr<ZhuAlgebra>> zhu_;
  std::map<std::tuple<int, int, int>, std::unique_ptr<Quotient>> prime_;
  std::map<std::tuple<int, int, int>, std::unique_ptr<Bimodule>> bim_;
};

}  // namespace twzhu
