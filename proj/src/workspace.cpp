#include "twzhu/workspace.hpp"

namespace twzhu {

ZhuAlgebra& Workspace::zhu(Aut g, int N) {
  auto& slot = zhu_[{static_cast<int>(g), N}];
  if (!slot) slot = std::make_unique<ZhuAlgebra>(H_, g, N);
  return *slot;
}

const Quotient& Workspace::prime(Aut g1, Aut g2, int N) {
  auto& slot = prime_[{static_cast<int>(g1), static_cast<int>(g2), N}];
  if (!slot) {
    auto q = std::make_unique<Quotient>(H_.module(g1), static_cast<long>(N) * H_.T());
    for (const Vec& r : build_Oprime(H_, g1, g2, N)) q->add_relation(r);
    slot = std::move(q);
  }
  return *slot;
}

Bimodule& Workspace::bimodule(Aut g1, Aut g2, int N) {
  auto& slot = bim_[{static_cast<int>(g1), static_cast<int>(g2), N}];
  if (!slot) {
    const Quotient& p = prime(g1, g2, N);
    const ZhuAlgebra& a3 = zhu(compose(g1, g2), N);
    const ZhuAlgebra& a2 = zhu(g2, N);
    slot = std::make_unique<Bimodule>(H_, g1, g2, N, p, a3, a2);
  }
  return *slot;
}

}  // namespace twzhu
