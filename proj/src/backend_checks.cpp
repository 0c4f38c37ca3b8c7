#include "twzhu/backend_checks.hpp"

#include <random>

namespace twzhu {

CheckResult check_commutator(Heisenberg& H, FockModule& M, int instances, int max_weight, std::uint64_t seed) {
  CheckResult res("commutator", max_weight);
  const long T = H.T();
  std::mt19937_64 rng(seed);
  const std::vector<StateId> vs = H.V().states_upto(max_weight * T);
  const std::vector<StateId> ws = M.states_upto(max_weight * T);
  auto pick = [&](const std::vector<StateId>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  auto offset = [&](StateId s) {
    return M.kind() == ModuleKind::Twisted ? static_cast<long>(H.V().length(s) % 2) * (T / 2) : 0L;
  };
  std::uniform_int_distribution<long> shift(-3, 2);
  for (int it = 0; it < instances; ++it) {
    const StateId u = pick(vs), v = pick(vs), w = pick(ws);
    const long m = (H.wt_units(u) / T - 1 + shift(rng)) * T + offset(u);
    const long n = (H.wt_units(v) / T - 1 + shift(rng)) * T + offset(v);
    const Vec W = Vec::basis(w);
    const Vec lhs = H.mode(u, m, H.mode(v, n, W, M), M) - H.mode(v, n, H.mode(u, m, W, M), M);
    VecBuilder rhs;
    const long i_max = (H.wt_units(u) + H.wt_units(v)) / T - 1;
    for (long i = 0; i <= i_max; ++i) {
      const Vec x = H.mode(u, i * T, Vec::basis(v), H.V());
      if (x.empty()) continue;
      rhs.add(H.mode(x, m + n - i * T, W, M), CycScalar(binomial(frac(m, T), static_cast<unsigned>(i))));
    }
    res.record(lhs == rhs.finish(), "commutator differs for u=" + H.V().state_str(u) + " v=" +
                                        H.V().state_str(v) + " w=" + M.state_str(w));
  }
  return res;
}

Rat twisted_bottom_weight(int r, int T) { return frac(static_cast<long>(r) * (T - r), 4L * T * T); }

CheckResult check_bottom_weight(Heisenberg& H, int N) {
  CheckResult res("bottom_weight", N);
  FockModule& M = H.twisted();
  const Rat h = H.compute_bottom_weight(M);
  res.record(h == twisted_bottom_weight(H.T() / 2, H.T()),
             "o(omega) on the twisted bottom is " + rat_str(h) + ", expected " +
                 rat_str(twisted_bottom_weight(H.T() / 2, H.T())));
  res.record(h == M.descriptor().h, "descriptor weight differs from the recursion");
  const Vec om = H.omega();
  for (FockModule* X : {&H.V(), &M}) {
    for (StateId s : X->states_upto(static_cast<long>(N) * H.T())) {
      const Vec l0 = H.mode(om, H.T(), Vec::basis(s), *X);
      const Vec expect = Vec::basis(s, CycScalar(Rat(X->deg(s) + X->descriptor().h)));
      res.record(l0 == expect, "L(0) grading fails on " + X->state_str(s));
    }
  }
  return res;
}

}  // namespace twzhu
