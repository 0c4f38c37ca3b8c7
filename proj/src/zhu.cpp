#include "twzhu/zhu.hpp"

#include <stdexcept>

#include "twzhu/workspace.hpp"

namespace twzhu {

std::vector<Vec> build_O_span(Heisenberg& H, Aut g, int N) {
  const long T = H.T();
  FockModule& V = H.V();
  const std::vector<StateId> basis = V.states_upto(N * T);
  std::vector<Vec> out;
  for (StateId u : basis) {
    const int d = delta_r(H.exponent(u, g), H.T());
    for (StateId v : basis) {
      if (H.wt_units(u) + H.wt_units(v) + d * T > N * T) continue;
      Vec r = circ_g(H, Vec::basis(u), Vec::basis(v), g);
      if (!r.empty() && V.top_units(r) <= N * T) out.push_back(std::move(r));
    }
  }
  for (StateId u : basis) {
    if (H.wt_units(u) > (N - 1) * T) continue;
    Vec r = l_minus1_plus_l0(H, Vec::basis(u));
    if (!r.empty()) out.push_back(std::move(r));
  }
  return out;
}

ZhuAlgebra::ZhuAlgebra(Heisenberg& H, Aut g, int N) : H_(&H), g_(g), N_(N), Q_(H.V(), static_cast<long>(N) * H.T()) {
  if (N < 0) throw std::invalid_argument("weight cap must be nonnegative");
  for (const Vec& r : build_O_span(H, g, N)) {
    ++generators_;
    Q_.add_relation(r);
  }
}

Vec ZhuAlgebra::product(const Vec& x, const Vec& y) const { return reduce(star_g(*H_, x, y, g_)); }

Vec bottom_action(Heisenberg& H, const Vec& u, const Vec& w2, FockModule& M) {
  for (const auto& [s, c] : w2) {
    if (M.deg_units(s) != 0) throw std::invalid_argument("bottom_action: argument is not in the bottom level");
  }
  VecBuilder acc;
  for (const auto& [s, c] : u) acc.add(H.mode(s, H.wt_units(s) - H.T(), w2, M), c);
  return acc.finish();
}

CheckResult check_odd_states_vanish(Workspace& ws, Aut g, int N) {
  CheckResult res{"odd_states_vanish", N};
  Heisenberg& H = ws.H();
  for (StateId s : H.V().states_upto(static_cast<long>(N - 1) * H.T())) {
    if (H.exponent(s, g) == 0) continue;
    const Vec x = Vec::basis(s);
    certify_zero([&](int cap) { return ws.zhu(g, cap).reduce(x); }, N, res,
                 [&] { return "state " + H.V().state_str(s) + " not in O"; }, &ws.H().V());
  }
  return res;
}

CheckResult check_zhu_axioms(Workspace& ws, Aut g, int N) {
  CheckResult res{"zhu_axioms", N};
  Heisenberg& H = ws.H();
  FockModule& V = H.V();
  const long T = H.T();
  const ZhuAlgebra& A = ws.zhu(g, N);
  const std::vector<StateId> reps = A.reps();
  const Vec one = Vec::basis(V.bottom());
  const Vec om = H.omega();

  for (StateId ys : reps) {
    const Vec y = Vec::basis(ys);
    certify_zero([&](int cap) { return ws.zhu(g, cap).product(one, y) - ws.zhu(g, cap).reduce(y); }, N, res,
                 [&] { return "1 * " + V.state_str(ys) + " != " + V.state_str(ys); }, &ws.H().V());
    certify_zero([&](int cap) { return ws.zhu(g, cap).product(y, one) - ws.zhu(g, cap).reduce(y); }, N, res,
                 [&] { return V.state_str(ys) + " * 1 != " + V.state_str(ys); }, &ws.H().V());
    if (V.deg_units(ys) + 2 * T <= N * T) {
      certify_zero(
          [&](int cap) { return ws.zhu(g, cap).product(om, y) - ws.zhu(g, cap).product(y, om); }, N, res,
          [&] { return "omega does not commute with " + V.state_str(ys); }, &ws.H().V());
    }
  }
  for (StateId xs : reps) {
    for (StateId ys : reps) {
      for (StateId zs : reps) {
        if (V.deg_units(xs) + V.deg_units(ys) + V.deg_units(zs) > N * T) continue;
        const Vec x = Vec::basis(xs), y = Vec::basis(ys), z = Vec::basis(zs);
        certify_zero(
            [&](int cap) {
              const ZhuAlgebra& B = ws.zhu(g, cap);
              return B.product(B.product(x, y), z) - B.product(x, B.product(y, z));
            },
            N, res,
            [&] { return "associativity fails on " + V.state_str(xs) + V.state_str(ys) + V.state_str(zs); }, &ws.H().V());
      }
    }
  }
  return res;
}

CheckResult check_bottom_representation(Workspace& ws, Aut g, int N) {
  CheckResult res{"bottom_representation", N};
  Heisenberg& H = ws.H();
  FockModule& V = H.V();
  FockModule& M = H.module(g);
  const long T = H.T();
  const Vec w2 = Vec::basis(M.bottom());
  const std::vector<StateId> basis = V.states_upto(N * T);
  for (StateId us : basis) {
    for (StateId vs : basis) {
      if (V.deg_units(us) + V.deg_units(vs) > N * T) continue;
      const Vec u = Vec::basis(us), v = Vec::basis(vs);
      const Vec lhs = bottom_action(H, u, bottom_action(H, v, w2, M), M);
      const Vec rhs = bottom_action(H, star_g(H, u, v, g), w2, M);
      res.record(lhs == rhs, "o(u)o(v) != o(u*v) for u=" + V.state_str(us) + " v=" + V.state_str(vs));
    }
  }
  for (const Vec& row : ws.zhu(g, N).quotient().relation_rows()) {
    const Vec r = bottom_action(H, row, w2, M);
    res.record(r.empty(), "o does not vanish on relation " + V.vec_str(row));
  }
  return res;
}

Stabilization zhu_stabilization(Workspace& ws, Aut g, int N) {
  Stabilization st;
  const long T = ws.T();
  auto cumulative = [&](int cap) {
    std::vector<int> out(std::max(N - 1, 0), 0);
    for (const auto& [d, n] : ws.zhu(g, cap).quotient().layer_dims()) {
      for (int k = 0; k <= N - 2; ++k) {
        if (d <= k * T) out[k] += n;
      }
    }
    return out;
  };
  st.at_n = cumulative(N);
  st.at_n1 = cumulative(N + 1);
  st.stable = st.at_n == st.at_n1;
  return st;
}

}  // namespace twzhu
