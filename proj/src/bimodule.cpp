#include "twzhu/bimodule.hpp"

#include "twzhu/workspace.hpp"

namespace twzhu {

namespace {

bool fits(const FockModule& M, const Vec& v, int N) { return M.top_units(v) <= static_cast<long>(N) * M.T(); }

std::vector<StateId> states_with(Heisenberg& H, int N, Aut g) {
  std::vector<StateId> out;
  for (StateId s : H.V().states_upto(static_cast<long>(N) * H.T())) {
    if (H.exponent(s, g) == 0) out.push_back(s);
  }
  return out;
}

}  // namespace

std::vector<Vec> build_Oprime(Heisenberg& H, Aut g1, Aut g2, int N) {
  const long T = H.T();
  FockModule& M = H.module(g1);
  const std::vector<StateId> vb = H.V().states_upto(N * T);
  const std::vector<StateId> mb = M.states_upto(N * T);
  std::vector<Vec> out;
  for (StateId u : vb) {
    for (StateId w : mb) {
      if (H.wt_units(u) + M.deg_units(w) > N * T) continue;
      Vec r = circ_bi(H, Vec::basis(u), Vec::basis(w), g1, g2);
      if (!r.empty() && fits(M, r, N)) out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<Vec> build_Odoubleprime(Heisenberg& H, Aut g1, Aut g2, int N, const ZhuAlgebra& A3,
                                    const ZhuAlgebra& A2, OdoubleprimeCounts* counts) {
  const long T = H.T();
  const Aut g3 = compose(g1, g2);
  FockModule& M = H.module(g1);
  const std::vector<StateId> mb = M.states_upto(N * T);
  const std::vector<StateId> left = states_with(H, N, g3);
  const std::vector<StateId> right = states_with(H, N, g2);
  OdoubleprimeCounts c;
  std::vector<Vec> out;
  auto emit = [&](Vec r, long& counter) {
    if (r.empty() || !fits(M, r, N)) return;
    ++counter;
    out.push_back(std::move(r));
  };

  for (StateId us : left) {
    for (StateId vs : left) {
      for (StateId ws : mb) {
        if (H.wt_units(us) + H.wt_units(vs) + M.deg_units(ws) > N * T) continue;
        const Vec u = Vec::basis(us), v = Vec::basis(vs), w = Vec::basis(ws);
        emit(star_left(H, star_g(H, u, v, g3), w, g1, g2) - star_left(H, u, star_left(H, v, w, g1, g2), g1, g2),
             c.left_assoc);
      }
    }
  }
  for (StateId us : right) {
    for (StateId vs : right) {
      for (StateId ws : mb) {
        if (H.wt_units(us) + H.wt_units(vs) + M.deg_units(ws) > N * T) continue;
        const Vec u = Vec::basis(us), v = Vec::basis(vs), w = Vec::basis(ws);
        emit(star_right(H, w, star_g(H, v, u, g2), g1, g2) -
                 star_right(H, star_right(H, w, v, g1, g2), u, g1, g2),
             c.right_assoc);
      }
    }
  }
  for (const Vec& row : A3.quotient().relation_rows()) {
    const long top = H.V().top_units(row);
    for (StateId ws : mb) {
      if (top + M.deg_units(ws) > N * T) continue;
      emit(star_left(H, row, Vec::basis(ws), g1, g2), c.left_ideal);
    }
  }
  for (const Vec& row : A2.quotient().relation_rows()) {
    const long top = H.V().top_units(row);
    for (StateId ws : mb) {
      if (top + M.deg_units(ws) > N * T) continue;
      emit(star_right(H, Vec::basis(ws), row, g1, g2), c.right_ideal);
    }
  }
  if (counts) *counts = c;
  return out;
}

Bimodule::Bimodule(Heisenberg& H, Aut g1, Aut g2, int N, const Quotient& prime, const ZhuAlgebra& A3,
                   const ZhuAlgebra& A2)
    : H_(&H), g1_(g1), g2_(g2), N_(N), prime_(&prime), Q_(H.module(g1), static_cast<long>(N) * H.T()) {
  for (const Vec& r : prime.relation_rows()) Q_.add_relation(r);
  for (const Vec& r : build_Odoubleprime(H, g1, g2, N, A3, A2, &counts_)) {
    ++n_odp_;
    Q_.add_relation(r);
  }
}

Vec Bimodule::act_left(const Vec& u, const Vec& x) const { return reduce(star_left(*H_, u, x, g1_, g2_)); }

Vec Bimodule::act_right(const Vec& x, const Vec& u) const { return reduce(star_right(*H_, x, u, g1_, g2_)); }

CheckResult check_shifted_circ(Workspace& ws, Aut g1, Aut g2, int N) {
  CheckResult res{"shifted_circ", N};
  Heisenberg& H = ws.H();
  FockModule& M = H.module(g1);
  const long T = H.T();
  for (StateId us : H.V().states_upto(N * T)) {
    const ResidueSpec base = circ_bi_spec(H, us, g1, g2);
    for (StateId wsid : M.states_upto(N * T)) {
      if (H.wt_units(us) + M.deg_units(wsid) > N * T) continue;
      for (int m = 0; m <= 3; ++m) {
        for (int n = 0; n <= m; ++n) {
          const ResidueSpec s{base.alpha + n, base.beta_units + m * T, 1};
          const Vec r = residue_product(H, s, us, Vec::basis(wsid), M);
          if (!fits(M, r, N)) continue;
          certify_zero([&](int cap) { return ws.prime(g1, g2, cap).reduce(r); }, N, res, [&] {
            return "u=" + H.V().state_str(us) + " w1=" + M.state_str(wsid) + " (n,m)=(" + std::to_string(n) + "," +
                   std::to_string(m) + ")";
          }, &ws.H().module(g1));
        }
      }
    }
  }
  return res;
}

CheckResult check_left_stability(Workspace& ws, Aut g1, Aut g2, int N) {
  CheckResult res{"left_stability", N};
  Heisenberg& H = ws.H();
  FockModule& M = H.module(g1);
  for (const Vec& x : ws.prime(g1, g2, N).relation_rows()) {
    const long top = M.top_units(x);
    for (StateId us : states_with(H, N, compose(g1, g2))) {
      if (H.wt_units(us) + top > static_cast<long>(N) * H.T()) continue;
      const Vec r = star_left(H, Vec::basis(us), x, g1, g2);
      certify_zero([&](int cap) { return ws.prime(g1, g2, cap).reduce(r); }, N, res,
                   [&] { return "u=" + H.V().state_str(us) + " x=" + M.vec_str(x); }, &ws.H().module(g1));
    }
  }
  return res;
}

CheckResult check_right_stability(Workspace& ws, Aut g1, Aut g2, int N) {
  CheckResult res{"right_stability", N};
  Heisenberg& H = ws.H();
  FockModule& M = H.module(g1);
  for (const Vec& x : ws.prime(g1, g2, N).relation_rows()) {
    const long top = M.top_units(x);
    for (StateId us : states_with(H, N, g2)) {
      if (H.wt_units(us) + top > static_cast<long>(N) * H.T()) continue;
      const Vec r = star_right(H, x, Vec::basis(us), g1, g2);
      certify_zero([&](int cap) { return ws.prime(g1, g2, cap).reduce(r); }, N, res,
                   [&] { return "x=" + M.vec_str(x) + " u=" + H.V().state_str(us); }, &ws.H().module(g1));
    }
  }
  return res;
}

CheckResult check_mixed_associativity(Workspace& ws, Aut g1, Aut g2, int N) {
  CheckResult res{"mixed_associativity", N};
  Heisenberg& H = ws.H();
  FockModule& M = H.module(g1);
  const long T = H.T();
  for (StateId us : states_with(H, N, compose(g1, g2))) {
    for (StateId vs : states_with(H, N, g2)) {
      for (StateId wsid : M.states_upto(N * T)) {
        if (H.wt_units(us) + H.wt_units(vs) + M.deg_units(wsid) > N * T) continue;
        const Vec u = Vec::basis(us), v = Vec::basis(vs), w = Vec::basis(wsid);
        const Vec r = star_right(H, star_left(H, u, w, g1, g2), v, g1, g2) -
                      star_left(H, u, star_right(H, w, v, g1, g2), g1, g2);
        certify_zero([&](int cap) { return ws.prime(g1, g2, cap).reduce(r); }, N, res, [&] {
          return "u=" + H.V().state_str(us) + " v=" + H.V().state_str(vs) + " w1=" + M.state_str(wsid);
        }, &ws.H().module(g1));
      }
    }
  }
  return res;
}

CheckResult check_relation_ideal(Workspace& ws, Aut g1, Aut g2, int N) {
  CheckResult res{"relation_ideal", N};
  Heisenberg& H = ws.H();
  FockModule& M = H.module(g1);
  const long cap_units = static_cast<long>(N) * H.T();
  const std::vector<Vec> rows = ws.bimodule(g1, g2, N).full().relation_rows();
  const std::vector<StateId> left = states_with(H, N, compose(g1, g2));
  const std::vector<StateId> right = states_with(H, N, g2);
  for (const Vec& x : rows) {
    const long top = M.top_units(x);
    for (StateId as : left) {
      if (H.wt_units(as) + top > cap_units) continue;
      const Vec r = star_left(H, Vec::basis(as), x, g1, g2);
      certify_zero([&](int cap) { return ws.bimodule(g1, g2, cap).reduce(r); }, N, res,
                   [&] { return "left a=" + H.V().state_str(as) + " x=" + M.vec_str(x); }, &ws.H().module(g1));
    }
    for (StateId as : right) {
      if (H.wt_units(as) + top > cap_units) continue;
      const Vec r = star_right(H, x, Vec::basis(as), g1, g2);
      certify_zero([&](int cap) { return ws.bimodule(g1, g2, cap).reduce(r); }, N, res,
                   [&] { return "right a=" + H.V().state_str(as) + " x=" + M.vec_str(x); }, &ws.H().module(g1));
    }
  }
  return res;
}

CheckResult check_bimodule_axioms(Workspace& ws, Aut g1, Aut g2, int N) {
  CheckResult res{"bimodule_axioms", N};
  Heisenberg& H = ws.H();
  FockModule& V = H.V();
  FockModule& M = H.module(g1);
  const Aut g3 = compose(g1, g2);
  const long cap_units = static_cast<long>(N) * H.T();
  const std::vector<StateId> a3 = ws.zhu(g3, N).reps();
  const std::vector<StateId> a2 = ws.zhu(g2, N).reps();
  const std::vector<StateId> mb = ws.bimodule(g1, g2, N).reps();
  const Vec one = Vec::basis(V.bottom());

  for (StateId ms : mb) {
    const Vec m = Vec::basis(ms);
    certify_zero([&](int cap) { return ws.bimodule(g1, g2, cap).act_left(one, m) - ws.bimodule(g1, g2, cap).reduce(m); },
                 N, res, [&] { return "left unit on " + M.state_str(ms); }, &ws.H().module(g1));
    certify_zero(
        [&](int cap) { return ws.bimodule(g1, g2, cap).act_right(m, one) - ws.bimodule(g1, g2, cap).reduce(m); }, N,
        res, [&] { return "right unit on " + M.state_str(ms); }, &ws.H().module(g1));
  }
  for (StateId ms : mb) {
    const Vec m = Vec::basis(ms);
    for (StateId xs : a3) {
      for (StateId ys : a3) {
        if (V.deg_units(xs) + V.deg_units(ys) + M.deg_units(ms) > cap_units) continue;
        const Vec x = Vec::basis(xs), y = Vec::basis(ys);
        certify_zero(
            [&](int cap) {
              Bimodule& B = ws.bimodule(g1, g2, cap);
              const ZhuAlgebra& A = ws.zhu(g3, cap);
              return B.act_left(A.product(x, y), m) - B.act_left(x, B.act_left(y, m));
            },
            N, res, [&] { return "left assoc " + V.state_str(xs) + V.state_str(ys) + M.state_str(ms); }, &ws.H().module(g1));
      }
    }
    for (StateId xs : a2) {
      for (StateId ys : a2) {
        if (V.deg_units(xs) + V.deg_units(ys) + M.deg_units(ms) > cap_units) continue;
        const Vec x = Vec::basis(xs), y = Vec::basis(ys);
        certify_zero(
            [&](int cap) {
              Bimodule& B = ws.bimodule(g1, g2, cap);
              const ZhuAlgebra& A = ws.zhu(g2, cap);
              return B.act_right(m, A.product(x, y)) - B.act_right(B.act_right(m, x), y);
            },
            N, res, [&] { return "right assoc " + M.state_str(ms) + V.state_str(xs) + V.state_str(ys); }, &ws.H().module(g1));
      }
    }
    for (StateId xs : a3) {
      for (StateId ys : a2) {
        if (V.deg_units(xs) + V.deg_units(ys) + M.deg_units(ms) > cap_units) continue;
        const Vec x = Vec::basis(xs), y = Vec::basis(ys);
        certify_zero(
            [&](int cap) {
              Bimodule& B = ws.bimodule(g1, g2, cap);
              return B.act_right(B.act_left(x, m), y) - B.act_left(x, B.act_right(m, y));
            },
            N, res, [&] { return "compatibility " + V.state_str(xs) + M.state_str(ms) + V.state_str(ys); }, &ws.H().module(g1));
      }
    }
  }
  return res;
}

CheckResult check_generators_vanish(Workspace& ws, Aut g1, Aut g2, int N) {
  CheckResult res{"generators_vanish", N};
  Heisenberg& H = ws.H();
  Bimodule& B = ws.bimodule(g1, g2, N);
  FockModule& M = B.module();
  for (const Vec& r : build_Oprime(H, g1, g2, N)) {
    res.record(B.reduce(r).empty() && B.prime().reduce(r).empty(), "O' generator survives: " + M.vec_str(r));
  }
  for (const Vec& r : build_Odoubleprime(H, g1, g2, N, ws.zhu(compose(g1, g2), N), ws.zhu(g2, N))) {
    res.record(B.reduce(r).empty(), "O'' generator survives: " + M.vec_str(r));
  }
  return res;
}

namespace {

// Integer binomial C(n, i) for any integer n, via C(n, i) = (-1)^i C(i-n-1, i) when n < 0.
Rat int_binom(long n, unsigned i) {
  if (n >= 0) return binomial_int(n, i);
  Rat r = binomial_int(static_cast<long>(i) - n - 1, i);
  return i % 2 ? Rat(-r) : r;
}

// sum_i C(a, i) u_{i-b} w on V, integer modes only.
Vec untwisted_form(Heisenberg& H, StateId u, long a, long b, const Vec& w) {
  const long T = H.T();
  const long limit = H.V().top_units(w) / T + H.wt_units(u) / T - 1;
  VecBuilder acc;
  for (long i = 0; i - b <= limit; ++i) acc.add(H.mode(u, (i - b) * T, w, H.V()), CycScalar(int_binom(a, i)));
  return acc.finish();
}

std::string first_diff(FockModule& M, const Vec& a, const Vec& b) {
  const Vec d = a - b;
  if (d.empty()) return {};
  const auto& t = d.terms().front();
  return "state " + M.state_str(t.first) + ": " + a.coeff(t.first).str() + " vs " + b.coeff(t.first).str();
}

}  // namespace

CheckResult check_untwisted_specialization(Workspace& ws, int N) {
  CheckResult res{"untwisted_specialization", N};
  Heisenberg& H = ws.H();
  FockModule& V = H.V();
  const long T = H.T();
  const std::vector<StateId> basis = V.states_upto(N * T);
  for (StateId us : basis) {
    const long wu = H.wt_units(us) / T;
    for (StateId wsid : basis) {
      if (V.deg_units(us) + V.deg_units(wsid) > N * T) continue;
      const Vec u = Vec::basis(us), w = Vec::basis(wsid);
      const std::string tag = " u=" + V.state_str(us) + " w=" + V.state_str(wsid) + " ";
      const Vec c1 = circ_bi(H, u, w, Aut::Id, Aut::Id), c2 = untwisted_form(H, us, wu, 2, w);
      res.record(c1 == c2, "circ" + tag + first_diff(V, c1, c2));
      const Vec l1 = star_left(H, u, w, Aut::Id, Aut::Id), l2 = untwisted_form(H, us, wu, 1, w);
      res.record(l1 == l2, "left" + tag + first_diff(V, l1, l2));
      const Vec r1 = star_right(H, w, u, Aut::Id, Aut::Id), r2 = untwisted_form(H, us, wu - 1, 1, w);
      res.record(r1 == r2, "right" + tag + first_diff(V, r1, r2));
    }
  }
  return res;
}

CheckResult check_algebra_specialization(Workspace& ws, Aut g2, int N) {
  CheckResult res{"algebra_specialization", N};
  Heisenberg& H = ws.H();
  FockModule& V = H.V();
  const long T = H.T();
  const std::vector<StateId> basis = V.states_upto(N * T);
  for (StateId us : basis) {
    for (StateId wsid : basis) {
      if (V.deg_units(us) + V.deg_units(wsid) > N * T) continue;
      const Vec u = Vec::basis(us), w = Vec::basis(wsid);
      const std::string tag = " u=" + V.state_str(us) + " w=" + V.state_str(wsid) + " ";
      const Vec c1 = circ_bi(H, u, w, Aut::Id, g2), c2 = circ_g(H, u, w, g2);
      res.record(c1 == c2, "circ" + tag + first_diff(V, c1, c2));
      const Vec l1 = star_left(H, u, w, Aut::Id, g2), l2 = star_g(H, u, w, g2);
      res.record(l1 == l2, "left" + tag + first_diff(V, l1, l2));
      const Vec r = star_right(H, w, u, Aut::Id, g2) - star_g(H, w, u, g2);
      certify_zero([&](int cap) { return ws.zhu(g2, cap).reduce(r); }, N, res, [&] { return "right" + tag; }, &ws.H().V());
    }
  }
  const auto lb = ws.bimodule(Aut::Id, g2, N).full().layer_dims();
  const auto la = ws.zhu(g2, N).quotient().layer_dims();
  res.record(lb == la, "bimodule layers differ from A_g2(V) layers");
  return res;
}

}  // namespace twzhu
