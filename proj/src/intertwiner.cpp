#include "twzhu/intertwiner.hpp"

#include <random>

#include "twzhu/echelon.hpp"
#include "twzhu/products.hpp"
#include "twzhu/workspace.hpp"

namespace twzhu {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

long mod_pos(long a, long b) { return a - b * floor_div(a, b); }

std::vector<StateId> bottom_basis(FockModule& M) { return M.states_upto(0); }

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

long pick_range(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

IntertwinerHandle::IntertwinerHandle(Heisenberg& H, Aut g2, CycScalar scale)
    : H_(&H), g2_(g2), scale_(std::move(scale)) {}

Vec IntertwinerHandle::mode(const Vec& w1, long n_units, const Vec& w2) const {
  Vec r = H_->mode(w1, n_units, w2, m2());
  r *= scale_;
  return r;
}

Vec IntertwinerHandle::zero_mode(const Vec& w1, const Vec& w2) const {
  VecBuilder acc;
  for (const auto& [s, c] : w1) acc.add(H_->mode(s, m1().deg_units(s) - H_->T(), w2, m2()), c);
  Vec r = acc.finish();
  r *= scale_;
  return r;
}

std::string check_associativity(const IntertwinerHandle& I, StateId u, StateId w1, StateId w2) {
  Heisenberg& H = I.backend();
  const long T = H.T();
  FockModule& M1 = I.m1();
  FockModule& M3 = I.m3();
  const Bigrade bg = bigrade(H, u, I.g1(), I.g2());
  const long wt_u = H.wt_units(u);
  const long d1 = M1.deg_units(w1);
  const long k = wt_u / T - 1 + delta_r(bg.j2, T);
  const long gamma = k * T + bg.j2;  // units
  const Rat gamma_r = frac(gamma, T);
  const Vec W1 = Vec::basis(w1);
  const Vec W2 = Vec::basis(w2);
  const long d2 = I.m2().deg_units(w2);

  // e0 is integral; e2 runs over units. Both sides vanish for e0 below e0_lo.
  const long e0_lo = -(wt_u + d1) / T - 1;
  const long e0_hi = e0_lo + 4;
  for (long e0 = e0_lo; e0 <= e0_hi; ++e0) {
    const long e2_lo = gamma - e0 * T - wt_u - d1 - d2 - T;
    const long e2_hi = e2_lo + 6 * T;
    for (long e2 = e2_lo; e2 <= e2_hi; ++e2) {
      VecBuilder lhs;
      // p = l - 1 - e2, n = gamma - 1 - l - e0; w1(p) w2 vanishes for p > d1 + d2 - 1.
      const long l_max_left = floor_div(d1 + d2 + e2, T);
      for (long l = 0; l <= l_max_left; ++l) {
        const long p = l * T - T - e2;
        const long n = gamma - T - l * T - e0 * T;
        const Vec inner = I.mode(W1, p, W2);
        if (inner.empty()) continue;
        const Rat c = binomial(Rat(e0 + l), static_cast<unsigned>(l));
        if (c == 0) continue;
        lhs.add(H.mode(u, n, inner, M3), CycScalar(c));
      }
      VecBuilder rhs;
      // m = l - 1 - e0 (integral), n = gamma - l - 1 - e2.
      const long l_max_right = (wt_u + d1) / T + e0;
      for (long l = 0; l <= l_max_right; ++l) {
        const long m = (l - 1 - e0) * T;
        const long n = gamma - l * T - T - e2;
        const Vec x = H.mode(u, m, W1, M1);
        if (x.empty()) continue;
        const Rat c = binomial(gamma_r, static_cast<unsigned>(l));
        if (c == 0) continue;
        rhs.add(I.mode(x, n, W2), CycScalar(c));
      }
      if (!(lhs.finish() == rhs.finish())) {
        return "coefficient z0^" + std::to_string(e0) + " z2^" + rat_str(frac(e2, T)) + " differs for u=" +
               M1.state_str(u) + " w1=" + M1.state_str(w1);
      }
    }
  }
  return {};
}

CheckResult check_associativity_sweep(const IntertwinerHandle& I, int max_weight) {
  CheckResult res("associativity", max_weight);
  Heisenberg& H = I.backend();
  const long T = H.T();
  const std::vector<StateId> basis = I.m1().states_upto(max_weight * T);
  for (StateId w2 : bottom_basis(I.m2())) {
    for (StateId u : basis) {
      for (StateId w1 : basis) {
        if (H.wt_units(u) + I.m1().deg_units(w1) > max_weight * T) continue;
        const std::string err = check_associativity(I, u, w1, w2);
        res.record(err.empty(), err);
      }
    }
  }
  return res;
}

CheckResult check_zero_mode_products(Workspace& ws, const IntertwinerHandle& I, int N) {
  CheckResult res("zero_mode_products", N);
  Heisenberg& H = ws.H();
  const long T = H.T();
  FockModule& V = H.V();
  const std::vector<StateId> us = V.states_upto(N * T);
  const std::vector<StateId> w1s = I.m1().states_upto(N * T);
  for (StateId w2s : bottom_basis(I.m2())) {
    const Vec w2 = Vec::basis(w2s);
    for (StateId us_ : us) {
      const Vec u = Vec::basis(us_);
      for (StateId w1s_ : w1s) {
        if (H.wt_units(us_) + I.m1().deg_units(w1s_) > N * T) continue;
        const Vec w1 = Vec::basis(w1s_);
        const Vec left = I.zero_mode(star_left(H, u, w1, I.g1(), I.g2()), w2);
        const Vec left_ref = bottom_action(H, u, I.zero_mode(w1, w2), I.m3());
        res.record(left == left_ref, "left identity fails for u=" + V.state_str(us_) + " w1=" + V.state_str(w1s_));
        const Vec right = I.zero_mode(star_right(H, w1, u, I.g1(), I.g2()), w2);
        const Vec right_ref = I.zero_mode(w1, bottom_action(H, u, w2, I.m2()));
        res.record(right == right_ref,
                   "right identity fails for u=" + V.state_str(us_) + " w1=" + V.state_str(w1s_));
      }
    }
  }
  return res;
}

CheckResult check_zero_mode_kernel(Workspace& ws, const IntertwinerHandle& I, int N) {
  CheckResult res("zero_mode_kernel", N);
  const Bimodule& B = ws.bimodule(I.g1(), I.g2(), N);
  for (StateId w2s : bottom_basis(I.m2())) {
    const Vec w2 = Vec::basis(w2s);
    for (const Vec& row : B.full().relation_rows()) {
      res.record(I.zero_mode(row, w2).empty(), "o_I does not vanish on " + I.m1().vec_str(row));
    }
  }
  return res;
}

SIImage s_i_image(Workspace& ws, const IntertwinerHandle& I, int N) {
  SIImage out;
  out.kernel.cap = out.equivariance.cap = N;
  Heisenberg& H = ws.H();
  const Bimodule& B = ws.bimodule(I.g1(), I.g2(), N);
  const ZhuAlgebra& A3 = ws.zhu(compose(I.g1(), I.g2()), N);
  const ZhuAlgebra& A2 = ws.zhu(I.g2(), N);
  const std::vector<StateId> b2 = bottom_basis(I.m2());
  const std::vector<StateId> b3 = bottom_basis(I.m3());
  const int d3 = static_cast<int>(b3.size());

  // Each o_I(x) is flattened to its matrix in the bases of M2(0) and M3(0).
  auto flatten = [&](const Vec& x) {
    SparseRow row;
    for (std::size_t a = 0; a < b2.size(); ++a) {
      const Vec img = I.zero_mode(x, Vec::basis(b2[a]));
      for (int b = 0; b < d3; ++b) {
        CycScalar c = img.coeff(b3[b]);
        if (!c.is_zero()) row.emplace_back(static_cast<int>(a) * d3 + b, std::move(c));
      }
    }
    return row;
  };
  RowEchelon ech(static_cast<int>(b2.size()) * d3);
  const Ambient& amb = B.full().ambient();
  for (int col = 0; col < amb.size(); ++col) ech.insert(flatten(Vec::basis(amb.state(col))));
  out.rank = ech.rank();

  for (const Vec& row : B.full().relation_rows()) {
    out.kernel.record(flatten(row).empty(), "relation " + I.m1().vec_str(row) + " is not in the kernel");
  }

  const long cap = static_cast<long>(N) * H.T();
  FockModule& M1 = I.m1();
  for (StateId xs : B.reps()) {
    const Vec x = Vec::basis(xs);
    for (StateId as : A3.reps()) {
      if (H.wt_units(as) + M1.deg_units(xs) > cap) continue;
      const Vec a = Vec::basis(as);
      const Vec ax = B.act_left(a, x);
      for (StateId w2s : b2) {
        const Vec w2 = Vec::basis(w2s);
        out.equivariance.record(I.zero_mode(ax, w2) == bottom_action(H, a, I.zero_mode(x, w2), I.m3()),
                                "left action not intertwined for a=" + H.V().state_str(as) +
                                    " x=" + M1.state_str(xs));
      }
    }
    for (StateId bs : A2.reps()) {
      if (H.wt_units(bs) + M1.deg_units(xs) > cap) continue;
      const Vec b = Vec::basis(bs);
      const Vec xb = B.act_right(x, b);
      for (StateId w2s : b2) {
        const Vec w2 = Vec::basis(w2s);
        out.equivariance.record(I.zero_mode(xb, w2) == I.zero_mode(x, bottom_action(H, b, w2, I.m2())),
                                "right action not intertwined for b=" + H.V().state_str(bs) +
                                    " x=" + M1.state_str(xs));
      }
    }
  }
  return out;
}

std::vector<StraightenTerm> straighten(const IntertwinerHandle& I, StateId u, long p, StateId w1, long n_units,
                                       StateId w2) {
  Heisenberg& H = I.backend();
  const long T = H.T();
  const Bigrade bg = bigrade(H, u, I.g1(), I.g2());
  const long j12 = mod_pos(bg.j1 + bg.j2, T);
  const long wt_u = H.wt_units(u);
  const long d1 = I.m1().deg_units(w1);
  const long d2 = I.m2().deg_units(w2);

  // Smallest k with z^{k + j2/T} Y(u, z) w2 free of negative powers.
  const long top = wt_u + d2 - T;
  const long t_max = top - mod_pos(top - bg.j2, T);
  const long k = (t_max + T - bg.j2) / T;
  // Smallest k' with z^{k' + n} I°(w1, z) w2 in z^{-1 + 1/T} M3[[z^{1/T}]].
  const long s_max = d1 + d2 - T;
  const long kp = std::max(0L, ceil_div(s_max + 1 - n_units, T));

  const long A = p * T - k * T + j12 - bg.j2;
  const Rat kj = frac(k * T + bg.j2, T);
  const Vec W1 = Vec::basis(w1);
  std::vector<StraightenTerm> out;
  for (long i = 0; i < kp; ++i) {
    const Rat ci = binomial(frac(A, T), static_cast<unsigned>(i));
    if (ci == 0) continue;
    const long base = A - i * T;
    const long j_max = floor_div(wt_u + d1 - T - base, T);
    for (long j = 0; j <= j_max; ++j) {
      const Rat cj = binomial(kj, static_cast<unsigned>(j));
      if (cj == 0) continue;
      Vec x = H.mode(u, base + j * T, W1, I.m1());
      if (x.empty()) continue;
      x *= CycScalar(Rat(ci * cj));
      out.push_back({std::move(x), i * T + n_units + k * T + bg.j2 - j * T});
    }
  }
  return out;
}

CheckResult check_straighten(const IntertwinerHandle& I, int instances, std::uint64_t seed) {
  CheckResult res("straighten", 0);
  Heisenberg& H = I.backend();
  const long T = H.T();
  std::mt19937_64 rng(seed);
  const std::vector<StateId> us = H.V().states_upto(3 * T);
  const std::vector<StateId> w1s = I.m1().states_upto(3 * T);
  const std::vector<StateId> w2s = I.m2().states_upto(2 * T);
  int done = 0;
  long attempts = 0;
  while (done < instances && attempts < 200L * instances) {
    ++attempts;
    const StateId u = pick(rng, us), w1 = pick(rng, w1s), w2 = pick(rng, w2s);
    const Bigrade bg = bigrade(H, u, I.g1(), I.g2());
    const long j12 = mod_pos(bg.j1 + bg.j2, T);
    const long wt_u = H.wt_units(u), d1 = I.m1().deg_units(w1), d2 = I.m2().deg_units(w2);
    const bool weight_zero = done % 2 == 1;
    long p = 0, n = 0;
    if (weight_zero) {
      // wt(u_q w1(n)) = wt u - q - 1 + deg w1 - n - 1 = 0 with q = p + [j1+j2]/T.
      n = pick_range(rng, d1 - T - 3 * T, d1 - T + 3 * T);
      const long q = wt_u + d1 - n - 2 * T;
      if (mod_pos(q - j12, T) != 0) continue;
      p = (q - j12) / T;
    } else {
      p = pick_range(rng, -3, 3);
      n = pick_range(rng, d1 + d2 - T - 4 * T, d1 + d2 - T);
    }
    const Vec inner = I.mode(Vec::basis(w1), n, Vec::basis(w2));
    const Vec direct = H.mode(u, p * T + j12, inner, I.m3());
    if (direct.empty() && attempts % 8 != 0) continue;
    ++done;

    const std::vector<StraightenTerm> terms = straighten(I, u, p, w1, n, w2);
    VecBuilder acc;
    const long weight = wt_u - (p * T + j12) - T + d1 - n - T;
    bool weights_ok = true;
    for (const StraightenTerm& t : terms) {
      acc.add(I.mode(t.x, t.n_units, Vec::basis(w2)));
      for (const auto& [s, c] : t.x) {
        if (I.m1().deg_units(s) - t.n_units - T != weight) weights_ok = false;
      }
    }
    const std::string what = "u=" + H.V().state_str(u) + " p=" + std::to_string(p) + " w1=" +
                             I.m1().state_str(w1) + " n=" + rat_str(frac(n, T)) + " w2=" + I.m2().state_str(w2);
    res.record(acc.finish() == direct, "re-evaluation differs for " + what);
    res.record(weights_ok, (weight == 0 ? "non-zero-weight mode in weight-zero composite " : "weight mismatch ") + what);
  }
  if (done < instances) res.record(false, "could not sample enough instances");
  return res;
}

CheckResult check_handle_jacobi(const IntertwinerHandle& I, int instances, std::uint64_t seed) {
  CheckResult res("handle_jacobi", 0);
  Heisenberg& H = I.backend();
  const long T = H.T();
  std::mt19937_64 rng(seed);
  const std::vector<StateId> us = H.V().states_upto(3 * T);
  const std::vector<StateId> w1s = I.m1().states_upto(3 * T);
  const std::vector<StateId> w2s = I.m2().states_upto(2 * T);
  for (int it = 0; it < instances; ++it) {
    const StateId u = pick(rng, us), w1 = pick(rng, w1s), w2 = pick(rng, w2s);
    const Bigrade bg = bigrade(H, u, I.g1(), I.g2());
    const long m = pick_range(rng, -3, 3) * T + bg.j2;
    const long n = pick_range(rng, -4 * T, 4 * T);
    const Vec W1 = Vec::basis(w1), W2 = Vec::basis(w2);
    const Vec lhs = H.mode(u, m, I.mode(W1, n, W2), I.m3()) - I.mode(W1, n, H.mode(u, m, W2, I.m2()));
    VecBuilder rhs;
    const long i_max = (H.wt_units(u) + I.m1().deg_units(w1)) / T - 1;
    for (long i = 0; i <= i_max; ++i) {
      const Vec x = H.mode(u, i * T, W1, I.m1());
      if (x.empty()) continue;
      rhs.add(I.mode(x, m + n - i * T, W2), CycScalar(binomial(frac(m, T), static_cast<unsigned>(i))));
    }
    res.record(lhs == rhs.finish(), "commutator differs for u=" + H.V().state_str(u) + " w1=" +
                                        I.m1().state_str(w1) + " w2=" + I.m2().state_str(w2));
  }
  return res;
}

CheckResult check_degree_bookkeeping(const IntertwinerHandle& I, int max_weight) {
  CheckResult res("degree_bookkeeping", max_weight);
  const long T = I.backend().T();
  for (StateId w1 : I.m1().states_upto(max_weight * T)) {
    for (StateId w2 : I.m2().states_upto(2 * T)) {
      const long d1 = I.m1().deg_units(w1), d2 = I.m2().deg_units(w2);
      for (long n = d1 + d2 - T - 4 * T; n <= d1 + d2 - T; ++n) {
        const Vec r = I.mode(Vec::basis(w1), n, Vec::basis(w2));
        bool ok = true;
        for (const auto& [s, c] : r) ok = ok && I.m3().deg_units(s) == d2 + d1 - n - T;
        res.record(ok, "w1(n) lands outside the expected degree for w1=" + I.m1().state_str(w1));
      }
    }
  }
  return res;
}

}  // namespace twzhu
