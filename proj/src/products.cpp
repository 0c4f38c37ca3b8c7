#include "twzhu/products.hpp"

#include <stdexcept>

namespace twzhu {

int delta_r(int r, int T) {
  if (r < 0) throw std::invalid_argument("delta_r: negative r");
  return r % T == 0 ? 1 : 0;
}

int delta_pair(int j1, int j2, int T) {
  if (j1 < 0 || j1 >= T || j2 < 0 || j2 >= T) throw std::out_of_range("delta_pair: index outside [0, T)");
  if (j2 == 0) return 1;
  return j1 + j2 >= T ? 1 : 0;
}

Vec residue_product(Heisenberg& H, const ResidueSpec& s, StateId u, const Vec& w, FockModule& M) {
  if (w.empty() || s.prefactor.is_zero()) return {};
  const long T = H.T();
  const long top = M.top_units(w);
  const long limit = top + H.wt_units(u) - T;
  VecBuilder acc;
  for (long i = 0; i * T - s.beta_units <= limit; ++i) {
    const Rat b = binomial(s.alpha, static_cast<unsigned>(i));
    if (sgn(b) == 0) continue;
    const Vec r = H.mode(u, i * T - s.beta_units, w, M);
    if (!r.empty()) acc.add(r, CycScalar(b));
  }
  Vec out = acc.finish();
  out *= s.prefactor;
  return out;
}

ResidueSpec circ_g_spec(Heisenberg& H, StateId u, Aut g) {
  const int T = H.T();
  const int r = H.exponent(u, g);
  const int d = delta_r(r, T);
  return {H.wt(u) - 1 + d + frac(r, T), static_cast<long>(1 + d) * T, 1};
}

std::optional<ResidueSpec> star_g_spec(Heisenberg& H, StateId u, Aut g) {
  if (H.exponent(u, g) != 0) return std::nullopt;
  return ResidueSpec{H.wt(u), H.T(), 1};
}

ResidueSpec circ_bi_spec(Heisenberg& H, StateId u, Aut g1, Aut g2) {
  const int T = H.T();
  const Bigrade b = bigrade(H, u, g1, g2);
  const Rat alpha = H.wt(u) - 1 + delta_r(b.j2, T) + frac(b.j2, T);
  const long beta = static_cast<long>(1 + delta_pair(b.j1, b.j2, T)) * T - b.j1;
  return {alpha, beta, 1};
}

std::optional<ResidueSpec> star_left_spec(Heisenberg& H, StateId u, Aut g1, Aut g2) {
  const int T = H.T();
  const Bigrade b = bigrade(H, u, g1, g2);
  if ((b.j1 + b.j2) % T != 0) return std::nullopt;
  const Rat alpha = H.wt(u) - 1 + delta_r(b.j2, T) + frac(b.j2, T);
  return ResidueSpec{alpha, static_cast<long>(T) - b.j1, 1};
}

std::optional<ResidueSpec> star_right_spec(Heisenberg& H, StateId u, Aut g1, Aut g2) {
  const int T = H.T();
  const Bigrade b = bigrade(H, u, g1, g2);
  if (b.j2 != 0) return std::nullopt;
  return ResidueSpec{H.wt(u) - 1, static_cast<long>(T) - b.j1, phase(b.j1, T, -1)};
}

namespace {

template <class SpecFn>
Vec expand(Heisenberg& H, const Vec& u, const Vec& w, FockModule& M, SpecFn spec) {
  VecBuilder acc;
  for (const auto& [s, c] : u) {
    const std::optional<ResidueSpec> sp = spec(s);
    if (!sp) continue;
    acc.add(residue_product(H, *sp, s, w, M), c);
  }
  return acc.finish();
}

}  // namespace

Vec circ_g(Heisenberg& H, const Vec& u, const Vec& v, Aut g) {
  return expand(H, u, v, H.V(), [&](StateId s) { return std::optional<ResidueSpec>(circ_g_spec(H, s, g)); });
}

Vec star_g(Heisenberg& H, const Vec& u, const Vec& v, Aut g) {
  return expand(H, u, v, H.V(), [&](StateId s) { return star_g_spec(H, s, g); });
}

Vec circ_bi(Heisenberg& H, const Vec& u, const Vec& w1, Aut g1, Aut g2) {
  return expand(H, u, w1, H.module(g1),
                [&](StateId s) { return std::optional<ResidueSpec>(circ_bi_spec(H, s, g1, g2)); });
}

Vec star_left(Heisenberg& H, const Vec& u, const Vec& w1, Aut g1, Aut g2) {
  return expand(H, u, w1, H.module(g1), [&](StateId s) { return star_left_spec(H, s, g1, g2); });
}

Vec star_right(Heisenberg& H, const Vec& w1, const Vec& u, Aut g1, Aut g2) {
  return expand(H, u, w1, H.module(g1), [&](StateId s) { return star_right_spec(H, s, g1, g2); });
}

Vec l_minus1_plus_l0(Heisenberg& H, const Vec& u) {
  const Vec om = H.omega();
  return H.mode(om, 0, u, H.V()) + H.mode(om, H.T(), u, H.V());
}

}  // namespace twzhu
