#pragma once

#include <optional>
#include <string>

#include "twzhu/fock.hpp"

namespace twzhu {

/// 1 iff r = 0 mod T.
int delta_r(int r, int T);
/// 1 if j2 = 0, 1 if j2 != 0 and j1 + j2 >= T, 0 otherwise.
int delta_pair(int j1, int j2, int T);

/// Res_z (1+z)^alpha z^{-beta} Y(u,z) w, scaled by prefactor.
/// beta is stored in units of 1/T.
struct ResidueSpec {
  Rat alpha;
  long beta_units = 0;
  CycScalar prefactor = 1;
};

/// prefactor * sum_{i>=0} binom(alpha, i) u_{i-beta} w, truncated where the
/// modes lower the degree of w below zero.
Vec residue_product(Heisenberg& H, const ResidueSpec& s, StateId u, const Vec& w, FockModule& M);

/// Exponent tables. An empty optional is the zero branch of a product.
ResidueSpec circ_g_spec(Heisenberg& H, StateId u, Aut g);
std::optional<ResidueSpec> star_g_spec(Heisenberg& H, StateId u, Aut g);
ResidueSpec circ_bi_spec(Heisenberg& H, StateId u, Aut g1, Aut g2);
std::optional<ResidueSpec> star_left_spec(Heisenberg& H, StateId u, Aut g1, Aut g2);
std::optional<ResidueSpec> star_right_spec(Heisenberg& H, StateId u, Aut g1, Aut g2);

/// Products on V. Non-homogeneous arguments are expanded linearly.
Vec circ_g(Heisenberg& H, const Vec& u, const Vec& v, Aut g);
Vec star_g(Heisenberg& H, const Vec& u, const Vec& v, Aut g);

/// Bimodule products; w1 lives in the g1-twisted module M^1.
Vec circ_bi(Heisenberg& H, const Vec& u, const Vec& w1, Aut g1, Aut g2);
Vec star_left(Heisenberg& H, const Vec& u, const Vec& w1, Aut g1, Aut g2);
Vec star_right(Heisenberg& H, const Vec& w1, const Vec& u, Aut g1, Aut g2);

/// (L(-1) + L(0)) u on V.
Vec l_minus1_plus_l0(Heisenberg& H, const Vec& u);

}  // namespace twzhu
