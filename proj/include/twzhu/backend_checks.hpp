#pragma once

#include <cstdint>

#include "twzhu/check.hpp"
#include "twzhu/fock.hpp"

namespace twzhu {

/// [u_m, v_n] w = sum_i binom(m, i) (u_i v)_{m+n-i} w on M for seeded random
/// monomials u, v of weight <= max_weight and w of degree <= max_weight.
CheckResult check_commutator(Heisenberg& H, FockModule& M, int instances, int max_weight, std::uint64_t seed);

/// Closed form r (T - r) / (4 T^2) for the bottom weight of the rank-one boson
/// twisted by an eigenvalue exp(2 pi i r / T).
Rat twisted_bottom_weight(int r, int T);

/// o(omega) on the twisted bottom equals the closed form, and L(0) acts on
/// every state of degree <= N by deg + h.
CheckResult check_bottom_weight(Heisenberg& H, int N);

}  // namespace twzhu
