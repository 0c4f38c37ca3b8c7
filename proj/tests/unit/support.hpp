#pragma once

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "twzhu/fock.hpp"

namespace tsupport {

/// Twisted-module state from parts given in units of 1/2, e.g. {3, 1} = a_{-3/2}a_{-1/2}.
inline twzhu::StateId tw(twzhu::Heisenberg& H, std::vector<long> half_parts) { return H.twisted().intern(half_parts); }

/// Vacuum-module state from integer parts.
inline twzhu::StateId vs(twzhu::Heisenberg& H, std::vector<long> parts) { return H.v_state(parts); }

inline twzhu::Vec bv(twzhu::StateId s, twzhu::CycScalar c = 1) { return twzhu::Vec::basis(s, std::move(c)); }

inline twzhu::Rat q(long n, long d = 1) { return twzhu::frac(n, d); }

}  // namespace tsupport
