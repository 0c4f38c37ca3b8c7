#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "twzhu/check.hpp"
#include "twzhu/fock.hpp"

namespace twzhu {

class Workspace;

/// Intertwining operator of type (M; V M) realized by c * Y_M, with M the
/// g2-twisted module (g1 = 1). Its shift h1 + h2 - h3 is 0, so I° = I.
class IntertwinerHandle {
 public:
  IntertwinerHandle(Heisenberg& H, Aut g2, CycScalar scale = 1);

  Heisenberg& backend() const { return *H_; }
  Aut g1() const { return Aut::Id; }
  Aut g2() const { return g2_; }
  FockModule& m1() const { return H_->V(); }
  FockModule& m2() const { return H_->module(g2_); }
  FockModule& m3() const { return H_->module(g2_); }
  const CycScalar& scale() const { return scale_; }
  Rat shift() const { return 0; }

  /// w1(n) w2 with n in units of 1/T.
  Vec mode(const Vec& w1, long n_units, const Vec& w2) const;
  /// o_I(w1) w2 = sum over monomials of w1(deg w1 - 1) w2.
  Vec zero_mode(const Vec& w1, const Vec& w2) const;

 private:
  Heisenberg* H_;
  Aut g2_;
  CycScalar scale_;
};

/// Compares all z0^a z2^b coefficients in a window around the support of
/// both sides of the associativity identity, with k = wt u - 1 + delta(j2)
/// and w2 in the bottom level. Returns an empty string on success.
std::string check_associativity(const IntertwinerHandle& I, StateId u, StateId w1, StateId w2);
CheckResult check_associativity_sweep(const IntertwinerHandle& I, int max_weight);

/// Both bottom-level product identities on all pairs within cap.
CheckResult check_zero_mode_products(Workspace& ws, const IntertwinerHandle& I, int N);
/// o_I kills the truncated relation span of the bimodule.
CheckResult check_zero_mode_kernel(Workspace& ws, const IntertwinerHandle& I, int N);

struct SIImage {
  int rank = 0;
  CheckResult kernel{"s_i_kernel"};
  CheckResult equivariance{"s_i_equivariance"};
};
/// Rank of w1 -> o_I(w1)|_{M2(0)} on the ambient basis, kernel containment of
/// the relation span, and the bimodule-map property on representatives.
SIImage s_i_image(Workspace& ws, const IntertwinerHandle& I, int N);

struct StraightenTerm {
  Vec x;
  long n_units = 0;
};

/// Rewrites u_{p + [j1+j2]/T} w1(n) w2 as a finite sum of x_i(n_i) w2.
std::vector<StraightenTerm> straighten(const IntertwinerHandle& I, StateId u, long p, StateId w1, long n_units,
                                       StateId w2);
/// Seeded sweep; half of the instances are weight-zero composites.
CheckResult check_straighten(const IntertwinerHandle& I, int instances, std::uint64_t seed);

/// [u_m, w1(n)] = sum_i binom(m, i) (u_i w1)(m + n - i) through the handle.
CheckResult check_handle_jacobi(const IntertwinerHandle& I, int instances, std::uint64_t seed);
/// w1(n) M2(m) lies in M3(m + deg w1 - n - 1).
CheckResult check_degree_bookkeeping(const IntertwinerHandle& I, int max_weight);

}  // namespace twzhu
