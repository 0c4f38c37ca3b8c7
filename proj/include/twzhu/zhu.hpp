#pragma once

#include <vector>

#include "twzhu/check.hpp"
#include "twzhu/echelon.hpp"
#include "twzhu/fock.hpp"
#include "twzhu/products.hpp"

namespace twzhu {

class Workspace;

/// Generators of O_g(V) fully supported in weight <= N: u o_g v and
/// (L(-1)+L(0))u over basis states.
std::vector<Vec> build_O_span(Heisenberg& H, Aut g, int N);

/// Weight-truncated A_g(V) = V / O_g(V).
class ZhuAlgebra {
 public:
  ZhuAlgebra(Heisenberg& H, Aut g, int N);

  Heisenberg& backend() const { return *H_; }
  Aut g() const { return g_; }
  int cap() const { return N_; }
  const Quotient& quotient() const { return Q_; }
  long generator_count() const { return generators_; }

  Vec reduce(const Vec& v) const { return Q_.reduce(v); }
  /// reduce(x *_g y); requires wt x + wt y <= N.
  Vec product(const Vec& x, const Vec& y) const;
  std::vector<StateId> reps() const { return Q_.reps(); }

 private:
  Heisenberg* H_;
  Aut g_;
  int N_;
  Quotient Q_;
  long generators_ = 0;
};

/// o_M(u) w2 = sum over monomials of u_{wt u - 1} w2, for w2 in the bottom level.
Vec bottom_action(Heisenberg& H, const Vec& u, const Vec& w2, FockModule& M);

/// Every basis state with nonzero g-exponent and weight <= N-1 reduces to 0.
CheckResult check_odd_states_vanish(Workspace& ws, Aut g, int N);
/// Identity, centrality of omega and associativity on representatives.
CheckResult check_zhu_axioms(Workspace& ws, Aut g, int N);
/// o(u)o(v) = o(u *_g v) on the bottom of the g-twisted module, and o kills
/// every relation row.
CheckResult check_bottom_representation(Workspace& ws, Aut g, int N);

/// Cumulative image dimension of V^{<=k} at caps N and N+1, for k <= N-2.
struct Stabilization {
  std::vector<int> at_n;
  std::vector<int> at_n1;
  bool stable = true;
};
Stabilization zhu_stabilization(Workspace& ws, Aut g, int N);

}  // namespace twzhu
