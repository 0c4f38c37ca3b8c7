#pragma once

#include <vector>

#include "twzhu/check.hpp"
#include "twzhu/echelon.hpp"
#include "twzhu/products.hpp"
#include "twzhu/zhu.hpp"

namespace twzhu {

class Workspace;

/// Generators u o w1 of O'(M^1) whose support fits in degree <= N.
std::vector<Vec> build_Oprime(Heisenberg& H, Aut g1, Aut g2, int N);

struct OdoubleprimeCounts {
  long left_assoc = 0;
  long right_assoc = 0;
  long left_ideal = 0;
  long right_ideal = 0;
};

/// The four families spanning O''(M^1), restricted to support in degree <= N.
/// A3 is A_{g1 g2}(V) and A2 is A_{g2}(V), both at cap N.
std::vector<Vec> build_Odoubleprime(Heisenberg& H, Aut g1, Aut g2, int N, const ZhuAlgebra& A3,
                                    const ZhuAlgebra& A2, OdoubleprimeCounts* counts = nullptr);

/// Truncated A_{g1g2,g2}(M^1) = M^1 / (O' + O'') with its two actions.
class Bimodule {
 public:
  Bimodule(Heisenberg& H, Aut g1, Aut g2, int N, const Quotient& prime, const ZhuAlgebra& A3,
           const ZhuAlgebra& A2);

  Aut g1() const { return g1_; }
  Aut g2() const { return g2_; }
  int cap() const { return N_; }
  FockModule& module() const { return H_->module(g1_); }
  const Quotient& prime() const { return *prime_; }
  const Quotient& full() const { return Q_; }
  const OdoubleprimeCounts& counts() const { return counts_; }
  long odoubleprime_generators() const { return n_odp_; }
  /// Whether the O'' rows enlarge the O' span at this cap.
  bool enlarged() const { return Q_.rank() > prime_->rank(); }

  Vec reduce(const Vec& v) const { return Q_.reduce(v); }
  std::vector<StateId> reps() const { return Q_.reps(); }
  /// reduce(u * x) with u in A_{g1g2}(V).
  Vec act_left(const Vec& u, const Vec& x) const;
  /// reduce(x * u) with u in A_{g2}(V).
  Vec act_right(const Vec& x, const Vec& u) const;

 private:
  Heisenberg* H_;
  Aut g1_, g2_;
  int N_;
  const Quotient* prime_;
  Quotient Q_;
  OdoubleprimeCounts counts_;
  long n_odp_ = 0;
};

/// Shifted exponents (alpha+n, beta+m), 0 <= n <= m <= 3, land in O'.
CheckResult check_shifted_circ(Workspace& ws, Aut g1, Aut g2, int N);
/// u * O' in O'.
CheckResult check_left_stability(Workspace& ws, Aut g1, Aut g2, int N);
/// O' * u in O'.
CheckResult check_right_stability(Workspace& ws, Aut g1, Aut g2, int N);
/// (u * w1) * v - u * (w1 * v) in O'.
CheckResult check_mixed_associativity(Workspace& ws, Aut g1, Aut g2, int N);
/// a * O and O * a in O.
CheckResult check_relation_ideal(Workspace& ws, Aut g1, Aut g2, int N);
/// Unit, left/right associativity and compatibility of the two actions.
CheckResult check_bimodule_axioms(Workspace& ws, Aut g1, Aut g2, int N);
/// Every O' and O'' generator reduces to 0 in the full quotient.
CheckResult check_generators_vanish(Workspace& ws, Aut g1, Aut g2, int N);

/// g1 = g2 = 1, M^1 = V: the three products against the untwisted
/// integer-binomial forms, coefficient by coefficient.
CheckResult check_untwisted_specialization(Workspace& ws, int N);
/// M^1 = V: circ and the left product equal o_{g2} and *_{g2} exactly; the
/// right product agrees with the reversed *_{g2} modulo O_{g2}(V); the
/// quotient layers agree with those of A_{g2}(V).
CheckResult check_algebra_specialization(Workspace& ws, Aut g2, int N);

}  // namespace twzhu
