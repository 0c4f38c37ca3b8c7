#pragma once

#include <map>
#include <utility>
#include <vector>

#include "twzhu/echelon.hpp"
#include "twzhu/intertwiner.hpp"

namespace twzhu {

class Workspace;

/// Truncated A_{g1g2,g2}(M^1) (x)_{A_{g2}(V)} M^2(0) with M^2 the g2-twisted
/// module. Columns are pairs (bimodule representative, bottom basis state),
/// heaviest representative first.
class TensorOverAlgebra {
 public:
  TensorOverAlgebra(Workspace& ws, Aut g1, Aut g2, int N);

  int cap() const { return N_; }
  int ambient_dim() const { return static_cast<int>(cols_.size()); }
  int dim() const { return ambient_dim() - ech_.rank(); }
  const std::vector<std::pair<StateId, StateId>>& columns() const { return cols_; }
  const RowEchelon& relations() const { return ech_; }
  /// x (x) w for x reduced in the bimodule and w in M^2(0).
  SparseRow encode(const Vec& x, const Vec& w) const;
  SparseRow reduce(const SparseRow& r) const { return ech_.reduce(r); }

 private:
  int N_;
  std::vector<std::pair<StateId, StateId>> cols_;
  std::map<std::pair<StateId, StateId>, int> index_;
  RowEchelon ech_;
};

/// Linear conditions on f: T_N -> M^3(0) making f an A_{g1g2}(V)-module map.
/// Unknowns are f(e)_k for free columns e and M^3(0) basis index k.
struct HomSystem {
  std::vector<int> free_cols;
  int d3 = 0;
  std::vector<SparseRow> equations;
  int unknowns() const { return static_cast<int>(free_cols.size()) * d3; }
};

HomSystem hom_system(Workspace& ws, const TensorOverAlgebra& tn, Aut g1, Aut g2);
int hom_dim(Workspace& ws, Aut g1, Aut g2, int N);

struct FusionBound {
  std::vector<int> caps;
  std::vector<int> dims;
  std::vector<int> tensor_dims;
  /// The last two caps agree.
  bool stable = false;
};
FusionBound fusion_bound(Workspace& ws, Aut g1, Aut g2, const std::vector<int>& caps);

struct PiCheck {
  bool nonzero = false;
  bool well_defined = false;
  bool in_hom = false;
  /// f(e)_k for the free columns e of T_N, in HomSystem unknown order.
  std::vector<CycScalar> values;
};
/// pi(I): x (x) w -> o_I(x) w, checked against the relations and equations.
PiCheck pi_of_intertwiner(Workspace& ws, const IntertwinerHandle& I, int N);

}  // namespace twzhu
