#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twzhu/fock.hpp"
#include "twzhu/scalar.hpp"
#include "twzhu/vec.hpp"

namespace twzhu {

/// Sparse row, sorted by column, no stored zeros.
using SparseRow = std::vector<std::pair<int, CycScalar>>;

/// Reduced row echelon form over CycScalar, built incrementally.
/// The pivot of a row is its leftmost nonzero column and is normalized to 1;
/// pivot columns are zero in every other row.
class RowEchelon {
 public:
  explicit RowEchelon(int ncols = 0);

  int ncols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseRow>& rows() const { return rows_; }
  bool is_pivot(int c) const { return pivot_row_.at(c) >= 0; }
  std::vector<int> free_columns() const;

  /// Returns true when the rank grew.
  bool insert(const SparseRow& row);
  SparseRow reduce(const SparseRow& row) const;

 private:
  int ncols_;
  std::vector<SparseRow> rows_;
  std::vector<int> pivot_row_;
};

/// Basis of all states of degree <= cap in one module, heaviest first.
class Ambient {
 public:
  Ambient(FockModule& M, long cap_units);

  FockModule& module() const { return *M_; }
  long cap_units() const { return cap_; }
  int size() const { return static_cast<int>(states_.size()); }
  StateId state(int col) const { return states_.at(col); }
  std::optional<int> column(StateId s) const;
  bool fits(const Vec& v) const;

  /// Throws std::out_of_range when v has support above the cap.
  SparseRow to_row(const Vec& v) const;
  Vec to_vec(const SparseRow& r) const;

 private:
  FockModule* M_;
  long cap_;
  std::vector<StateId> states_;
  std::unordered_map<StateId, int> col_;
};

/// Truncated quotient of a module by a relation span.
class Quotient {
 public:
  Quotient(FockModule& M, long cap_units);

  const Ambient& ambient() const { return amb_; }
  const RowEchelon& echelon() const { return ech_; }
  long cap_units() const { return amb_.cap_units(); }
  int rank() const { return ech_.rank(); }

  /// Adds v to the relation span; v must fit under the cap.
  bool add_relation(const Vec& v);
  /// Canonical representative, supported on reps(). Throws above the cap.
  Vec reduce(const Vec& v) const;
  bool is_zero(const Vec& v) const { return reduce(v).empty(); }

  /// Representative states in ascending (degree, parts) order.
  std::vector<StateId> reps() const;
  /// Number of representatives per degree (units), ascending.
  std::vector<std::pair<long, int>> layer_dims() const;
  /// Relation rows as vectors.
  std::vector<Vec> relation_rows() const;

 private:
  Ambient amb_;
  RowEchelon ech_;
};

}  // namespace twzhu
