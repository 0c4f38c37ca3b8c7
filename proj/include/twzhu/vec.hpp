#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "twzhu/scalar.hpp"

namespace twzhu {

using StateId = std::uint32_t;

/// Finite linear combination of interned basis states of a single module.
/// Terms are kept sorted by state id with no stored zeros.
class Vec {
 public:
  using Term = std::pair<StateId, CycScalar>;

  Vec() = default;
  static Vec basis(StateId s, CycScalar c = 1) {
    Vec v;
    if (!c.is_zero()) v.terms_.emplace_back(s, std::move(c));
    return v;
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  /// Coefficient of s (zero if absent).
  CycScalar coeff(StateId s) const;

  Vec& operator+=(const Vec& o) { return axpy(1, o); }
  Vec& operator-=(const Vec& o) { return axpy(-1, o); }
  /// this += c * o
  Vec& axpy(const CycScalar& c, const Vec& o);
  Vec& operator*=(const CycScalar& c);

  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(const CycScalar& c, Vec a) { return a *= c; }
  friend bool operator==(const Vec& a, const Vec& b) { return a.terms_ == b.terms_; }

 private:
  friend class VecBuilder;
  std::vector<Term> terms_;
};

/// Hash-map accumulator for sums with many scattered terms.
class VecBuilder {
 public:
  void add(StateId s, const CycScalar& c);
  void add(const Vec& v, const CycScalar& c = 1);
  bool empty() const { return acc_.empty(); }
  Vec finish();

 private:
  std::unordered_map<StateId, CycScalar> acc_;
};

}  // namespace twzhu
