#include "twzhu/vec.hpp"

#include <algorithm>

namespace twzhu {

CycScalar Vec::coeff(StateId s) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), s,
                             [](const Term& t, StateId id) { return t.first < id; });
  if (it != terms_.end() && it->first == s) return it->second;
  return {};
}

Vec& Vec::axpy(const CycScalar& c, const Vec& o) {
  if (c.is_zero() || o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      CycScalar s = std::move(a->second);
      s += c * b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Vec& Vec::operator*=(const CycScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : terms_) t.second *= c;
  return *this;
}

void VecBuilder::add(StateId s, const CycScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc_.try_emplace(s, c);
  if (!inserted) it->second += c;
}

void VecBuilder::add(const Vec& v, const CycScalar& c) {
  if (c.is_zero()) return;
  for (const auto& [s, x] : v) add(s, c.is_one() ? x : c * x);
}

Vec VecBuilder::finish() {
  Vec v;
  v.terms_.reserve(acc_.size());
  for (auto& [s, x] : acc_) {
    if (!x.is_zero()) v.terms_.emplace_back(s, std::move(x));
  }
  acc_.clear();
  std::sort(v.terms_.begin(), v.terms_.end(),
            [](const Vec::Term& a, const Vec::Term& b) { return a.first < b.first; });
  return v;
}

}  // namespace twzhu
