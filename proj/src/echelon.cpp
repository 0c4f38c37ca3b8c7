#include "twzhu/echelon.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace twzhu {

RowEchelon::RowEchelon(int ncols) : ncols_(ncols), pivot_row_(ncols, -1) {}

std::vector<int> RowEchelon::free_columns() const {
  std::vector<int> out;
  for (int c = 0; c < ncols_; ++c) {
    if (pivot_row_[c] < 0) out.push_back(c);
  }
  return out;
}

SparseRow RowEchelon::reduce(const SparseRow& row) const {
  if (row.empty()) return {};
  bool touches = false;
  for (const auto& [c, x] : row) {
    if (pivot_row_.at(c) >= 0) {
      touches = true;
      break;
    }
  }
  if (!touches) return row;
  std::vector<CycScalar> dense(ncols_);
  for (const auto& [c, x] : row) dense[c] = x;
  for (int c = row.front().first; c < ncols_; ++c) {
    const int r = pivot_row_[c];
    if (r < 0 || dense[c].is_zero()) continue;
    const CycScalar f = dense[c];
    for (const auto& [cc, x] : rows_[r]) dense[cc] -= f * x;
  }
  SparseRow out;
  for (int c = 0; c < ncols_; ++c) {
    if (!dense[c].is_zero()) out.emplace_back(c, std::move(dense[c]));
  }
  return out;
}

namespace {

// a -= f * b
void row_axpy(SparseRow& a, const CycScalar& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(std::move(*i++));
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, -(f * j->second));
      ++j;
    } else {
      CycScalar s = std::move(i->second);
      s -= f * j->second;
      if (!s.is_zero()) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

}  // namespace

bool RowEchelon::insert(const SparseRow& row) {
  SparseRow r = reduce(row);
  if (r.empty()) return false;
  const int pc = r.front().first;
  if (!r.front().second.is_one()) {
    const CycScalar inv = r.front().second.inverse();
    for (auto& [c, x] : r) x *= inv;
  }
  for (auto& other : rows_) {
    auto it = std::lower_bound(other.begin(), other.end(), pc,
                               [](const auto& t, int c) { return t.first < c; });
    if (it == other.end() || it->first != pc) continue;
    const CycScalar f = it->second;
    row_axpy(other, f, r);
  }
  pivot_row_[pc] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

Ambient::Ambient(FockModule& M, long cap_units) : M_(&M), cap_(cap_units) {
  states_ = M.states_upto(cap_units);
  std::reverse(states_.begin(), states_.end());
  for (int c = 0; c < static_cast<int>(states_.size()); ++c) col_.emplace(states_[c], c);
}

std::optional<int> Ambient::column(StateId s) const {
  auto it = col_.find(s);
  if (it == col_.end()) return std::nullopt;
  return it->second;
}

bool Ambient::fits(const Vec& v) const {
  for (const auto& [s, c] : v) {
    if (!col_.count(s)) return false;
  }
  return true;
}

SparseRow Ambient::to_row(const Vec& v) const {
  SparseRow r;
  r.reserve(v.size());
  for (const auto& [s, c] : v) {
    auto it = col_.find(s);
    if (it == col_.end()) throw std::out_of_range("vector has support above the weight cap");
    r.emplace_back(it->second, c);
  }
  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return r;
}

Vec Ambient::to_vec(const SparseRow& r) const {
  VecBuilder acc;
  for (const auto& [c, x] : r) acc.add(states_.at(c), x);
  return acc.finish();
}

Quotient::Quotient(FockModule& M, long cap_units) : amb_(M, cap_units), ech_(amb_.size()) {}

bool Quotient::add_relation(const Vec& v) { return ech_.insert(amb_.to_row(v)); }

Vec Quotient::reduce(const Vec& v) const { return amb_.to_vec(ech_.reduce(amb_.to_row(v))); }

std::vector<StateId> Quotient::reps() const {
  std::vector<StateId> out;
  for (int c : ech_.free_columns()) out.push_back(amb_.state(c));
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::pair<long, int>> Quotient::layer_dims() const {
  std::map<long, int> dims;
  for (StateId s : amb_.module().states_upto(amb_.cap_units())) dims[amb_.module().deg_units(s)] += 0;
  for (StateId s : reps()) dims[amb_.module().deg_units(s)] += 1;
  return {dims.begin(), dims.end()};
}

std::vector<Vec> Quotient::relation_rows() const {
  std::vector<Vec> out;
  out.reserve(ech_.rows().size());
  for (const auto& r : ech_.rows()) out.push_back(amb_.to_vec(r));
  return out;
}

}  // namespace twzhu
