#include "twzhu/fusion.hpp"

#include <algorithm>

#include "twzhu/workspace.hpp"

namespace twzhu {

namespace {

std::vector<StateId> bottom_basis(FockModule& M) { return M.states_upto(0); }

CycScalar dot(const SparseRow& row, const std::vector<CycScalar>& x) {
  CycScalar s;
  for (const auto& [c, v] : row) s += v * x[c];
  return s;
}

}  // namespace

TensorOverAlgebra::TensorOverAlgebra(Workspace& ws, Aut g1, Aut g2, int N) : N_(N) {
  Heisenberg& H = ws.H();
  const Bimodule& B = ws.bimodule(g1, g2, N);
  const ZhuAlgebra& A2 = ws.zhu(g2, N);
  FockModule& M1 = H.module(g1);
  FockModule& M2 = H.module(g2);
  std::vector<StateId> xs = B.reps();
  std::reverse(xs.begin(), xs.end());
  const std::vector<StateId> ws2 = bottom_basis(M2);
  for (StateId x : xs) {
    for (StateId w : ws2) {
      index_[{x, w}] = static_cast<int>(cols_.size());
      cols_.emplace_back(x, w);
    }
  }
  ech_ = RowEchelon(ambient_dim());
  const long cap = static_cast<long>(N) * H.T();
  for (StateId x : xs) {
    for (StateId b : A2.reps()) {
      if (M1.deg_units(x) + H.wt_units(b) > cap) continue;
      const Vec xb = B.act_right(Vec::basis(x), Vec::basis(b));
      for (StateId w : ws2) {
        SparseRow lhs = encode(xb, Vec::basis(w));
        const SparseRow rhs = encode(Vec::basis(x), bottom_action(H, Vec::basis(b), Vec::basis(w), M2));
        VecBuilder acc;
        for (const auto& [c, v] : lhs) acc.add(static_cast<StateId>(c), v);
        for (const auto& [c, v] : rhs) acc.add(static_cast<StateId>(c), -v);
        SparseRow row;
        for (const auto& [c, v] : acc.finish()) row.emplace_back(static_cast<int>(c), v);
        ech_.insert(row);
      }
    }
  }
}

SparseRow TensorOverAlgebra::encode(const Vec& x, const Vec& w) const {
  SparseRow row;
  for (const auto& [xs, cx] : x) {
    for (const auto& [ws, cw] : w) {
      const auto it = index_.find({xs, ws});
      if (it == index_.end()) throw std::out_of_range("tensor element outside the truncated ambient");
      row.emplace_back(it->second, cx * cw);
    }
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return row;
}

HomSystem hom_system(Workspace& ws, const TensorOverAlgebra& tn, Aut g1, Aut g2) {
  Heisenberg& H = ws.H();
  const int N = tn.cap();
  const Bimodule& B = ws.bimodule(g1, g2, N);
  const ZhuAlgebra& A3 = ws.zhu(compose(g1, g2), N);
  FockModule& M1 = H.module(g1);
  FockModule& M3 = H.module(compose(g1, g2));
  const std::vector<StateId> b3 = bottom_basis(M3);

  HomSystem sys;
  sys.free_cols = tn.relations().free_columns();
  sys.d3 = static_cast<int>(b3.size());
  std::map<int, int> slot;
  for (std::size_t i = 0; i < sys.free_cols.size(); ++i) slot[sys.free_cols[i]] = static_cast<int>(i);
  auto unknown = [&](int col, int k) { return slot.at(col) * sys.d3 + k; };

  const long cap = static_cast<long>(N) * H.T();
  for (int e : sys.free_cols) {
    const auto [x, w] = tn.columns()[e];
    for (StateId a : A3.reps()) {
      if (H.wt_units(a) + M1.deg_units(x) > cap) continue;
      const SparseRow image = tn.reduce(tn.encode(B.act_left(Vec::basis(a), Vec::basis(x)), Vec::basis(w)));
      // o(a) on M3(0) in the basis b3.
      std::vector<Vec> oa;
      for (StateId s : b3) oa.push_back(bottom_action(H, Vec::basis(a), Vec::basis(s), M3));
      for (int kp = 0; kp < sys.d3; ++kp) {
        VecBuilder acc;
        for (const auto& [c, v] : image) acc.add(static_cast<StateId>(unknown(c, kp)), v);
        for (int k = 0; k < sys.d3; ++k) acc.add(static_cast<StateId>(unknown(e, k)), -oa[k].coeff(b3[kp]));
        SparseRow row;
        for (const auto& [c, v] : acc.finish()) row.emplace_back(static_cast<int>(c), v);
        if (!row.empty()) sys.equations.push_back(std::move(row));
      }
    }
  }
  return sys;
}

int hom_dim(Workspace& ws, Aut g1, Aut g2, int N) {
  const TensorOverAlgebra tn(ws, g1, g2, N);
  const HomSystem sys = hom_system(ws, tn, g1, g2);
  RowEchelon ech(sys.unknowns());
  for (const SparseRow& r : sys.equations) ech.insert(r);
  return sys.unknowns() - ech.rank();
}

FusionBound fusion_bound(Workspace& ws, Aut g1, Aut g2, const std::vector<int>& caps) {
  FusionBound fb;
  fb.caps = caps;
  for (int N : caps) {
    const TensorOverAlgebra tn(ws, g1, g2, N);
    fb.tensor_dims.push_back(tn.dim());
    fb.dims.push_back(hom_dim(ws, g1, g2, N));
  }
  fb.stable = fb.dims.size() >= 2 && fb.dims[fb.dims.size() - 1] == fb.dims[fb.dims.size() - 2];
  return fb;
}

PiCheck pi_of_intertwiner(Workspace& ws, const IntertwinerHandle& I, int N) {
  PiCheck out;
  const TensorOverAlgebra tn(ws, I.g1(), I.g2(), N);
  const std::vector<StateId> b3 = bottom_basis(I.m3());
  const int d3 = static_cast<int>(b3.size());

  // Values of pi(I) on every ambient column, flattened per M3(0) coordinate.
  std::vector<std::vector<CycScalar>> value(d3, std::vector<CycScalar>(tn.ambient_dim()));
  for (int c = 0; c < tn.ambient_dim(); ++c) {
    const auto [x, w] = tn.columns()[c];
    const Vec img = I.zero_mode(Vec::basis(x), Vec::basis(w));
    for (int k = 0; k < d3; ++k) value[k][c] = img.coeff(b3[k]);
  }
  out.well_defined = true;
  for (const SparseRow& r : tn.relations().rows()) {
    for (int k = 0; k < d3; ++k) out.well_defined = out.well_defined && dot(r, value[k]).is_zero();
  }

  const HomSystem sys = hom_system(ws, tn, I.g1(), I.g2());
  std::vector<CycScalar> f(sys.unknowns());
  for (std::size_t i = 0; i < sys.free_cols.size(); ++i) {
    for (int k = 0; k < d3; ++k) {
      f[i * d3 + k] = value[k][sys.free_cols[i]];
      out.nonzero = out.nonzero || !f[i * d3 + k].is_zero();
    }
  }
  out.in_hom = true;
  for (const SparseRow& r : sys.equations) out.in_hom = out.in_hom && dot(r, f).is_zero();
  out.values = std::move(f);
  return out;
}

}  // namespace twzhu
