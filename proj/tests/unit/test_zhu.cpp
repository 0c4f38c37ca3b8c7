#include <random>

#include "support.hpp"
#include "twzhu/echelon.hpp"
#include "twzhu/workspace.hpp"

using namespace twzhu;
using namespace tsupport;

namespace {

// Dense Gaussian elimination over Q, kept separate from RowEchelon.
int dense_rank(std::vector<std::vector<Rat>> m) {
  int rank = 0;
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    int p = rank;
    while (p < static_cast<int>(m.size()) && m[p][c] == 0) ++p;
    if (p == static_cast<int>(m.size())) continue;
    std::swap(m[p], m[rank]);
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rat f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_SUITE("echelon") {
  TEST_CASE("rank agrees with dense elimination") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> v(-3, 3);
    for (int t = 0; t < 50; ++t) {
      const int rows = 1 + static_cast<int>(rng() % 8), cols = 1 + static_cast<int>(rng() % 8);
      std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
      RowEchelon e(cols);
      for (auto& row : m) {
        SparseRow sr;
        for (int c = 0; c < cols; ++c) {
          row[c] = (rng() % 3 == 0) ? Rat(v(rng)) : Rat(0);
          if (row[c] != 0) sr.emplace_back(c, CycScalar(row[c]));
        }
        e.insert(sr);
      }
      CHECK(e.rank() == dense_rank(m));
      CHECK(static_cast<int>(e.free_columns().size()) == cols - e.rank());
      // Reduced rows are zero exactly on the inserted span.
      for (const SparseRow& r : e.rows()) CHECK(e.reduce(r).empty());
    }
  }

  TEST_CASE("pivots are leftmost and normalized") {
    RowEchelon e(3);
    e.insert({{1, CycScalar(2)}, {2, CycScalar(4)}});
    e.insert({{0, CycScalar(1)}, {1, CycScalar(1)}});
    CHECK(e.rank() == 2);
    CHECK(e.is_pivot(0));
    CHECK(e.is_pivot(1));
    CHECK(!e.is_pivot(2));
    for (const SparseRow& r : e.rows()) CHECK(r.front().second == CycScalar(1));
  }

  TEST_CASE("quotient reduce is idempotent at cap zero") {
    Heisenberg H(2);
    Quotient Q(H.V(), 0);
    CHECK(Q.ambient().size() == 1);
    const Vec one = bv(H.V().bottom(), 3);
    CHECK(Q.reduce(Q.reduce(one)) == Q.reduce(one));
    CHECK_THROWS_AS(Q.reduce(bv(vs(H, {1}))), std::out_of_range);
  }
}

TEST_SUITE("zhu") {
  TEST_CASE("untwisted reductions of a_{-2}1") {
    Workspace ws(2);
    Heisenberg& H = ws.H();
    const ZhuAlgebra& A = ws.zhu(Aut::Id, 4);
    const StateId a1 = vs(H, {1}), a2 = vs(H, {2});
    CHECK(A.reduce(bv(a2)) == bv(a1, -1));
    CHECK(A.reduce(bv(a2) + bv(a1)).empty());
  }

  TEST_CASE("odd states vanish for theta") {
    Workspace ws(2);
    Heisenberg& H = ws.H();
    const CheckResult r = check_odd_states_vanish(ws, Aut::Theta, 6);
    CHECK(r.passed());
    CHECK(r.instances > 0);
    for (StateId s : H.V().states_upto(10)) {
      if (H.V().length(s) % 2) CHECK(ws.zhu(Aut::Theta, 6).reduce(bv(s)).empty());
    }
  }

  TEST_CASE("algebra axioms and bottom-level representation") {
    Workspace ws(2);
    for (Aut g : {Aut::Id, Aut::Theta}) {
      CHECK(check_zhu_axioms(ws, g, 6).passed());
      CHECK(check_bottom_representation(ws, g, 6).passed());
    }
  }

  TEST_CASE("(a * a) * a = a * (a * a) for g = 1") {
    Workspace ws(2);
    Heisenberg& H = ws.H();
    const Vec a = bv(vs(H, {1}));
    // Both sides expanded without intermediate reduction.
    const Vec left = star_g(H, star_g(H, a, a, Aut::Id), a, Aut::Id);
    const Vec right = star_g(H, a, star_g(H, a, a, Aut::Id), Aut::Id);
    const ZhuAlgebra& A = ws.zhu(Aut::Id, 6);
    CHECK(A.reduce(left) == A.reduce(right));
  }

  TEST_CASE("A(V) is a polynomial algebra in a") {
    Workspace ws(2);
    Heisenberg& H = ws.H();
    const ZhuAlgebra& A = ws.zhu(Aut::Id, 8);
    for (const auto& [d, n] : A.quotient().layer_dims()) CHECK(n == (d % 2 == 0 ? 1 : 0));
    const Vec a = bv(vs(H, {1}));
    Vec p = bv(H.V().bottom());
    for (int k = 1; k <= 4; ++k) {
      p = A.product(p, a);
      CHECK(H.V().top_units(p) == 2 * k);
    }
    for (StateId x : A.reps()) {
      for (StateId y : A.reps()) {
        if (H.V().deg_units(x) + H.V().deg_units(y) <= 16) CHECK(A.product(bv(x), bv(y)) == A.product(bv(y), bv(x)));
      }
    }
  }

  TEST_CASE("A_theta(V) is one-dimensional and stable") {
    Workspace ws(2);
    const ZhuAlgebra& A = ws.zhu(Aut::Theta, 6);
    CHECK(A.reps().size() == 1);
    CHECK(zhu_stabilization(ws, Aut::Theta, 6).stable);
    CHECK(zhu_stabilization(ws, Aut::Id, 6).stable);
  }

  TEST_CASE("o(omega) on the twisted bottom") {
    Heisenberg H(2);
    const Vec b = bv(H.twisted().bottom());
    CHECK(bottom_action(H, H.omega(), b, H.twisted()) == bv(H.twisted().bottom(), CycScalar(q(1, 16))));
  }

  TEST_CASE("o vanishes on relation rows") {
    Workspace ws(2);
    Heisenberg& H = ws.H();
    for (Aut g : {Aut::Id, Aut::Theta}) {
      for (const Vec& r : ws.zhu(g, 6).quotient().relation_rows()) {
        CHECK(bottom_action(H, r, bv(H.module(g).bottom()), H.module(g)).empty());
      }
    }
  }

  TEST_CASE("expected-zero retry") {
    CheckResult res("probe", 4);
    int calls = 0;
    const bool ok = certify_zero([&](int cap) { ++calls; return cap >= 6 ? Vec() : bv(0); }, 4, res, [] { return "x"; });
    CHECK(ok);
    CHECK(calls == 2);
    CHECK(res.retried == 1);
    CHECK(res.passed());
    certify_zero([](int) { return bv(0); }, 4, res, [] { return "persistent"; });
    CHECK(!res.passed());
    CHECK(res.first_failure.find("persistent") != std::string::npos);
  }
}
