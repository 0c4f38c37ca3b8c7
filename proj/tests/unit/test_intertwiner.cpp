#include "support.hpp"
#include "twzhu/intertwiner.hpp"
#include "twzhu/workspace.hpp"

using namespace twzhu;
using namespace tsupport;

TEST_SUITE("intertwiner") {
  TEST_CASE("zero modes on the twisted bottom") {
    Heisenberg H(2);
    const IntertwinerHandle I(H, Aut::Theta);
    const Vec b = bv(H.twisted().bottom());
    CHECK(I.zero_mode(H.omega(), b) == bv(H.twisted().bottom(), CycScalar(q(1, 16))));
    CHECK(I.zero_mode(bv(vs(H, {1})), b).empty());
    CHECK(I.zero_mode(bv(H.V().bottom()), b) == b);
  }

  TEST_CASE("scale multiplies every mode") {
    Heisenberg H(2);
    const CycScalar c(q(-3, 5));
    const IntertwinerHandle I1(H, Aut::Theta), Ic(H, Aut::Theta, c);
    const Vec w1 = bv(vs(H, {1, 1}));
    const Vec w2 = bv(tw(H, {1}));
    for (long n = -6; n <= 4; ++n) CHECK(Ic.mode(w1, n, w2) == c * I1.mode(w1, n, w2));
  }

  TEST_CASE("associativity instances") {
    Heisenberg H(2);
    for (Aut g : {Aut::Id, Aut::Theta}) {
      const IntertwinerHandle I(H, g);
      const StateId a = vs(H, {1}), b = H.module(g).bottom();
      CHECK(check_associativity(I, a, a, b).empty());
      CHECK(check_associativity(I, vs(H, {1, 1}), a, b).empty());
      CHECK(check_associativity_sweep(I, 3).passed());
    }
  }

  TEST_CASE("straightening") {
    Heisenberg H(2);
    const IntertwinerHandle I(H, Aut::Theta);
    const CheckResult r = check_straighten(I, 60, 5);
    CHECK(r.passed());
    CHECK(r.instances >= 50);
  }

  TEST_CASE("straightening negative control") {
    Heisenberg H(2);
    const IntertwinerHandle I(H, Aut::Theta);
    const StateId a = vs(H, {1}), w1 = vs(H, {1});
    const StateId w2 = H.twisted().bottom();
    const long p = -2, n = -1;
    auto terms = straighten(I, a, p, w1, n, w2);
    REQUIRE(!terms.empty());
    auto sum = [&](const std::vector<StraightenTerm>& ts) {
      Vec s;
      for (const auto& t : ts) s += I.mode(t.x, t.n_units, bv(w2));
      return s;
    };
    // a_{p + 1/2} on the theta-twisted module.
    const Vec lhs = H.mode(a, p * 2 + 1, I.mode(bv(w1), n, bv(w2)), H.twisted());
    REQUIRE(!lhs.empty());
    CHECK(sum(terms) == lhs);
    for (auto& t : terms) t.x *= CycScalar(2);
    CHECK(sum(terms) != lhs);
  }

  TEST_CASE("handle Jacobi identity and degrees") {
    Heisenberg H(2);
    for (Aut g : {Aut::Id, Aut::Theta}) {
      const IntertwinerHandle I(H, g);
      CHECK(check_handle_jacobi(I, 40, 9).passed());
      CHECK(check_degree_bookkeeping(I, 3).passed());
    }
  }

  TEST_CASE("S_I image") {
    Workspace ws(2);
    for (Aut g : {Aut::Id, Aut::Theta}) {
      const IntertwinerHandle I(ws.H(), g);
      CHECK(check_zero_mode_products(ws, I, 6).passed());
      CHECK(check_zero_mode_kernel(ws, I, 6).passed());
      const SIImage s = s_i_image(ws, I, 6);
      CHECK(s.rank == 1);
      CHECK(s.kernel.passed());
      CHECK(s.equivariance.passed());
    }
  }
}
