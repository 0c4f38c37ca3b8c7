#include "support.hpp"
#include "twzhu/fusion.hpp"
#include "twzhu/workspace.hpp"

using namespace twzhu;
using namespace tsupport;

TEST_SUITE("fusion") {
  TEST_CASE("(1, theta) has a one-dimensional bound at every cap") {
    Workspace ws(2);
    const IntertwinerHandle I(ws.H(), Aut::Theta);
    for (int N : {2, 4, 6, 8}) {
      CAPTURE(N);
      CHECK(hom_dim(ws, Aut::Id, Aut::Theta, N) == 1);
      CHECK(TensorOverAlgebra(ws, Aut::Id, Aut::Theta, N).dim() == 1);
      const PiCheck pc = pi_of_intertwiner(ws, I, N);
      CHECK(pc.nonzero);
      CHECK(pc.well_defined);
      CHECK(pc.in_hom);
    }
  }

  TEST_CASE("pi is linear in the handle") {
    Workspace ws(2);
    const CycScalar c1(q(2, 3)), c2(q(-5, 7));
    const PiCheck p1 = pi_of_intertwiner(ws, IntertwinerHandle(ws.H(), Aut::Theta, c1), 4);
    const PiCheck p2 = pi_of_intertwiner(ws, IntertwinerHandle(ws.H(), Aut::Theta, c2), 4);
    const PiCheck p12 = pi_of_intertwiner(ws, IntertwinerHandle(ws.H(), Aut::Theta, c1 + c2), 4);
    REQUIRE(p1.values.size() == p12.values.size());
    REQUIRE(p2.values.size() == p12.values.size());
    for (std::size_t i = 0; i < p12.values.size(); ++i) CHECK(p12.values[i] == p1.values[i] + p2.values[i]);
  }

  TEST_CASE("bounds stabilize") {
    Workspace ws(2);
    const FusionBound fb = fusion_bound(ws, Aut::Theta, Aut::Theta, {2, 4, 6, 8});
    CHECK(fb.stable);
    CHECK(fb.dims.back() == 2);
    for (std::size_t i = 1; i < fb.tensor_dims.size(); ++i) CHECK(fb.tensor_dims[i] >= fb.tensor_dims[i - 1]);
    CHECK(fusion_bound(ws, Aut::Id, Aut::Id, {2, 4, 6}).dims == std::vector<int>{1, 1, 1});
  }

  TEST_CASE("hom system shape") {
    Workspace ws(2);
    const TensorOverAlgebra tn(ws, Aut::Id, Aut::Theta, 4);
    const HomSystem hs = hom_system(ws, tn, Aut::Id, Aut::Theta);
    CHECK(hs.d3 == 1);
    CHECK(static_cast<int>(hs.free_cols.size()) == tn.dim());
  }
}
