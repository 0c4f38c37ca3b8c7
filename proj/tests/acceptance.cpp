// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "twzhu/backend_checks.hpp"
#include "twzhu/fusion.hpp"
#include "twzhu/intertwiner.hpp"
#include "twzhu/runner.hpp"
#include "twzhu/workspace.hpp"

using namespace twzhu;

namespace {

struct Pair {
  Aut g1, g2;
};
const std::vector<Pair> kPairs = {{Aut::Id, Aut::Theta}, {Aut::Theta, Aut::Theta}, {Aut::Id, Aut::Id}};
constexpr int kCap = 6;

class Criterion {
 public:
  explicit Criterion(int id) : id_(id) {}
  void require(const CheckResult& r) {
    instances_ += r.instances;
    if (!r.passed()) fail(r.name + ": " + r.first_failure);
  }
  void require(bool ok, const std::string& what) {
    ++instances_;
    if (!ok) fail(what);
  }
  bool report(const std::string& title) const {
    std::cout << (detail_.empty() ? "PASS" : "FAIL") << "  criterion " << id_ << "  " << title << "  ("
              << instances_ << " instances)";
    if (!detail_.empty()) std::cout << "  first failure: " << detail_;
    std::cout << '\n';
    return detail_.empty();
  }

 private:
  void fail(const std::string& what) {
    if (detail_.empty()) detail_ = what;
  }
  int id_;
  long instances_ = 0;
  std::string detail_;
};

}  // namespace

int main(int argc, char** argv) {
  const std::string scenario_dir = argc > 1 ? argv[1] : TWZHU_SCENARIO_DIR;
  Workspace ws(2);
  Heisenberg& H = ws.H();
  bool ok = true;

  {
    Criterion c(1);
    c.require(check_commutator(H, H.V(), 100, 6, 101));
    c.require(check_commutator(H, H.twisted(), 100, 6, 102));
    ok &= c.report("commutator formula on both modules");
  }
  {
    Criterion c(2);
    c.require(check_odd_states_vanish(ws, Aut::Theta, kCap));
    ok &= c.report("odd states vanish in A_theta(V)");
  }
  {
    Criterion c(3);
    for (Aut g : {Aut::Id, Aut::Theta}) c.require(check_zhu_axioms(ws, g, kCap));
    ok &= c.report("unit, central omega and associativity in A_g(V)");
  }
  {
    Criterion c(4);
    for (Aut g : {Aut::Id, Aut::Theta}) c.require(check_bottom_representation(ws, g, kCap));
    ok &= c.report("bottom-level representation of A_g(V)");
  }
  {
    Criterion c(5);
    for (const Pair& p : kPairs) {
      c.require(check_shifted_circ(ws, p.g1, p.g2, kCap));
      c.require(check_left_stability(ws, p.g1, p.g2, kCap));
      c.require(check_right_stability(ws, p.g1, p.g2, kCap));
      c.require(check_mixed_associativity(ws, p.g1, p.g2, kCap));
      c.require(check_relation_ideal(ws, p.g1, p.g2, kCap));
    }
    ok &= c.report("relation span identities for three twist pairs");
  }
  {
    Criterion c(6);
    for (const Pair& p : kPairs) c.require(check_bimodule_axioms(ws, p.g1, p.g2, kCap));
    ok &= c.report("bimodule axioms for three twist pairs");
  }
  {
    Criterion c(7);
    c.require(check_untwisted_specialization(ws, kCap));
    for (Aut g : {Aut::Id, Aut::Theta}) c.require(check_algebra_specialization(ws, g, kCap));
    ok &= c.report("specializations to the untwisted and algebra products");
  }
  {
    Criterion c(8);
    const IntertwinerHandle I(H, Aut::Theta);
    c.require(check_zero_mode_products(ws, I, kCap));
    c.require(check_zero_mode_kernel(ws, I, kCap));
    const SIImage s = s_i_image(ws, I, kCap);
    c.require(s.kernel);
    c.require(s.equivariance);
    c.require(s.rank == 1, "S_I rank " + std::to_string(s.rank) + ", expected 1");
    ok &= c.report("zero modes of Y_M(1)(theta) and the map onto S_I");
  }
  {
    Criterion c(9);
    for (Aut g : {Aut::Theta, Aut::Id}) {
      const CheckResult r = check_straighten(IntertwinerHandle(H, g), 60, 20261016);
      c.require(r);
      c.require(r.instances >= 50, "only " + std::to_string(r.instances) + " straighten instances");
    }
    ok &= c.report("straightening identity and weight-zero composites");
  }
  {
    Criterion c(10);
    const FusionBound fb = fusion_bound(ws, Aut::Id, Aut::Theta, {2, 4, 6, 8});
    const IntertwinerHandle I(H, Aut::Theta);
    for (std::size_t i = 0; i < fb.caps.size(); ++i) {
      const std::string at = " at N = " + std::to_string(fb.caps[i]);
      c.require(fb.dims[i] == 1, "hom_dim " + std::to_string(fb.dims[i]) + at);
      const PiCheck pc = pi_of_intertwiner(ws, I, fb.caps[i]);
      c.require(pc.nonzero && pc.well_defined && pc.in_hom, "pi(Y_M) not a nonzero hom" + at);
    }
    c.require(fb.stable, "(1, theta) bound not stable");
    const FusionBound ex = fusion_bound(ws, Aut::Theta, Aut::Theta, {2, 4, 6, 8});
    c.require(ex.stable, "(theta, theta) bound not stable");
    std::cout << "      (theta, theta) hom_dims:";
    for (int d : ex.dims) std::cout << ' ' << d;
    std::cout << '\n';
    ok &= c.report("fusion bound for (1, theta) and stability of (theta, theta)");
  }
  {
    Criterion c(11);
    c.require(check_bottom_weight(H, 8));
    c.require(twisted_bottom_weight(1, 2) == frac(1, 16), "closed form differs from 1/16");
    ok &= c.report("bottom weight 1/16 of the theta-twisted module");
  }
  {
    Criterion c(12);
    int count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(scenario_dir)) {
      if (entry.path().extension() != ".scn") continue;
      const Scenario s = parse_scenario_file(entry.path().string());
      validate(s);
      const RunOptions opts{true, false};
      const RunResult a = run(s, opts), b = run(s, opts);
      const std::string name = entry.path().filename().string();
      c.require(a.report.dump() == b.report.dump(), name + ": reports differ");
      c.require(a.tables.dump() == b.tables.dump(), name + ": tables differ");
      ++count;
    }
    c.require(count > 0, "no scenarios found in " + scenario_dir);
    ok &= c.report("repeated scenario runs are identical");
  }
  return ok ? 0 : 1;
}
