#include "twzhu/runner.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "twzhu/backend_checks.hpp"
#include "twzhu/fusion.hpp"
#include "twzhu/intertwiner.hpp"
#include "twzhu/workspace.hpp"

namespace twzhu {

using nlohmann::json;

namespace {

json big_int(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json layers_json(const std::vector<std::pair<long, int>>& layers, int T) {
  json out = json::array();
  for (const auto& [d, n] : layers) out.push_back({{"deg", rat_str(frac(d, T))}, {"dim", n}});
  return out;
}

json states_json(const std::vector<StateId>& states, const FockModule& M) {
  json out = json::array();
  for (StateId s : states) out.push_back(M.state_str(s));
  return out;
}

class Runner {
 public:
  Runner(const Scenario& s, const RunOptions& o) : s_(s), opts_(o), ws_(s.T), N_(s.weight_cap) {}

  RunResult run() {
    RunResult out;
    out.report["schema"] = kReportSchema;
    out.report["scenario"] = scenario_json(s_);
    out.report["tasks"] = json::array();
    json timing = json::object();
    const std::set<std::string> wanted(s_.tasks.begin(), s_.tasks.end());
    for (const std::string& task : kTaskNames) {
      if (!wanted.count(task)) continue;
      const auto t0 = std::chrono::steady_clock::now();
      json section;
      try {
        section = dispatch(task);
      } catch (const std::exception& e) {
        throw std::runtime_error("task " + task + ": " + e.what());
      }
      timing[task] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      out.report["tasks"].push_back(std::move(section));
    }
    out.passed = passed_;
    out.report["passed"] = passed_;
    if (opts_.timing) out.report["timing"] = timing;
    if (opts_.dump_tables) out.tables = tables_;
    return out;
  }

 private:
  int order() const { return 2 * s_.T; }

  json dispatch(const std::string& task) {
    json section{{"task", task}};
    checks_ = json::array();
    if (task == "build-zhu") section["result"] = build_zhu();
    if (task == "build-bimodule") section["result"] = build_bimodule();
    if (task == "verify") section["result"] = verify();
    if (task == "fusion-bound") section["result"] = fusion();
    section["checks"] = checks_;
    return section;
  }

  void add(const CheckResult& r, const std::string& scope) {
    json j = check_json(r);
    j["scope"] = scope;
    checks_.push_back(std::move(j));
    passed_ = passed_ && r.passed();
  }

  std::vector<Aut> algebra_twists() const {
    std::vector<Aut> gs{s_.g2};
    const Aut g3 = compose(s_.g1, s_.g2);
    if (g3 != s_.g2) gs.push_back(g3);
    return gs;
  }

  static std::string algebra_scope(Aut g) { return "A_" + aut_name(g); }
  std::string bimodule_scope() const { return "(" + aut_name(s_.g1) + "," + aut_name(s_.g2) + ")"; }

  void zhu_checks(Aut g) {
    add(check_odd_states_vanish(ws_, g, N_), algebra_scope(g));
    add(check_zhu_axioms(ws_, g, N_), algebra_scope(g));
    add(check_bottom_representation(ws_, g, N_), algebra_scope(g));
  }

  void bimodule_checks() {
    const std::string sc = bimodule_scope();
    add(check_shifted_circ(ws_, s_.g1, s_.g2, N_), sc);
    add(check_left_stability(ws_, s_.g1, s_.g2, N_), sc);
    add(check_right_stability(ws_, s_.g1, s_.g2, N_), sc);
    add(check_mixed_associativity(ws_, s_.g1, s_.g2, N_), sc);
    add(check_relation_ideal(ws_, s_.g1, s_.g2, N_), sc);
    add(check_bimodule_axioms(ws_, s_.g1, s_.g2, N_), sc);
    add(check_generators_vanish(ws_, s_.g1, s_.g2, N_), sc);
  }

  json build_zhu() {
    json out = json::array();
    FockModule& V = ws_.H().V();
    for (Aut g : algebra_twists()) {
      const ZhuAlgebra& A = ws_.zhu(g, N_);
      const Quotient& Q = A.quotient();
      const Stabilization st = zhu_stabilization(ws_, g, N_);
      json products = json::array();
      const std::vector<StateId> reps = A.reps();
      for (StateId x : reps) {
        for (StateId y : reps) {
          if (V.deg_units(x) + V.deg_units(y) > static_cast<long>(N_) * s_.T) continue;
          const Vec p = A.product(Vec::basis(x), Vec::basis(y));
          if (p.empty()) continue;
          products.push_back({{"x", V.state_str(x)}, {"y", V.state_str(y)}, {"value", vec_json(p, V, order())}});
        }
      }
      out.push_back({{"twist", aut_name(g)},
                     {"cap", N_},
                     {"ambient_dim", Q.ambient().size()},
                     {"generators", A.generator_count()},
                     {"relation_rank", Q.rank()},
                     {"layers", layers_json(Q.layer_dims(), s_.T)},
                     {"reps", states_json(reps, V)},
                     {"stabilization", {{"cumulative_at_N", st.at_n}, {"cumulative_at_N+1", st.at_n1},
                                        {"stable", st.stable}}},
                     {"products", products}});
      if (opts_.dump_tables) tables_["zhu_" + aut_name(g)] = products;
      zhu_checks(g);
    }
    return out;
  }

  json build_bimodule() {
    Heisenberg& H = ws_.H();
    const Bimodule& B = ws_.bimodule(s_.g1, s_.g2, N_);
    FockModule& M = B.module();
    const OdoubleprimeCounts& c = B.counts();
    json out{{"g1", aut_name(s_.g1)},
             {"g2", aut_name(s_.g2)},
             {"cap", N_},
             {"ambient_dim", B.full().ambient().size()},
             {"prime_rank", B.prime().rank()},
             {"full_rank", B.full().rank()},
             {"prime_layers", layers_json(B.prime().layer_dims(), s_.T)},
             {"full_layers", layers_json(B.full().layer_dims(), s_.T)},
             {"odoubleprime_enlarges_oprime", B.enlarged()},
             {"odoubleprime_generators",
              {{"left_assoc", c.left_assoc},
               {"right_assoc", c.right_assoc},
               {"left_ideal", c.left_ideal},
               {"right_ideal", c.right_ideal}}},
             {"reps", states_json(B.reps(), M)}};
    if (opts_.dump_tables) {
      const long cap = static_cast<long>(N_) * s_.T;
      json left = json::array(), right = json::array();
      for (StateId x : B.reps()) {
        for (StateId a : ws_.zhu(compose(s_.g1, s_.g2), N_).reps()) {
          if (H.wt_units(a) + M.deg_units(x) > cap) continue;
          const Vec v = B.act_left(Vec::basis(a), Vec::basis(x));
          if (!v.empty()) left.push_back({{"a", H.V().state_str(a)}, {"x", M.state_str(x)}, {"value", vec_json(v, M, order())}});
        }
        for (StateId b : ws_.zhu(s_.g2, N_).reps()) {
          if (H.wt_units(b) + M.deg_units(x) > cap) continue;
          const Vec v = B.act_right(Vec::basis(x), Vec::basis(b));
          if (!v.empty()) right.push_back({{"x", M.state_str(x)}, {"b", H.V().state_str(b)}, {"value", vec_json(v, M, order())}});
        }
      }
      tables_["bimodule_left_action"] = left;
      tables_["bimodule_right_action"] = right;
    }
    bimodule_checks();
    return out;
  }

  json verify() {
    Heisenberg& H = ws_.H();
    const std::uint64_t seed = s_.seed;
    json out = json::object();
    add(check_commutator(H, H.V(), 100, 6, seed), "vacuum");
    add(check_commutator(H, H.twisted(), 100, 6, seed + 1), "theta-twisted");
    add(check_bottom_weight(H, N_), "theta-twisted");
    out["bottom_weight"] = rat_str(H.twisted().descriptor().h);
    for (Aut g : algebra_twists()) zhu_checks(g);
    bimodule_checks();
    if (s_.g1 == Aut::Id && s_.g2 == Aut::Id) add(check_untwisted_specialization(ws_, N_), "(id,id)");
    if (s_.g1 == Aut::Id) {
      add(check_algebra_specialization(ws_, s_.g2, N_), bimodule_scope());
      const IntertwinerHandle I(H, s_.g2);
      const std::string sc = "Y_" + s_.M2->name;
      add(check_associativity_sweep(I, 3), sc);
      add(check_zero_mode_products(ws_, I, N_), sc);
      add(check_zero_mode_kernel(ws_, I, N_), sc);
      const SIImage si = s_i_image(ws_, I, N_);
      add(si.kernel, sc);
      add(si.equivariance, sc);
      CheckResult rank("s_i_rank", N_);
      rank.record(si.rank == 1, "image of o_I has rank " + std::to_string(si.rank) + ", expected 1");
      add(rank, sc);
      out["s_i_rank"] = si.rank;
      add(check_straighten(I, 60, seed + 2), sc);
      add(check_handle_jacobi(I, 60, seed + 3), sc);
      add(check_degree_bookkeeping(I, 3), sc);
    }
    return out;
  }

  json fusion() {
    static const std::vector<int> caps{2, 4, 6, 8};
    const FusionBound fb = fusion_bound(ws_, s_.g1, s_.g2, caps);
    json out{{"caps", fb.caps},
             {"hom_dims", fb.dims},
             {"tensor_dims", fb.tensor_dims},
             {"stable", fb.stable},
             {"assumptions", json::array({"M3 irreducible"})}};
    out["bound"] = fb.stable ? json(fb.dims.back()) : json(nullptr);
    CheckResult st("fusion_stabilization", caps.back());
    st.record(fb.stable, "hom dimension did not stabilize over the caps");
    add(st, bimodule_scope());
    if (s_.g1 == Aut::Id) {
      Heisenberg& H = ws_.H();
      const IntertwinerHandle I(H, s_.g2);
      CheckResult pc("pi_of_intertwiner", caps.back());
      json per_cap = json::array();
      for (int N : caps) {
        const PiCheck p = pi_of_intertwiner(ws_, I, N);
        pc.record(p.nonzero && p.well_defined && p.in_hom,
                  "pi(Y_M) fails at cap " + std::to_string(N) + (p.nonzero ? "" : ": zero") +
                      (p.well_defined ? "" : ": not well defined") + (p.in_hom ? "" : ": not equivariant"));
        per_cap.push_back({{"cap", N}, {"nonzero", p.nonzero}, {"well_defined", p.well_defined}, {"in_hom", p.in_hom}});
      }
      add(pc, bimodule_scope());
      // Coordinates of pi(Y_M) on the tensor basis at the largest cap.
      const TensorOverAlgebra tn(ws_, s_.g1, s_.g2, caps.back());
      FockModule& M2 = I.m2();
      FockModule& M3 = I.m3();
      json coords = json::array();
      for (int c : tn.relations().free_columns()) {
        const auto [x, w] = tn.columns()[c];
        const Vec img = I.zero_mode(Vec::basis(x), Vec::basis(w));
        coords.push_back({{"x", I.m1().state_str(x)}, {"w", M2.state_str(w)}, {"value", vec_json(img, M3, order())}});
      }
      out["pi"] = {{"per_cap", per_cap}, {"coordinates", coords}};
      out["lower_bound"] = pc.passed() ? 1 : 0;
      if (fb.stable) out["gap"] = fb.dims.back() - (pc.passed() ? 1 : 0);
    } else {
      out["lower_bound"] = nullptr;
    }
    return out;
  }

  const Scenario& s_;
  RunOptions opts_;
  Workspace ws_;
  int N_;
  bool passed_ = true;
  json checks_;
  json tables_ = json::object();
};

}  // namespace

json scalar_json(const CycScalar& c, int order) {
  json out = json::array();
  for (const Rat& q : c.coords(order)) out.push_back({big_int(q.get_num()), big_int(q.get_den())});
  return out;
}

json vec_json(const Vec& v, const FockModule& M, int order) {
  std::vector<Vec::Term> terms(v.begin(), v.end());
  std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) { return M.less(a.first, b.first); });
  json out = json::array();
  for (const auto& [s, c] : terms) out.push_back({{"state", M.state_str(s)}, {"coeff", scalar_json(c, order)}});
  return out;
}

json check_json(const CheckResult& r) {
  json j{{"name", r.name},
         {"cap", r.cap},
         {"instances", r.instances},
         {"failures", r.failures},
         {"retried", r.retried},
         {"passed", r.passed()}};
  if (!r.passed()) {
    j["first_failure"] = r.first_failure;
    if (!r.first_residual.empty()) j["residual"] = r.first_residual;
  }
  return j;
}

json scenario_json(const Scenario& s) {
  json j{{"T", s.T},
         {"backend", s.backend},
         {"g1", aut_name(s.g1)},
         {"g2", aut_name(s.g2)},
         {"weight_cap", s.weight_cap},
         {"tasks", s.tasks},
         {"seed", s.seed}};
  j["M1"] = s.M1 ? json(s.M1->name) : json(nullptr);
  j["M2"] = s.M2 ? json(s.M2->name) : json(nullptr);
  j["M3"] = s.M3 ? json(s.M3->name) : json(nullptr);
  return j;
}

RunResult run(const Scenario& s, const RunOptions& opts) {
  validate(s);
  return Runner(s, opts).run();
}

}  // namespace twzhu
