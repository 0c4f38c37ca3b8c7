#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "twzhu/scalar.hpp"
#include "twzhu/vec.hpp"

namespace twzhu {

/// Automorphisms shipped with the free-boson backend.
enum class Aut { Id, Theta };

Aut compose(Aut a, Aut b);
Aut parse_aut(const std::string& s);
std::string aut_name(Aut g);

enum class ModuleKind { Vacuum, Twisted };

struct ModuleDescriptor {
  ModuleKind kind = ModuleKind::Vacuum;
  Rat h;
  Aut twist = Aut::Id;
};

/// Fock space with one oscillator: interned PBW monomials a_{-n1}...a_{-nk}|bottom>.
///
/// Every mode index and every part is stored in units of 1/T. Parts of the
/// vacuum module are multiples of T; parts of the twisted module are odd
/// multiples of T/2. Parts are kept sorted in descending order.
class FockModule {
 public:
  FockModule(ModuleKind kind, int T);

  ModuleKind kind() const { return kind_; }
  int T() const { return T_; }
  /// Mode offset of the generator a, in units of 1/T.
  int rho() const { return kind_ == ModuleKind::Twisted ? T_ / 2 : 0; }
  bool allowed_part(long p) const;

  StateId intern(const std::vector<long>& parts);
  StateId bottom() const { return 0; }
  std::size_t size() const { return parts_.size(); }
  const std::vector<long>& parts(StateId s) const { return parts_.at(s); }
  long deg_units(StateId s) const { return deg_.at(s); }
  Rat deg(StateId s) const { return frac(deg_.at(s), T_); }
  std::size_t length(StateId s) const { return parts_.at(s).size(); }

  /// Top degree (units) of a nonzero vector; -1 for zero.
  long top_units(const Vec& v) const;
  /// All states of degree <= cap (units), ascending by (degree, parts).
  std::vector<StateId> states_upto(long cap_units);
  /// Order used for bases: degree, then lexicographic on parts.
  bool less(StateId a, StateId b) const;

  /// a_r w, r in units. Throws on a parity mismatch.
  Vec generator_mode(long r, StateId w);
  Vec generator_mode(long r, const Vec& w);

  /// Parts as rationals, e.g. "[3/2,1/2]".
  std::string state_str(StateId s) const;
  std::string vec_str(const Vec& v) const;

  const ModuleDescriptor& descriptor() const { return desc_; }
  void set_bottom_weight(const Rat& h) { desc_.h = h; }

 private:
  struct PartsHash {
    std::size_t operator()(const std::vector<long>& p) const;
  };

  ModuleKind kind_;
  int T_;
  ModuleDescriptor desc_;
  std::vector<std::vector<long>> parts_;
  std::vector<long> deg_;
  std::unordered_map<std::vector<long>, StateId, PartsHash> index_;
};

/// Rank-one Heisenberg VOA V = M(1) with theta: a -> -a, its vacuum module
/// and its theta-twisted module. Mode actions u_p w are memoized per
/// (monomial, mode, target state); the backend is single-owner.
class Heisenberg {
 public:
  explicit Heisenberg(int T = 2);

  int T() const { return T_; }
  FockModule& V() { return *vac_; }
  FockModule& twisted() { return *tw_; }
  FockModule& module(Aut g) { return g == Aut::Id ? *vac_ : *tw_; }

  /// V state from integer parts, e.g. {2,1} for a_{-2}a_{-1}1.
  StateId v_state(const std::vector<long>& int_parts);
  Vec omega();

  long wt_units(StateId u) const { return vac_->deg_units(u); }
  Rat wt(StateId u) const { return vac_->deg(u); }
  /// Eigen-exponent j of u under g: g u = e^{2 pi i j / T} u.
  int exponent(StateId u, Aut g) const;

  /// u_p w for a monomial u of V, p in units of 1/T. Returns 0 when p is not in
  /// the coset allowed by the twist of M.
  const Vec& mode(StateId u, long p, StateId w, FockModule& M);
  Vec mode(StateId u, long p, const Vec& w, FockModule& M);
  Vec mode(const Vec& u, long p, const Vec& w, FockModule& M);

  /// Whether p is an admissible mode of u on M.
  bool mode_allowed(StateId u, long p, const FockModule& M) const;

  /// o(omega) eigenvalue on the bottom state of M, computed by the recursion.
  Rat compute_bottom_weight(FockModule& M);

  std::size_t cache_size() const;

 private:
  struct Key {
    StateId u;
    StateId w;
    long p;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  Vec compute(StateId u, long p, StateId w, FockModule& M);
  std::unordered_map<Key, Vec, KeyHash>& cache(FockModule& M);

  int T_;
  std::unique_ptr<FockModule> vac_;
  std::unique_ptr<FockModule> tw_;
  std::unordered_map<Key, Vec, KeyHash> vac_cache_;
  std::unordered_map<Key, Vec, KeyHash> tw_cache_;
};

/// Component of u in the joint eigenspace (j1, j2) of (g1, g2).
Vec project_eigenspace(Heisenberg& H, const Vec& u, Aut g1, Aut g2, int j1, int j2);

struct Bigrade {
  int j1 = 0;
  int j2 = 0;
  bool operator==(const Bigrade&) const = default;
};

/// Bigrade of a monomial.
Bigrade bigrade(Heisenberg& H, StateId u, Aut g1, Aut g2);
/// Bigrade of a vector lying in a single joint eigenspace; throws otherwise.
Bigrade bigrade(Heisenberg& H, const Vec& u, Aut g1, Aut g2);

}  // namespace twzhu
