#include "twzhu/fock.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace twzhu {

namespace {

long mod_pos(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

const Vec& zero_vec() {
  static const Vec z;
  return z;
}

}  // namespace

Aut compose(Aut a, Aut b) { return a == b ? Aut::Id : Aut::Theta; }

Aut parse_aut(const std::string& s) {
  if (s == "id" || s == "1") return Aut::Id;
  if (s == "theta") return Aut::Theta;
  throw std::invalid_argument("unknown automorphism '" + s + "'");
}

std::string aut_name(Aut g) { return g == Aut::Id ? "id" : "theta"; }

std::size_t FockModule::PartsHash::operator()(const std::vector<long>& p) const {
  std::size_t h = p.size();
  for (long x : p) h = h * 1000003u ^ std::hash<long>()(x);
  return h;
}

FockModule::FockModule(ModuleKind kind, int T) : kind_(kind), T_(T) {
  if (T < 1) throw std::invalid_argument("FockModule: T must be positive");
  if (kind == ModuleKind::Twisted && T % 2 != 0)
    throw std::invalid_argument("FockModule: the theta-twisted module needs even T");
  desc_.kind = kind;
  desc_.twist = kind == ModuleKind::Twisted ? Aut::Theta : Aut::Id;
  intern({});
}

bool FockModule::allowed_part(long p) const {
  if (p <= 0) return false;
  return kind_ == ModuleKind::Vacuum ? p % T_ == 0 : p % T_ == T_ / 2;
}

StateId FockModule::intern(const std::vector<long>& parts) {
  auto it = index_.find(parts);
  if (it != index_.end()) return it->second;
  long d = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!allowed_part(parts[i])) throw std::invalid_argument("FockModule: part not allowed");
    if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("FockModule: parts not descending");
    d += parts[i];
  }
  const auto id = static_cast<StateId>(parts_.size());
  parts_.push_back(parts);
  deg_.push_back(d);
  index_.emplace(parts, id);
  return id;
}

long FockModule::top_units(const Vec& v) const {
  long top = -1;
  for (const auto& [s, c] : v) top = std::max(top, deg_[s]);
  return top;
}

bool FockModule::less(StateId a, StateId b) const {
  if (deg_[a] != deg_[b]) return deg_[a] < deg_[b];
  return parts_[a] < parts_[b];
}

std::vector<StateId> FockModule::states_upto(long cap_units) {
  std::vector<std::vector<long>> found;
  std::vector<long> cur;
  const long first = kind_ == ModuleKind::Vacuum ? T_ : T_ / 2;
  std::function<void(long, long)> rec = [&](long maxpart, long budget) {
    found.push_back(cur);
    for (long p = std::min(maxpart, budget); p >= first; --p) {
      if (!allowed_part(p)) continue;
      cur.push_back(p);
      rec(p, budget - p);
      cur.pop_back();
    }
  };
  if (cap_units >= 0) rec(cap_units, cap_units);
  std::vector<StateId> out;
  out.reserve(found.size());
  for (const auto& p : found) out.push_back(intern(p));
  std::sort(out.begin(), out.end(), [this](StateId a, StateId b) { return less(a, b); });
  return out;
}

Vec FockModule::generator_mode(long r, StateId w) {
  const bool ok = kind_ == ModuleKind::Vacuum ? mod_pos(r, T_) == 0 : mod_pos(r, T_) == T_ / 2;
  if (!ok) throw std::invalid_argument("generator_mode: mode parity does not match the module");
  if (r == 0) return {};
  std::vector<long> p = parts_.at(w);
  if (r < 0) {
    p.insert(std::upper_bound(p.begin(), p.end(), -r, std::greater<long>()), -r);
    return Vec::basis(intern(p));
  }
  const auto cnt = std::count(p.begin(), p.end(), r);
  if (cnt == 0) return {};
  p.erase(std::find(p.begin(), p.end(), r));
  return Vec::basis(intern(p), CycScalar(frac(r * cnt, T_)));
}

Vec FockModule::generator_mode(long r, const Vec& w) {
  VecBuilder acc;
  for (const auto& [s, c] : w) acc.add(generator_mode(r, s), c);
  return acc.finish();
}

std::string FockModule::state_str(StateId s) const {
  std::ostringstream os;
  os << "[";
  const auto& p = parts_.at(s);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ",";
    os << rat_str(frac(p[i], T_));
  }
  os << "]";
  return os.str();
}

std::string FockModule::vec_str(const Vec& v) const {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : v) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")" << state_str(s);
  }
  return os.str();
}

std::size_t Heisenberg::KeyHash::operator()(const Key& k) const {
  std::size_t h = (static_cast<std::size_t>(k.u) << 32) ^ k.w;
  return h * 0x9E3779B97F4A7C15ull ^ std::hash<long>()(k.p);
}

Heisenberg::Heisenberg(int T)
    : T_(T),
      vac_(std::make_unique<FockModule>(ModuleKind::Vacuum, T)),
      tw_(std::make_unique<FockModule>(ModuleKind::Twisted, T)) {
  vac_->set_bottom_weight(compute_bottom_weight(*vac_));
  tw_->set_bottom_weight(compute_bottom_weight(*tw_));
}

StateId Heisenberg::v_state(const std::vector<long>& int_parts) {
  std::vector<long> p;
  p.reserve(int_parts.size());
  for (long x : int_parts) p.push_back(x * T_);
  std::sort(p.begin(), p.end(), std::greater<long>());
  return vac_->intern(p);
}

Vec Heisenberg::omega() { return Vec::basis(v_state({1, 1}), CycScalar(frac(1, 2))); }

int Heisenberg::exponent(StateId u, Aut g) const {
  if (g == Aut::Id) return 0;
  return static_cast<int>((vac_->length(u) % 2) * (T_ / 2));
}

std::unordered_map<Heisenberg::Key, Vec, Heisenberg::KeyHash>& Heisenberg::cache(FockModule& M) {
  return &M == vac_.get() ? vac_cache_ : tw_cache_;
}

std::size_t Heisenberg::cache_size() const { return vac_cache_.size() + tw_cache_.size(); }

bool Heisenberg::mode_allowed(StateId u, long p, const FockModule& M) const {
  const long offset = M.kind() == ModuleKind::Twisted ? static_cast<long>(vac_->length(u) % 2) * (T_ / 2) : 0;
  return mod_pos(p - offset, T_) == 0;
}

const Vec& Heisenberg::mode(StateId u, long p, StateId w, FockModule& M) {
  if (!mode_allowed(u, p, M)) return zero_vec();
  if (M.deg_units(w) + wt_units(u) - p - T_ < 0) return zero_vec();
  if (vac_->length(u) == 0) {
    if (p != -T_) return zero_vec();
  }
  auto& c = cache(M);
  const Key key{u, w, p};
  auto it = c.find(key);
  if (it != c.end()) return it->second;
  Vec r = compute(u, p, w, M);
  return c.emplace(key, std::move(r)).first->second;
}

Vec Heisenberg::compute(StateId u, long p, StateId w, FockModule& M) {
  const std::vector<long> up = vac_->parts(u);
  if (up.empty()) return Vec::basis(w);
  if (up.size() == 1 && up[0] == T_) return M.generator_mode(p, w);

  const long k = up[0] / T_;
  const std::vector<long> rest(up.begin() + 1, up.end());
  const StateId v = vac_->intern(rest);
  const long wv = vac_->deg_units(v);
  const long dw = M.deg_units(w);
  const long rho = M.rho();
  VecBuilder acc;

  // a_{rho-k-i} v_{p-rho+i} w
  for (long i = 0;; ++i) {
    const long q = p - rho + i * T_;
    if (dw + wv - q - T_ < 0) break;
    const Vec& inner = mode(v, q, w, M);
    if (inner.empty()) continue;
    acc.add(M.generator_mode(rho - k * T_ - i * T_, inner), binomial_int(k + i - 1, i));
  }
  // -(-1)^k v_{p-rho-k-i} a_{rho+i} w
  const long sign = k % 2 == 0 ? -1 : 1;
  for (long i = 0; rho + i * T_ <= dw; ++i) {
    if (rho + i * T_ == 0) continue;
    const Vec aw = M.generator_mode(rho + i * T_, w);
    if (aw.empty()) continue;
    acc.add(mode(v, p - rho - k * T_ - i * T_, aw, M), Rat(Rat(sign) * binomial_int(k + i - 1, i)));
  }
  // -sum_j binom(rho/T, j) (a_{-k+j} v)_{p-j} w
  if (rho != 0) {
    const long wu = up[0] / T_ + wv / T_;
    for (long j = 1; j <= wu; ++j) {
      std::vector<long> xp = rest;
      Rat coef = 1;
      if (j < k) {
        const long part = (k - j) * T_;
        xp.insert(std::upper_bound(xp.begin(), xp.end(), part, std::greater<long>()), part);
      } else if (j == k) {
        continue;
      } else {
        const long part = (j - k) * T_;
        const auto cnt = std::count(xp.begin(), xp.end(), part);
        if (cnt == 0) continue;
        xp.erase(std::find(xp.begin(), xp.end(), part));
        coef = Rat((j - k) * cnt);
      }
      const StateId x = vac_->intern(xp);
      const Vec& r = mode(x, p - j * T_, w, M);
      if (r.empty()) continue;
      acc.add(r, CycScalar(Rat(-binomial(frac(rho, T_), static_cast<unsigned>(j)) * coef)));
    }
  }
  return acc.finish();
}

Vec Heisenberg::mode(StateId u, long p, const Vec& w, FockModule& M) {
  VecBuilder acc;
  for (const auto& [s, c] : w) acc.add(mode(u, p, s, M), c);
  return acc.finish();
}

Vec Heisenberg::mode(const Vec& u, long p, const Vec& w, FockModule& M) {
  VecBuilder acc;
  for (const auto& [us, cu] : u) {
    for (const auto& [ws, cw] : w) acc.add(mode(us, p, ws, M), cu * cw);
  }
  return acc.finish();
}

Rat Heisenberg::compute_bottom_weight(FockModule& M) {
  const Vec r = mode(omega(), T_, Vec::basis(M.bottom()), M);
  for (const auto& [s, c] : r) {
    if (s != M.bottom()) throw std::logic_error("o(omega) does not preserve the bottom level");
    if (!c.is_rational()) throw std::logic_error("o(omega) eigenvalue is not rational");
    return c.rational();
  }
  return 0;
}

Bigrade bigrade(Heisenberg& H, StateId u, Aut g1, Aut g2) {
  return {H.exponent(u, g1), H.exponent(u, g2)};
}

Bigrade bigrade(Heisenberg& H, const Vec& u, Aut g1, Aut g2) {
  if (u.empty()) throw std::invalid_argument("bigrade: zero vector");
  const Bigrade b = bigrade(H, u.terms().front().first, g1, g2);
  for (const auto& [s, c] : u) {
    if (!(bigrade(H, s, g1, g2) == b)) throw std::invalid_argument("bigrade: vector mixes eigenspaces");
  }
  return b;
}

Vec project_eigenspace(Heisenberg& H, const Vec& u, Aut g1, Aut g2, int j1, int j2) {
  VecBuilder acc;
  for (const auto& [s, c] : u) {
    if (bigrade(H, s, g1, g2) == Bigrade{j1, j2}) acc.add(s, c);
  }
  return acc.finish();
}

}  // namespace twzhu
