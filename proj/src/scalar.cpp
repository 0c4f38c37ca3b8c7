#include "twzhu/scalar.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace twzhu {

Rat binomial(const Rat& alpha, unsigned i) {
  Rat r = 1;
  for (unsigned k = 0; k < i; ++k) {
    r *= alpha - k;
    r /= k + 1;
  }
  return r;
}

Rat binomial_int(long n, unsigned k) {
  if (n < 0) throw std::invalid_argument("binomial_int: negative top");
  if (static_cast<long>(k) > n) return 0;
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), k);
  return Rat(z);
}

FracExp FracExp::operator+(const FracExp& o) const {
  if (den != o.den) throw std::logic_error("FracExp: mixed denominators");
  return {num + o.num, den};
}

FracExp FracExp::operator-(const FracExp& o) const {
  if (den != o.den) throw std::logic_error("FracExp: mixed denominators");
  return {num - o.num, den};
}

std::string FracExp::str() const { return rat_str(value()); }

std::string rat_str(const Rat& q) { return q.get_str(); }

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::vector<long> poly_div_exact(std::vector<long> num, const std::vector<long>& den) {
  // den is monic
  const int dn = static_cast<int>(den.size()) - 1;
  const int nn = static_cast<int>(num.size()) - 1;
  std::vector<long> q(nn - dn + 1, 0);
  for (int k = nn; k >= dn; --k) {
    const long c = num[k];
    if (c == 0) continue;
    const int shift = k - dn;
    q[shift] = c;
    for (int j = 0; j <= dn; ++j) num[shift + j] -= c * den[j];
  }
  return q;
}

std::vector<long> compute_cyclotomic(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = poly_div_exact(p, cyclotomic_polynomial(d));
  }
  return p;
}

// Reduces poly (lowest degree first) modulo the monic cyclotomic polynomial.
void reduce_mod(std::vector<Rat>& poly, int order) {
  const auto& phi = cyclotomic_polynomial(order);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = poly.size(); k-- > deg;) {
    if (sgn(poly[k]) == 0) continue;
    Rat c = poly[k];
    std::size_t shift = k - deg;
    for (std::size_t j = 0; j <= deg; ++j) {
      if (phi[j] != 0) poly[shift + j] -= c * phi[j];
    }
  }
  if (poly.size() > deg) poly.resize(deg);
}

int merge_order(int a, int b) {
  if (a == 0) return b;
  if (b == 0 || a == b) return a;
  throw std::domain_error("CycScalar: scalars from different cyclotomic fields");
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<long>> cache;
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n < 1");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto poly = compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(poly)).first->second;
}

CycScalar CycScalar::zeta_power(int order, long k) {
  if (order < 1) throw std::invalid_argument("zeta_power: order < 1");
  k %= order;
  if (k < 0) k += order;
  std::vector<Rat> poly(k + 1);
  poly[k] = 1;
  reduce_mod(poly, order);
  return from_coords(order, poly);
}

CycScalar CycScalar::from_coords(int order, const std::vector<Rat>& coords) {
  CycScalar s;
  if (coords.empty()) return s;
  std::vector<Rat> poly = coords;
  if (order > 0) reduce_mod(poly, order);
  s.order_ = order;
  s.c0_ = poly[0];
  s.rest_.assign(poly.begin() + 1, poly.end());
  s.trim();
  return s;
}

std::vector<Rat> CycScalar::coords(int order) const {
  if (!rest_.empty() && order != order_) throw std::domain_error("CycScalar::coords: wrong field");
  std::vector<Rat> out(order > 0 ? euler_phi(order) : 1);
  out[0] = c0_;
  for (std::size_t k = 0; k < rest_.size(); ++k) out[k + 1] = rest_[k];
  return out;
}

void CycScalar::trim() {
  while (!rest_.empty() && sgn(rest_.back()) == 0) rest_.pop_back();
  if (rest_.empty()) order_ = 0;
}

void CycScalar::bind(int order) { order_ = merge_order(order_, order); }

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  c0_ += o.c0_;
  if (!o.rest_.empty()) {
    bind(o.order_);
    if (rest_.size() < o.rest_.size()) rest_.resize(o.rest_.size());
    for (std::size_t k = 0; k < o.rest_.size(); ++k) rest_[k] += o.rest_[k];
    trim();
  }
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  c0_ -= o.c0_;
  if (!o.rest_.empty()) {
    bind(o.order_);
    if (rest_.size() < o.rest_.size()) rest_.resize(o.rest_.size());
    for (std::size_t k = 0; k < o.rest_.size(); ++k) rest_[k] -= o.rest_[k];
    trim();
  }
  return *this;
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  r.c0_ = -r.c0_;
  for (auto& x : r.rest_) x = -x;
  return r;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  if (o.rest_.empty()) {
    if (sgn(o.c0_) == 0) {
      *this = CycScalar();
      return *this;
    }
    c0_ *= o.c0_;
    for (auto& x : rest_) x *= o.c0_;
    return *this;
  }
  if (rest_.empty()) {
    Rat s = c0_;
    *this = o;
    if (s != 1) {
      c0_ *= s;
      for (auto& x : rest_) x *= s;
      trim();
    }
    return *this;
  }
  const int order = merge_order(order_, o.order_);
  std::vector<Rat> prod(rest_.size() + o.rest_.size() + 1);
  auto coeff_a = [&](std::size_t i) -> const Rat& { return i == 0 ? c0_ : rest_[i - 1]; };
  auto coeff_b = [&](std::size_t i) -> const Rat& { return i == 0 ? o.c0_ : o.rest_[i - 1]; };
  for (std::size_t i = 0; i <= rest_.size(); ++i) {
    if (sgn(coeff_a(i)) == 0) continue;
    for (std::size_t j = 0; j <= o.rest_.size(); ++j) prod[i + j] += coeff_a(i) * coeff_b(j);
  }
  *this = from_coords(order, prod);
  return *this;
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw std::domain_error("CycScalar: division by zero");
  if (rest_.empty()) return CycScalar(Rat(1) / c0_);
  // Solve (this * y) = 1 through the multiplication matrix.
  const int n = euler_phi(order_);
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
  CycScalar col = *this;
  const CycScalar zeta = zeta_power(order_, 1);
  for (int j = 0; j < n; ++j) {
    auto c = col.coords(order_);
    for (int i = 0; i < n; ++i) m[i][j] = c[i];
    col *= zeta;
  }
  m[0][n] = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && sgn(m[piv][c]) == 0) ++piv;
    if (piv == n) throw std::domain_error("CycScalar: singular multiplication matrix");
    std::swap(m[piv], m[c]);
    Rat inv = Rat(1) / m[c][c];
    for (int k = c; k <= n; ++k) m[c][k] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == c || sgn(m[r][c]) == 0) continue;
      Rat f = m[r][c];
      for (int k = c; k <= n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  std::vector<Rat> y(n);
  for (int i = 0; i < n; ++i) y[i] = m[i][n];
  return from_coords(order_, y);
}

CycScalar& CycScalar::operator/=(const CycScalar& o) {
  if (o.rest_.empty()) {
    if (sgn(o.c0_) == 0) throw std::domain_error("CycScalar: division by zero");
    c0_ /= o.c0_;
    for (auto& x : rest_) x /= o.c0_;
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  return a.c0_ == b.c0_ && a.rest_ == b.rest_ && (a.rest_.empty() || a.order_ == b.order_);
}

std::string CycScalar::str() const {
  if (rest_.empty()) return rat_str(c0_);
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rat& c, std::size_t k) {
    if (sgn(c) == 0) return;
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rat a = abs(c);
    if (k == 0) {
      os << rat_str(a);
      return;
    }
    if (a != 1) os << rat_str(a) << "*";
    os << "z" << order_;
    if (k > 1) os << "^" << k;
  };
  emit(c0_, 0);
  for (std::size_t k = 0; k < rest_.size(); ++k) emit(rest_[k], k + 1);
  return os.str();
}

CycScalar phase(int j1, int T, int sign) {
  if (T < 1) throw std::invalid_argument("phase: T must be positive");
  if (j1 < 0 || j1 >= T) throw std::out_of_range("phase: j1 outside [0, T)");
  if (sign != 1 && sign != -1) throw std::invalid_argument("phase: sign must be +1 or -1");
  if (j1 == 0) return CycScalar(1);
  return CycScalar::zeta_power(2 * T, static_cast<long>(sign) * j1);
}

}  // namespace twzhu
