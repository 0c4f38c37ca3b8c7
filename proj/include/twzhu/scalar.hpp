#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace twzhu {

using Rat = mpq_class;

/// n/d in lowest terms.
inline Rat frac(long n, long d) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

/// Generalized binomial coefficient alpha (alpha-1) ... (alpha-i+1) / i!.
Rat binomial(const Rat& alpha, unsigned i);

/// Integer binomial coefficient C(n, k) for n >= 0.
Rat binomial_int(long n, unsigned k);

/// An element of (1/T)Z. The denominator is always the global order T;
/// arithmetic between exponents of different T is a logic error.
struct FracExp {
  std::int64_t num = 0;
  int den = 1;

  FracExp() = default;
  FracExp(std::int64_t n, int T) : num(n), den(T) {}
  static FracExp integer(std::int64_t n, int T) { return {n * T, T}; }

  Rat value() const { return frac(num, den); }
  bool integral() const { return num % den == 0; }

  FracExp operator+(const FracExp& o) const;
  FracExp operator-(const FracExp& o) const;
  FracExp operator-() const { return {-num, den}; }
  bool operator==(const FracExp& o) const = default;
  auto operator<=>(const FracExp& o) const { return num <=> o.num; }

  std::string str() const;
};

/// Exact element of the cyclotomic field Q(zeta_n), n = 2T, in power-basis
/// coordinates reduced modulo the n-th cyclotomic polynomial.
///
/// The first coordinate is stored inline, so rationals never touch the heap
/// beyond GMP itself. Trailing zero coordinates are trimmed, which makes the
/// representation canonical; a scalar with no irrational part carries no field
/// and combines freely with scalars of any order.
class CycScalar {
 public:
  CycScalar() = default;
  CycScalar(long v) : c0_(v) {}  // NOLINT(google-explicit-constructor)
  CycScalar(const Rat& q) : c0_(q) {}  // NOLINT(google-explicit-constructor)

  /// zeta_order^k.
  static CycScalar zeta_power(int order, long k);
  /// Builds a scalar from full power-basis coordinates.
  static CycScalar from_coords(int order, const std::vector<Rat>& coords);

  int order() const { return order_; }
  bool is_zero() const { return rest_.empty() && sgn(c0_) == 0; }
  bool is_rational() const { return rest_.empty(); }
  bool is_one() const { return rest_.empty() && c0_ == 1; }
  const Rat& rational() const { return c0_; }

  /// Coordinates over 1, zeta, ..., zeta^(phi(order)-1), zero-padded.
  std::vector<Rat> coords(int order) const;

  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);
  CycScalar& operator/=(const CycScalar& o);
  CycScalar operator-() const;
  CycScalar inverse() const;

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
  friend CycScalar operator/(CycScalar a, const CycScalar& b) { return a /= b; }
  friend bool operator==(const CycScalar& a, const CycScalar& b);

  std::string str() const;

 private:
  void bind(int order);
  void trim();

  int order_ = 0;
  Rat c0_;
  std::vector<Rat> rest_;
};

/// Euler phi.
int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<long>& cyclotomic_polynomial(int n);

/// e^{sign * j1 * pi i / T} = zeta_{2T}^{sign * j1}.
CycScalar phase(int j1, int T, int sign);

std::string rat_str(const Rat& q);

}  // namespace twzhu
