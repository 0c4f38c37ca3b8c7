#include <complex>
#include <random>

#include "support.hpp"
#include "twzhu/scalar.hpp"

using namespace twzhu;
using tsupport::q;

namespace {

std::complex<double> to_complex(const CycScalar& c, int order) {
  const std::vector<Rat> co = c.coords(order);
  std::complex<double> z = 0;
  for (std::size_t k = 0; k < co.size(); ++k) z += co[k].get_d() * std::polar(1.0, 2 * M_PI * k / order);
  return z;
}

CycScalar random_element(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  std::vector<Rat> c(euler_phi(order));
  for (auto& x : c) x = q(num(rng), den(rng));
  return CycScalar::from_coords(order, c);
}

}  // namespace

TEST_SUITE("scalar") {
  TEST_CASE("generalized binomial values") {
    CHECK(binomial(q(1, 2), 2) == q(-1, 8));
    CHECK(binomial(q(1, 2), 0) == 1);
    CHECK(binomial(q(1, 2), 3) == q(1, 16));
    for (unsigned k = 0; k < 8; ++k) CHECK(binomial(Rat(-1), k) == ((k % 2) ? -1 : 1));
    CHECK(binomial(Rat(3), 5) == 0);
  }

  TEST_CASE("binomial satisfies Pascal's rule on random rationals") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-30, 30), den(1, 7);
    for (int t = 0; t < 200; ++t) {
      const Rat a = q(num(rng), den(rng));
      const unsigned i = static_cast<unsigned>(t % 9);
      CHECK(binomial(a, i) + binomial(a, i + 1) == binomial(a + 1, i + 1));
    }
  }

  TEST_CASE("integer binomial matches a Pascal triangle") {
    std::vector<std::vector<long>> tri{{1}};
    for (int n = 1; n <= 20; ++n) {
      std::vector<long> row(n + 1, 1);
      for (int k = 1; k < n; ++k) row[k] = tri[n - 1][k - 1] + tri[n - 1][k];
      tri.push_back(row);
    }
    for (int n = 0; n <= 20; ++n) {
      for (int k = 0; k <= n + 2; ++k) {
        const long expect = k <= n ? tri[n][k] : 0;
        CHECK(binomial_int(n, k) == expect);
        CHECK(binomial(Rat(n), k) == expect);
      }
    }
  }

  TEST_CASE("frac is canonical") {
    CHECK(frac(2, 2) == 1);
    CHECK(frac(-6, 4) == q(-3, 2));
    CHECK(rat_str(frac(4, 2)) == "2");
  }

  TEST_CASE("FracExp arithmetic") {
    const FracExp a(3, 2), b = FracExp::integer(1, 2);
    CHECK((a + b).num == 5);
    CHECK((a - b).value() == q(1, 2));
    CHECK(!a.integral());
    CHECK(b.integral());
    CHECK(a.str() == "3/2");
    CHECK(b < a);
  }

  TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(8) == std::vector<long>{1, 0, 0, 0, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    for (int n = 1; n <= 30; ++n) CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
  }

  TEST_CASE("roots of unity") {
    const CycScalar i = CycScalar::zeta_power(4, 1);
    CHECK(i * i == CycScalar(-1));
    for (int n : {3, 4, 5, 6, 8, 12}) {
      CycScalar sum;
      for (int k = 0; k < n; ++k) sum += CycScalar::zeta_power(n, k);
      CHECK(sum.is_zero());
      CHECK(CycScalar::zeta_power(n, n) == CycScalar(1));
      CHECK(CycScalar::zeta_power(n, -1) * CycScalar::zeta_power(n, 1) == CycScalar(1));
    }
  }

  TEST_CASE("phase") {
    CHECK(phase(0, 2, 1) == CycScalar(1));
    CHECK(phase(1, 2, 1) == CycScalar::zeta_power(4, 1));
    CHECK(phase(1, 2, -1) == -CycScalar::zeta_power(4, 1));
    for (int T : {2, 3, 4, 6}) {
      for (int j = 0; j < T; ++j) {
        CycScalar p = 1;
        for (int k = 0; k < 2 * T; ++k) p *= phase(j, T, 1);
        CHECK(p == CycScalar(1));
        CHECK(phase(j, T, 1) * phase(j, T, -1) == CycScalar(1));
      }
    }
    CHECK_THROWS_AS(phase(2, 2, 1), std::out_of_range);
    CHECK_THROWS_AS(phase(0, 2, 0), std::invalid_argument);
  }

  TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(5);
    for (int order : {3, 4, 5, 8, 12}) {
      for (int t = 0; t < 40; ++t) {
        const CycScalar x = random_element(rng, order), y = random_element(rng, order), z = random_element(rng, order);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y) - y == x);
        if (!x.is_zero()) CHECK(x * x.inverse() == CycScalar(1));
        if (!y.is_zero()) CHECK((x / y) * y == x);
        const std::complex<double> lhs = to_complex(x * y, order), rhs = to_complex(x, order) * to_complex(y, order);
        CHECK(std::abs(lhs - rhs) < 1e-9 * (1 + std::abs(rhs)));
      }
    }
  }

  TEST_CASE("rationals mix with any field") {
    const CycScalar i = CycScalar::zeta_power(4, 1);
    CHECK((CycScalar(q(1, 2)) + i).coords(4) == std::vector<Rat>{q(1, 2), 1});
    CHECK(CycScalar(3).is_rational());
    CHECK_THROWS(CycScalar(0).inverse());
  }
}
