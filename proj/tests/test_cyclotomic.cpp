#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "alexstrat/cyclotomic.hpp"

using namespace alexstrat;

namespace {

// Multiply two integer polynomials in ascending-coefficient form.
std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST_CASE("totient") {
  CHECK(totient(1) == 1);
  CHECK(totient(2) == 1);
  CHECK(totient(6) == 2);
  CHECK(totient(12) == 4);
  CHECK(totient(30) == 8);
}

TEST_CASE("cyclotomic polynomials: known small cases") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Int>{Int(-1), Int(1)});
  CHECK(cyclotomic_polynomial(2) == std::vector<Int>{Int(1), Int(1)});
  CHECK(cyclotomic_polynomial(3) == std::vector<Int>{Int(1), Int(1), Int(1)});
  CHECK(cyclotomic_polynomial(4) == std::vector<Int>{Int(1), Int(0), Int(1)});
  CHECK(cyclotomic_polynomial(6) == std::vector<Int>{Int(1), Int(-1), Int(1)});
  CHECK(cyclotomic_polynomial(12) ==
        std::vector<Int>{Int(1), Int(0), Int(-1), Int(0), Int(1)});
}

TEST_CASE("product of cyclotomic polynomials over divisors is x^N - 1") {
  for (int n = 1; n <= 30; ++n) {
    std::vector<Int> prod{Int(1)};
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
    REQUIRE(prod.size() == static_cast<std::size_t>(n + 1));
    CHECK(prod.front() == -1);
    CHECK(prod.back() == 1);
    for (int k = 1; k < n; ++k) CHECK(prod[static_cast<std::size_t>(k)] == 0);
    // Degree bookkeeping: sum of totients of divisors equals N.
    int deg = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) deg += totient(d);
    CHECK(deg == n);
  }
}

TEST_CASE("roots of unity: exponent arithmetic and coordinates") {
  const Cyclotomic z = Cyclotomic::root_of_unity(6, 1);
  CHECK(z.modulus() == 6);
  CHECK(z.coords() == std::vector<Rational>{Rational(0), Rational(1)});

  // zeta_6^2 = zeta_6 - 1 in the power basis (minimal polynomial x^2 - x + 1).
  CHECK(Cyclotomic::root_of_unity(6, 2).coords() ==
        std::vector<Rational>{Rational(-1), Rational(1)});
  // zeta_6^3 = -1.
  CHECK(Cyclotomic::root_of_unity(6, 3) == -Cyclotomic::one(6));
  // zeta_6^5 = 1 - zeta_6.
  CHECK(Cyclotomic::root_of_unity(6, 5).coords() ==
        std::vector<Rational>{Rational(1), Rational(-1)});

  // Exponents add; k is taken mod N (including negative k).
  for (int a = -7; a <= 7; ++a)
    for (int b = -7; b <= 7; ++b)
      CHECK(Cyclotomic::root_of_unity(6, a) * Cyclotomic::root_of_unity(6, b) ==
            Cyclotomic::root_of_unity(6, a + b));

  CHECK(Cyclotomic::root_of_unity(12, 12) == Cyclotomic::one(12));
  CHECK(Cyclotomic::root_of_unity(1, 0) == Cyclotomic::one(1));
}

TEST_CASE("vanishing sums of roots of unity") {
  // 1 + zeta_3 + zeta_3^2 = 0.
  Cyclotomic s = Cyclotomic::zero(3);
  for (int k = 0; k < 3; ++k) s += Cyclotomic::root_of_unity(3, k);
  CHECK(s.is_zero());

  // Full sum over mu_N vanishes for N > 1.
  for (int n = 2; n <= 12; ++n) {
    Cyclotomic t = Cyclotomic::zero(n);
    for (int k = 0; k < n; ++k) t += Cyclotomic::root_of_unity(n, k);
    CHECK(t.is_zero());
  }
}

TEST_CASE("field arithmetic: inverses and rational embedding") {
  std::mt19937 rng(2718);
  std::uniform_int_distribution<int> k(0, 11);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    Cyclotomic x = Cyclotomic::from_rational(12, Rational(c(rng))) +
                   Cyclotomic::root_of_unity(12, k(rng)) *
                       Cyclotomic::from_rational(12, Rational(c(rng), 2));
    if (x.is_zero()) continue;
    CHECK(x * x.inverse() == Cyclotomic::one(12));
  }
  CHECK_THROWS_AS(Cyclotomic::zero(6).inverse(), std::domain_error);

  const Cyclotomic half = Cyclotomic::from_rational(4, Rational(1, 2));
  CHECK(half + half == Cyclotomic::one(4));
  CHECK(half.inverse() == Cyclotomic::from_rational(4, Rational(2)));
}

TEST_CASE("operations on mismatched moduli are rejected") {
  CHECK_THROWS_AS(Cyclotomic::one(4) + Cyclotomic::one(6), std::logic_error);
  CHECK_THROWS_AS(Cyclotomic::one(4) * Cyclotomic::one(6), std::logic_error);
}

TEST_CASE("rendering cyclotomic numbers") {
  CHECK(Cyclotomic::zero(6).to_string() == "0");
  CHECK(Cyclotomic::one(6).to_string() == "1");
  CHECK(Cyclotomic::root_of_unity(6, 1).to_string() == "z");
  CHECK(Cyclotomic::root_of_unity(6, 2).to_string() == "-1 + z");
}

TEST_CASE("exact rank over a cyclotomic field") {
  // A 2x2 matrix that drops rank exactly at a primitive 6th root.
  const Cyclotomic z = Cyclotomic::root_of_unity(6, 1);
  CycMat m(2, 2);
  m(0, 0) = Cyclotomic::one(6);
  m(0, 1) = z;
  m(1, 0) = z * z;  // row 1 = z^2 * row 0 => singular... only if (1,1) = z^3
  m(1, 1) = z * z * z;
  CHECK(rank_cyclotomic(m) == 1);

  m(1, 1) = Cyclotomic::one(6);
  CHECK(rank_cyclotomic(m) == 2);

  CycMat zero(3, 2, Cyclotomic::zero(6));
  CHECK(rank_cyclotomic(zero) == 0);

  // 1 + z^2 + z^4 = 0 makes this column vanish identically.
  CycMat col(3, 1, Cyclotomic::zero(6));
  col(0, 0) = Cyclotomic::one(6);
  col(1, 0) = Cyclotomic::root_of_unity(6, 2);
  col(2, 0) = Cyclotomic::root_of_unity(6, 4);
  Cyclotomic sum = col(0, 0) + col(1, 0) + col(2, 0);
  CHECK(sum.is_zero());
  CHECK(rank_cyclotomic(col) == 1);
}

TEST_CASE("rank over the rationals is the modulus-1 case") {
  CycMat m(2, 3, Cyclotomic::zero(1));
  m(0, 0) = Cyclotomic::from_rational(1, Rational(2));
  m(0, 1) = Cyclotomic::from_rational(1, Rational(4));
  m(0, 2) = Cyclotomic::from_rational(1, Rational(6));
  m(1, 0) = Cyclotomic::from_rational(1, Rational(1));
  m(1, 1) = Cyclotomic::from_rational(1, Rational(2));
  m(1, 2) = Cyclotomic::from_rational(1, Rational(3));
  CHECK(rank_cyclotomic(m) == 1);
}
