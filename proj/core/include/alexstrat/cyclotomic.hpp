#pragma once

#include <string>
#include <vector>

#include "alexstrat/matrix.hpp"
#include "alexstrat/numeric.hpp"

namespace alexstrat {

// Coefficients of the N-th cyclotomic polynomial, ascending degree, monic.
// Computed by dividing x^N - 1 by the cyclotomic polynomials of the proper
// divisors of N; exact over Z.
std::vector<Int> cyclotomic_polynomial(int n);

// Euler's totient; the degree of cyclotomic_polynomial(n).
int totient(int n);

// An element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}
// of Q[x]/(Phi_N). Equality of coordinate vectors is equality in the field.
// Binary operations require matching moduli and throw std::logic_error
// otherwise; there is no implicit embedding between different N.
class Cyclotomic {
 public:
  Cyclotomic() : modulus_(1), coords_(1, Rational(0)) {}

  static Cyclotomic zero(int modulus);
  static Cyclotomic one(int modulus);
  static Cyclotomic from_rational(int modulus, Rational value);
  // zeta_N^k (k taken mod N).
  static Cyclotomic root_of_unity(int modulus, long k);

  int modulus() const { return modulus_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_one() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  // Multiplicative inverse; throws std::domain_error on zero.
  Cyclotomic inverse() const;

  bool operator==(const Cyclotomic&) const = default;

  // Human-readable form like "1 - z + 1/2*z^2" with z = zeta_N.
  std::string to_string() const;

 private:
  Cyclotomic(int modulus, std::vector<Rational> coords)
      : modulus_(modulus), coords_(std::move(coords)) {}

  int modulus_;
  std::vector<Rational> coords_;
};

using CycMat = Mat<Cyclotomic>;

// Rank over Q(zeta_N) by exact Gaussian elimination.
int rank_cyclotomic(CycMat m);

}  // namespace alexstrat
