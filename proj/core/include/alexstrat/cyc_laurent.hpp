#pragma once

#include <optional>
#include <span>
#include <string>

#include "alexstrat/cyclotomic.hpp"
#include "alexstrat/laurent.hpp"

namespace alexstrat {

// Sparse Laurent polynomial over Q(zeta_N). Same canonical term order as
// LaurentPoly.
class CycLaurent {
 public:
  using TermMap = std::map<Exponents, Cyclotomic, GradedLexLess>;

  CycLaurent(int rank, int modulus) : rank_(rank), modulus_(modulus) {}

  static CycLaurent zero(int rank, int modulus) { return CycLaurent(rank, modulus); }
  static CycLaurent monomial(int rank, int modulus, Exponents e, Cyclotomic c);

  // Reinterpret an integer Laurent polynomial over Q(zeta_N).
  static CycLaurent lift(const LaurentPoly& p, int modulus);

  int rank() const { return rank_; }
  int modulus() const { return modulus_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(const Exponents& e, const Cyclotomic& c);

  CycLaurent operator-() const;
  friend CycLaurent operator+(const CycLaurent& a, const CycLaurent& b);
  friend CycLaurent operator-(const CycLaurent& a, const CycLaurent& b);
  friend CycLaurent operator*(const CycLaurent& a, const CycLaurent& b);

  bool operator==(const CycLaurent&) const = default;

  std::string to_string(std::span<const std::string> names) const;

 private:
  int rank_;
  int modulus_;
  TermMap terms_;
};

// Exact division in the Laurent ring over Q(zeta_N): returns p/q when q
// divides p (q must be nonzero), std::nullopt otherwise. Laurent units are
// handled by shifting both operands into the polynomial subring; the
// quotient there is found by single-divisor division along the graded term
// order, whose remainder vanishes iff the division is exact.
std::optional<CycLaurent> divide_exact(const CycLaurent& p, const CycLaurent& q);

// Exact division over Z: succeeds iff q divides p within the integer Laurent
// ring. Runs the field division over Q (modulus 1) and checks integrality of
// the quotient, which is unique since the ring is a domain.
std::optional<LaurentPoly> lp_divide_exact(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace alexstrat
