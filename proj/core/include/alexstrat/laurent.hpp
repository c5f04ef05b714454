#pragma once

#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "alexstrat/numeric.hpp"

namespace alexstrat {

// Multi-exponent of a Laurent monomial t_1^{e_1} ... t_r^{e_r}.
using Exponents = std::vector<int>;

// Graded order: lower total degree first; within a degree, the monomial with
// the larger leading exponent entries comes first (so t_1 precedes t_2).
// This is a monomial order: translation by a fixed exponent preserves it.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return a > b;  // lexicographically larger entries sort earlier
  }
};

// Sparse Laurent polynomial over Z in `rank` commuting variables. Terms are
// kept in the canonical graded order; zero coefficients are never stored.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponents, Int, GradedLexLess>;

  explicit LaurentPoly(int rank = 0) : rank_(rank) {}

  static LaurentPoly zero(int rank) { return LaurentPoly(rank); }
  static LaurentPoly constant(int rank, Int c);
  static LaurentPoly monomial(int rank, Exponents e, Int c = Int(1));
  static LaurentPoly variable(int rank, int index);  // t_index, 1-based

  int rank() const { return rank_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }

  // Coefficient of the given exponent (zero if absent).
  Int coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const Int& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  bool operator==(const LaurentPoly&) const = default;

  // Canonical text form, e.g. "1 - t_x + t_x*t_y". `names` holds the full
  // display name of each variable; exponents render as "^k" (k may be
  // negative).
  std::string to_string(std::span<const std::string> names) const;

 private:
  int rank_;
  TermMap terms_;
};

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_neg(const LaurentPoly& a);

}  // namespace alexstrat
