#pragma once

#include <functional>
#include <vector>

#include "alexstrat/abelianization.hpp"
#include "alexstrat/cyclotomic.hpp"
#include "alexstrat/laurent.hpp"
#include "alexstrat/presentation.hpp"

namespace alexstrat {

// A character into the roots of unity: generator i maps to zeta_N^{a_i}.
// To factor through the group (not just the free group) the exponent vector
// must annihilate every relator mod N.
struct TorsionCharacter {
  int rank = 0;
  int modulus = 1;            // N >= 1
  std::vector<int> exponents;  // a_i in [0, N)

  TorsionCharacter() = default;
  TorsionCharacter(int rank, int modulus, std::vector<int> exponents);

  bool is_trivial() const;

  // Same character over the least modulus: divide N and all a_i by their gcd.
  TorsionCharacter normalized() const;

  // Order as an element of the character group (modulus of the normal form).
  int order() const;

  bool operator==(const TorsionCharacter&) const = default;

  std::string to_text() const;  // e.g. "N=6 a=(1,1)"
};

// Whether the exponent vector annihilates every relator's exponent vector
// mod N (i.e. the character descends to the presented group).
bool satisfies_relator_constraints(const TorsionCharacter& chi,
                                   const AbelianizationData& ab);

// All characters of the presented group with values in the N-th roots of
// unity, sorted lexicographically by exponent vector (trivial first).
std::vector<TorsionCharacter> torsion_characters(const Presentation& pres, int order);

// Streaming variant for large scans; solutions are produced in an
// unspecified order. `fn` returns false to stop early. Returns false if
// stopped early.
bool for_each_torsion_character(const AbelianizationData& ab, int order,
                                const std::function<bool(const TorsionCharacter&)>& fn);

// Value of a Laurent polynomial under t_i -> zeta_N^{a_i}.
Cyclotomic lp_eval_torsion(const LaurentPoly& p, const TorsionCharacter& chi);

}  // namespace alexstrat
