#pragma once

#include <map>
#include <vector>

#include "alexstrat/strata.hpp"

namespace alexstrat {

// Finite abelian group presented as a product of cyclic factors Z/d_i
// (d_i >= 1; factors of order 1 are legal and contribute nothing).
struct FiniteAbelianGroup {
  std::vector<int> orders;

  long size() const;
  int exponent() const;  // lcm of the orders (1 for the trivial group)
  int factors() const { return static_cast<int>(orders.size()); }

  bool operator==(const FiniteAbelianGroup&) const = default;
};

// A surjection from the presented group onto G, given by the images of the
// generators in cyclic coordinates.
struct Epimorphism {
  Presentation pres;
  FiniteAbelianGroup group;
  std::vector<std::vector<int>> images;  // [generator][factor]
};

// Checks that the images kill every relator (homomorphism) and generate G
// (surjectivity, via the Smith form of the images augmented by diag(d)).
// Throws InputError otherwise.
Epimorphism validate_epimorphism(const Presentation& pres, FiniteAbelianGroup group,
                                 std::vector<std::vector<int>> images);

// A character of G: factor k maps to zeta_{d_k}^{c_k}.
struct GroupCharacter {
  FiniteAbelianGroup group;
  std::vector<int> exponents;  // c_k in [0, d_k)

  bool is_trivial() const;
  bool operator==(const GroupCharacter&) const = default;
};

// All |G| characters, trivial first, then lexicographic in the exponents.
std::vector<GroupCharacter> characters_of(const FiniteAbelianGroup& g);

// chi composed with the epimorphism: a character of the presented group of
// order dividing exponent(G), with a_i = sum_k (N/d_k) c_k images[i][k].
TorsionCharacter pullback_character(const Epimorphism& epi, const GroupCharacter& chi);

// First Betti number of the cover attached to the epimorphism, by summing
// stratum depths of the pulled-back characters:
//   b_1 = d + sum_{chi != 1} max(0, (r-1) - rank M(pullback(chi))).
// An equivalent accumulation over stratum membership counts is computed
// alongside and must agree exactly (logic_error otherwise).
long betti_cover_formula(const StrataContext& ctx, const Epimorphism& epi,
                         unsigned threads = 1);

// Elements of the integer group ring Z[G], in cyclic coordinates.
using GroupRingElem = std::map<std::vector<int>, Int>;

// Blow up a matrix over Z[G] to integer blocks: the block of a ring element
// sum c_g [g] has (h, h') entry c_{h' - h}, with G enumerated odometer-style.
IntMat group_ring_expand(const std::vector<std::vector<GroupRingElem>>& entries,
                         const FiniteAbelianGroup& g);

// Independent combinatorial computation of the same Betti number: the chain
// complex of the cover has second boundary map the expanded Alexander matrix
// over Z[G], and
//   b_1 = (r - 1)|G| + 1 - rank(delta_2).
// Internal assertions check delta_1 . delta_2 = 0 and that delta_1 has
// nullity (r-1)|G| + 1. Shares no rank computation with the formula path:
// ranks here are integer (fraction-free), there cyclotomic.
long betti_cover_oracle(const AlexanderMatrix& m, const Epimorphism& epi);

}  // namespace alexstrat
