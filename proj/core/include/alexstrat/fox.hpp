#pragma once

#include <span>
#include <vector>

#include "alexstrat/abelianization.hpp"
#include "alexstrat/laurent.hpp"
#include "alexstrat/presentation.hpp"

namespace alexstrat {

// Free derivatives, abelianized: the letter-by-letter expansion of
//   D_i(x_j) = delta_ij,  D_i(fg) = D_i(f) + ab(f) D_i(g),
// which forces D_i(x_j^{-1}) = -t_j^{-1} delta_ij. Entries live in the
// Laurent ring on the free generators; quotient relations are applied only
// at evaluation time (or in the display-only abelianized view).
LaurentPoly fox_partial(const Word& w, int gen_index, int rank);
std::vector<LaurentPoly> fox_gradient(const Word& w, int rank);

// Same accumulation over a raw letter sequence; the result is invariant
// under free reduction of the sequence.
std::vector<LaurentPoly> fox_gradient_letters(std::span<const int> letters, int rank);

// The r x s matrix M with M[i][j] = D_i(R_j).
struct AlexanderMatrix {
  Presentation presentation;
  std::vector<std::vector<LaurentPoly>> entries;  // [generator][relator]

  int rank() const { return presentation.rank(); }
  int relator_count() const { return presentation.relator_count(); }
  const LaurentPoly& entry(int i, int j) const {
    return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
};

AlexanderMatrix alexander_matrix(const Presentation& pres);

// Display names "t_<generator>" for rendering matrix entries.
std::vector<std::string> variable_names(const Presentation& pres);

// Display-only quotient view: exponents are pushed through the free part of
// the abelianization (torsion is dropped), giving entries in d variables.
struct AbelianizedView {
  std::vector<std::string> names;                 // d display variables
  std::vector<std::vector<LaurentPoly>> entries;  // same shape as the matrix
};

AbelianizedView abelianized_view(const AlexanderMatrix& m, const AbelianizationData& ab);

}  // namespace alexstrat
