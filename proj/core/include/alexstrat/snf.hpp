#pragma once

#include <vector>

#include "alexstrat/matrix.hpp"

namespace alexstrat {

// Smith decomposition U*A*V = D with U, V unimodular and D diagonal,
// d_1 | d_2 | ... | d_k >= 0.
struct SmithDecomposition {
  IntMat u;  // rows x rows
  IntMat d;  // rows x cols
  IntMat v;  // cols x cols

  // Number of nonzero diagonal entries (the rank of A).
  int diag_rank() const;

  // The nonzero diagonal entries, in chain order.
  std::vector<Int> invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntMat& a);

}  // namespace alexstrat
