#pragma once

#include <vector>

#include "alexstrat/presentation.hpp"
#include "alexstrat/snf.hpp"

namespace alexstrat {

// Structure of H_1 = Z^r / im(A), where column j of the r x s matrix A is the
// exponent vector of relator j.
struct AbelianizationData {
  IntMat relator_exponents;  // A, r x s
  SmithDecomposition snf;    // of A
  int betti = 0;             // d = rank of the free part
  std::vector<Int> torsion;  // invariant factors > 1, in chain order

  int rank() const { return static_cast<int>(relator_exponents.rows()); }
};

AbelianizationData abelianization(const Presentation& pres);

}  // namespace alexstrat
