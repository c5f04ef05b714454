#include "alexstrat/abelianization.hpp"

namespace alexstrat {

AbelianizationData abelianization(const Presentation& pres) {
  const int r = pres.rank();
  const int s = pres.relator_count();
  IntMat a(static_cast<std::size_t>(r), static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) {
    auto e = abelianize_word(pres.relators[static_cast<std::size_t>(j)], r);
    for (int i = 0; i < r; ++i)
      a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e[static_cast<std::size_t>(i)];
  }
  AbelianizationData out{a, smith_normal_form(a), 0, {}};
  out.betti = r - out.snf.diag_rank();
  for (const Int& f : out.snf.invariant_factors())
    if (f > 1) out.torsion.push_back(f);
  return out;
}

}  // namespace alexstrat
