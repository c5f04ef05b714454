#include "alexstrat/strata.hpp"

#include <algorithm>

#include "alexstrat/errors.hpp"
#include "alexstrat/parallel.hpp"

namespace alexstrat {

StrataContext::StrataContext(Presentation pres)
    : pres_(std::move(pres)), matrix_(alexander_matrix(pres_)), ab_(abelianization(pres_)) {}

CycMat StrataContext::evaluate(const TorsionCharacter& chi) const {
  if (!satisfies_relator_constraints(chi, ab_))
    throw InputError("character " + chi.to_text() +
                     " does not satisfy the relator constraints");
  const std::size_t r = static_cast<std::size_t>(pres_.rank());
  const std::size_t s = static_cast<std::size_t>(pres_.relator_count());
  CycMat m(r, s, Cyclotomic::zero(chi.modulus));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < s; ++j)
      m(i, j) = lp_eval_torsion(matrix_.entry(static_cast<int>(i), static_cast<int>(j)), chi);
  return m;
}

int StrataContext::matrix_rank_at(const TorsionCharacter& chi) const {
  return rank_cyclotomic(evaluate(chi));
}

StratumReport StrataContext::report(const TorsionCharacter& chi) const {
  StratumReport rep;
  rep.character = chi;
  rep.matrix_rank = matrix_rank_at(chi);
  const int r = rank();
  rep.dim_c1 = r - rep.matrix_rank;
  rep.dim_h1 = chi.is_trivial() ? ab_.betti : rep.dim_c1 - 1;
  rep.depth = std::max(0, r - rep.matrix_rank - 1);
  return rep;
}

bool StrataContext::in_v(const TorsionCharacter& chi, int stratum) const {
  if (stratum < 0) throw InputError("stratum index must be >= 0");
  return matrix_rank_at(chi) < rank() - stratum;
}

bool StrataContext::in_w(const TorsionCharacter& chi, int stratum) const {
  if (stratum < 0) throw InputError("stratum index must be >= 0");
  if (chi.is_trivial()) return stratum <= ab_.betti;
  return matrix_rank_at(chi) < rank() - stratum;
}

std::vector<TorsionCharacter> StrataContext::scan(int stratum, int order, bool w,
                                                  unsigned threads) const {
  if (order < 1) throw InputError("character order bound must be >= 1");
  std::vector<TorsionCharacter> all;
  for_each_torsion_character(ab_, order, [&](const TorsionCharacter& chi) {
    all.push_back(chi);
    return true;
  });
  std::vector<char> member(all.size(), 0);
  parallel_for(all.size(), threads, [&](std::size_t k) {
    member[k] = (w ? in_w(all[k], stratum) : in_v(all[k], stratum)) ? 1 : 0;
  });
  std::vector<TorsionCharacter> out;
  for (std::size_t k = 0; k < all.size(); ++k)
    if (member[k]) out.push_back(all[k].normalized());
  std::sort(out.begin(), out.end(),
            [](const TorsionCharacter& x, const TorsionCharacter& y) {
              if (x.modulus != y.modulus) return x.modulus < y.modulus;
              return x.exponents < y.exponents;
            });
  return out;
}

std::vector<TorsionCharacter> StrataContext::scan_v(int stratum, int order,
                                                    unsigned threads) const {
  return scan(stratum, order, false, threads);
}

std::vector<TorsionCharacter> StrataContext::scan_w(int stratum, int order,
                                                    unsigned threads) const {
  return scan(stratum, order, true, threads);
}

CycMat evaluate_matrix(const AlexanderMatrix& m, const TorsionCharacter& chi) {
  StrataContext ctx(m.presentation);
  return ctx.evaluate(chi);
}

StratumReport stratum_report(const Presentation& pres, const TorsionCharacter& chi) {
  return StrataContext(pres).report(chi);
}

bool v_membership(const Presentation& pres, const TorsionCharacter& chi, int stratum) {
  return StrataContext(pres).in_v(chi, stratum);
}

bool w_membership(const Presentation& pres, const TorsionCharacter& chi, int stratum) {
  return StrataContext(pres).in_w(chi, stratum);
}

std::vector<TorsionCharacter> torsion_scan(const Presentation& pres, int stratum,
                                           int order, bool w_loci, unsigned threads) {
  StrataContext ctx(pres);
  return w_loci ? ctx.scan_w(stratum, order, threads) : ctx.scan_v(stratum, order, threads);
}

}  // namespace alexstrat
