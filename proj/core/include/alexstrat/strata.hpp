#pragma once

#include <vector>

#include "alexstrat/abelianization.hpp"
#include "alexstrat/character.hpp"
#include "alexstrat/fox.hpp"

namespace alexstrat {

// Local data of the stratification at one character chi: the i-th stratum
// V_i is the locus where rank M(chi) < r - i, so chi lies in V_1,...,V_depth
// with depth = max(0, r - rank - 1).
struct StratumReport {
  TorsionCharacter character;  // as given
  int matrix_rank = 0;         // rank of M(chi) over Q(zeta_N)
  int dim_c1 = 0;              // r - rank: crossed homomorphisms
  int dim_h1 = 0;              // dim_c1 - 1 off the trivial character, else d
  int depth = 0;               // largest i >= 1 with chi in V_i, 0 if none
};

// Caches the Alexander matrix and abelianization of one presentation so a
// scan over many characters shares them. Evaluation at distinct characters
// is independent; the scan methods fan out via parallel_for.
class StrataContext {
 public:
  explicit StrataContext(Presentation pres);

  const Presentation& presentation() const { return pres_; }
  const AlexanderMatrix& matrix() const { return matrix_; }
  const AbelianizationData& ab() const { return ab_; }
  int rank() const { return pres_.rank(); }
  int betti() const { return ab_.betti; }

  // M(chi): entries evaluated at t_i -> zeta_N^{a_i}. Throws InputError if
  // chi does not satisfy the relator constraints.
  CycMat evaluate(const TorsionCharacter& chi) const;

  int matrix_rank_at(const TorsionCharacter& chi) const;
  StratumReport report(const TorsionCharacter& chi) const;

  bool in_v(const TorsionCharacter& chi, int stratum) const;
  // W_i agrees with V_i off the trivial character; at the trivial character
  // membership holds iff i <= d.
  bool in_w(const TorsionCharacter& chi, int stratum) const;

  std::vector<TorsionCharacter> scan_v(int stratum, int order, unsigned threads = 1) const;
  std::vector<TorsionCharacter> scan_w(int stratum, int order, unsigned threads = 1) const;

 private:
  std::vector<TorsionCharacter> scan(int stratum, int order, bool w, unsigned threads) const;

  Presentation pres_;
  AlexanderMatrix matrix_;
  AbelianizationData ab_;
};

CycMat evaluate_matrix(const AlexanderMatrix& m, const TorsionCharacter& chi);

StratumReport stratum_report(const Presentation& pres, const TorsionCharacter& chi);

bool v_membership(const Presentation& pres, const TorsionCharacter& chi, int stratum);
bool w_membership(const Presentation& pres, const TorsionCharacter& chi, int stratum);

// Characters of order dividing `order` lying in V_stratum (or W_stratum),
// reported in normalized form, sorted by (modulus, exponents).
std::vector<TorsionCharacter> torsion_scan(const Presentation& pres, int stratum,
                                           int order, bool w_loci = false,
                                           unsigned threads = 1);

}  // namespace alexstrat
