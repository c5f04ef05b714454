#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alexstrat/cyc_laurent.hpp"
#include "alexstrat/fox.hpp"
#include "alexstrat/presentation.hpp"

namespace alexstrat {

// Syntactic form "every relator is a product of conjugates of one base
// relator": S_i = prod_j u_{i,j} R u_{i,j}^{-1}.
struct CommonRelatorForm {
  Word base;                                   // R
  std::vector<std::vector<Word>> conjugators;  // [relator][factor]
};

// Bounded syntactic detection. Candidate bases are the conjugated-position
// subwords of the first relator (hint tried first, then longest candidates
// first); each relator is decomposed by backtracking over conjugator
// prefixes with a strict length-decrease requirement and a global node
// budget. Conjugators with nontrivial abelianization are accepted only when
// the base relator abelianizes to zero, which is exactly the condition under
// which the derivative of a conjugate is a monomial multiple of the base
// derivative. Returns nullopt when no decomposition is found; the scan is a
// sound under-approximation, never a false positive.
std::optional<CommonRelatorForm> detect_common_relator_form(
    const Presentation& pres, const std::optional<Word>& base_hint = std::nullopt);

// The multiplier polynomials p_i with D(S_i) = p_i * D(R):
//   p_i = sum_j t^{(j-1) ab(R) + ab(u_{i,j})}.
// The identity is verified entrywise against the Fox gradients and a
// logic_error is thrown on mismatch (it is a checked invariant, not an
// assumption).
std::vector<LaurentPoly> pencil_polynomials(const Presentation& pres,
                                            const CommonRelatorForm& form);

// A binomial t^lambda - u with u a root of unity.
struct Binomial {
  Exponents exponent;  // lambda, sign-normalized: first nonzero entry > 0
  int unit_order;      // order of u
  int unit_power;      // u = zeta_{unit_order}^{unit_power}, gcd(power, order) = 1

  bool operator==(const Binomial&) const = default;
};

Cyclotomic binomial_unit(const Binomial& b, int modulus);
CycLaurent binomial_poly(const Binomial& b, int rank, int modulus);

struct BinomialSearchResult {
  std::vector<Binomial> divisors;
  long candidates_tried = 0;
};

// Exhaustive trial division over the bounded candidate set: exponents from
// the support difference set plus the max-norm box |lambda|_inf <= max_degree
// (sign-normalized, lambda != 0), units of every order dividing max_order.
BinomialSearchResult binomial_factor_search(const LaurentPoly& p, int max_degree,
                                            int max_order);

// Whether p is a monomial times binomials, all found within the bounds, by
// repeated exact division (candidates recomputed from each cofactor).
bool fully_binomial_within_bounds(const LaurentPoly& p, int max_degree, int max_order);

enum class KahlerStatus { Obstructed, Consistent, Inconclusive };

std::string to_string(KahlerStatus s);

struct PencilReport {
  LaurentPoly pencil;
  int support_variables = 0;        // variables with non-constant exponent
  std::vector<Binomial> divisors;   // binomial factors within bounds
  bool fully_binomial = false;
};

struct ObstructionOptions {
  int max_degree = 2;      // box bound on binomial exponents
  int max_order = 6;       // unit order bound
  int cert_order = 0;      // torsion certificate order bound; 0 = max_order
  int cert_threshold = 3;  // certificates required for an obstruction
  std::optional<Word> base_hint;
};

// Verdict semantics, all relative to the search bounds:
//  - Consistent: every pencil polynomial fully factors into a monomial times
//    binomials within bounds. No obstruction from this criterion.
//  - Obstructed: some pencil polynomial with essential support in >= 3
//    variables has no binomial factor within bounds, and at least
//    cert_threshold torsion characters of bounded order vanish on all
//    pencil polynomials (certifying a positive-dimensional stratum not cut
//    out by binomials within bounds).
//  - Inconclusive: no common-relator form detected, or the factorization
//    evidence is mixed.
struct ObstructionReport {
  KahlerStatus status = KahlerStatus::Inconclusive;
  std::optional<CommonRelatorForm> form;
  std::vector<PencilReport> pencils;
  ObstructionOptions options;  // bounds actually used (cert_order resolved)
  int certificates = 0;        // torsion points found (early exit at threshold)
  std::string summary;
};

ObstructionReport kahler_obstruction_report(const Presentation& pres,
                                            const ObstructionOptions& options = {});

}  // namespace alexstrat
