#include "alexstrat/kahler.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "alexstrat/character.hpp"
#include "alexstrat/errors.hpp"

namespace alexstrat {

namespace {

bool is_zero_vector(const std::vector<int>& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

// Backtracking decomposition of s into factors u R u^{-1}. Conjugator
// candidates are prefixes of the remaining word; each peeled factor must
// strictly shorten it. When `trivial_conjugators_only` is set (base does not
// abelianize to zero) the only admissible factor is the bare base.
bool decompose(const Word& s, const Word& base, bool trivial_conjugators_only,
               std::vector<Word>& out, long& budget) {
  if (--budget < 0) return false;
  if (s.empty()) return true;
  const auto& letters = s.letters();
  const std::size_t max_prefix = trivial_conjugators_only ? 0 : letters.size() / 2;
  for (std::size_t l = 0; l <= max_prefix; ++l) {
    const Word u = free_reduce(std::span<const int>(letters.data(), l));
    const Word factor = word_multiply(word_multiply(u, base), u.inverse());
    const Word rest = word_multiply(factor.inverse(), s);
    if (rest.size() >= s.size()) continue;
    out.push_back(u);
    if (decompose(rest, base, trivial_conjugators_only, out, budget)) return true;
    out.pop_back();
  }
  return false;
}

// Subwords of the first relator that occur in conjugated position: for a
// split w = a . m . b with |a| = |b|, the middle m is a candidate when
// b = a^{-1} letter by letter.
std::vector<Word> candidate_bases(const Presentation& pres,
                                  const std::optional<Word>& hint) {
  std::vector<Word> cands;
  if (hint && !hint->empty()) cands.push_back(*hint);
  if (pres.relators.empty()) return cands;
  const auto& letters = pres.relators.front().letters();
  const std::size_t n = letters.size();
  std::vector<Word> found;
  for (std::size_t l = 0; 2 * l < n; ++l) {
    for (std::size_t m = 1; l + m + l <= n; ++m) {
      // The prefix u must reappear inverted directly after the candidate,
      // so that the leading factor of the relator reads u . m . u^{-1}.
      bool mirrored = true;
      for (std::size_t q = 0; q < l && mirrored; ++q)
        mirrored = letters[l + m + q] == -letters[l - 1 - q];
      if (!mirrored) continue;
      found.push_back(free_reduce(std::span<const int>(letters.data() + l, m)));
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const Word& a, const Word& b) {
    return a.size() > b.size();
  });
  for (const Word& w : found)
    if (std::find(cands.begin(), cands.end(), w) == cands.end()) cands.push_back(w);
  return cands;
}

int essential_support(const LaurentPoly& p) {
  if (p.is_zero()) return 0;
  const std::size_t r = static_cast<std::size_t>(p.rank());
  Exponents lo(r, 0), hi(r, 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < r; ++i) {
      lo[i] = first ? e[i] : std::min(lo[i], e[i]);
      hi[i] = first ? e[i] : std::max(hi[i], e[i]);
    }
    first = false;
  }
  int count = 0;
  for (std::size_t i = 0; i < r; ++i)
    if (lo[i] != hi[i]) ++count;
  return count;
}

Exponents sign_normalized(Exponents e) {
  for (int v : e) {
    if (v > 0) break;
    if (v < 0) {
      for (int& x : e) x = -x;
      break;
    }
  }
  return e;
}

// Candidate exponents for one polynomial: support differences plus the box.
std::set<Exponents> candidate_exponents(const CycLaurent& p, int max_degree) {
  std::set<Exponents> out;
  const std::size_t r = static_cast<std::size_t>(p.rank());
  for (const auto& [e1, c1] : p.terms())
    for (const auto& [e2, c2] : p.terms()) {
      if (e1 == e2) continue;
      Exponents diff(r);
      for (std::size_t i = 0; i < r; ++i) diff[i] = e1[i] - e2[i];
      out.insert(sign_normalized(std::move(diff)));
    }
  if (max_degree > 0) {
    Exponents box(r, -max_degree);
    for (;;) {
      if (!is_zero_vector(box)) out.insert(sign_normalized(box));
      std::size_t k = 0;
      while (k < r) {
        if (++box[k] <= max_degree) break;
        box[k] = -max_degree;
        ++k;
      }
      if (k == r) break;
    }
  }
  return out;
}

Binomial make_binomial(Exponents lambda, int k, int max_order) {
  const int g = std::gcd(k, max_order);
  return Binomial{std::move(lambda), max_order / g, k / g};
}

std::vector<Binomial> binomial_divisors(const CycLaurent& p, int max_degree,
                                        int max_order, long* tried,
                                        bool first_only) {
  std::vector<Binomial> out;
  if (p.is_zero() || p.is_monomial()) return out;
  for (const Exponents& lambda : candidate_exponents(p, max_degree)) {
    for (int k = 0; k < max_order; ++k) {
      if (tried) ++*tried;
      Binomial b = make_binomial(lambda, k, max_order);
      if (divide_exact(p, binomial_poly(b, p.rank(), p.modulus()))) {
        out.push_back(std::move(b));
        if (first_only) return out;
      }
    }
  }
  return out;
}

}  // namespace

std::optional<CommonRelatorForm> detect_common_relator_form(
    const Presentation& pres, const std::optional<Word>& base_hint) {
  if (pres.relators.empty()) return std::nullopt;
  if (base_hint) validate_letters(base_hint->letters(), pres.rank());
  for (const Word& base : candidate_bases(pres, base_hint)) {
    const bool trivial_only = !is_zero_vector(abelianize_word(base, pres.rank()));
    CommonRelatorForm form;
    form.base = base;
    bool ok = true;
    for (const Word& rel : pres.relators) {
      std::vector<Word> us;
      long budget = 200000;
      if (!decompose(rel, base, trivial_only, us, budget)) {
        ok = false;
        break;
      }
      form.conjugators.push_back(std::move(us));
    }
    if (ok) return form;
  }
  return std::nullopt;
}

std::vector<LaurentPoly> pencil_polynomials(const Presentation& pres,
                                            const CommonRelatorForm& form) {
  const int r = pres.rank();
  if (static_cast<int>(form.conjugators.size()) != pres.relator_count())
    throw InputError("conjugator list does not match relator count");
  const std::vector<int> ab_base = abelianize_word(form.base, r);

  std::vector<LaurentPoly> pencils;
  pencils.reserve(form.conjugators.size());
  for (const auto& us : form.conjugators) {
    LaurentPoly p(r);
    Exponents e(static_cast<std::size_t>(r));
    for (std::size_t j = 0; j < us.size(); ++j) {
      const std::vector<int> ab_u = abelianize_word(us[j], r);
      for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = static_cast<int>(j) * ab_base[i] + ab_u[i];
      p.add_term(e, Int(1));
    }
    pencils.push_back(std::move(p));
  }

  // The defining identity D(S_i) = p_i * D(R), checked exactly.
  const auto grad_base = fox_gradient(form.base, r);
  for (int i = 0; i < pres.relator_count(); ++i) {
    const auto grad_rel = fox_gradient(pres.relators[static_cast<std::size_t>(i)], r);
    for (int g = 0; g < r; ++g)
      if (grad_rel[static_cast<std::size_t>(g)] !=
          pencils[static_cast<std::size_t>(i)] * grad_base[static_cast<std::size_t>(g)])
        throw std::logic_error("pencil identity failed for relator " +
                               std::to_string(i + 1));
  }
  return pencils;
}

Cyclotomic binomial_unit(const Binomial& b, int modulus) {
  if (modulus % b.unit_order != 0)
    throw std::logic_error("unit order does not divide the working modulus");
  return Cyclotomic::root_of_unity(modulus,
                                   static_cast<long>(modulus / b.unit_order) * b.unit_power);
}

CycLaurent binomial_poly(const Binomial& b, int rank, int modulus) {
  CycLaurent p(rank, modulus);
  p.add_term(b.exponent, Cyclotomic::one(modulus));
  p.add_term(Exponents(static_cast<std::size_t>(rank), 0), -binomial_unit(b, modulus));
  return p;
}

BinomialSearchResult binomial_factor_search(const LaurentPoly& p, int max_degree,
                                            int max_order) {
  if (max_degree < 0 || max_order < 1)
    throw InputError("binomial search bounds must satisfy max_degree >= 0, max_order >= 1");
  BinomialSearchResult res;
  res.divisors = binomial_divisors(CycLaurent::lift(p, max_order), max_degree,
                                   max_order, &res.candidates_tried, false);
  return res;
}

bool fully_binomial_within_bounds(const LaurentPoly& p, int max_degree, int max_order) {
  if (p.is_zero()) return false;
  CycLaurent cur = CycLaurent::lift(p, max_order);
  while (!cur.is_monomial()) {
    auto divs = binomial_divisors(cur, max_degree, max_order, nullptr, true);
    if (divs.empty()) return false;
    cur = *divide_exact(cur, binomial_poly(divs.front(), cur.rank(), cur.modulus()));
  }
  return true;
}

std::string to_string(KahlerStatus s) {
  switch (s) {
    case KahlerStatus::Obstructed: return "OBSTRUCTED";
    case KahlerStatus::Consistent: return "CONSISTENT";
    case KahlerStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

ObstructionReport kahler_obstruction_report(const Presentation& pres,
                                            const ObstructionOptions& options) {
  ObstructionReport rep;
  rep.options = options;
  if (rep.options.cert_order <= 0) rep.options.cert_order = rep.options.max_order;

  rep.form = detect_common_relator_form(pres, options.base_hint);
  if (!rep.form) {
    rep.status = KahlerStatus::Inconclusive;
    rep.summary =
        "no common-relator form detected; the binomial criterion does not "
        "apply to this presentation";
    return rep;
  }

  const auto pencils = pencil_polynomials(pres, *rep.form);
  bool all_binomial = true;
  for (const auto& p : pencils) {
    PencilReport pr;
    pr.pencil = p;
    pr.support_variables = essential_support(p);
    pr.divisors = binomial_factor_search(p, rep.options.max_degree,
                                         rep.options.max_order)
                      .divisors;
    pr.fully_binomial =
        fully_binomial_within_bounds(p, rep.options.max_degree, rep.options.max_order);
    all_binomial = all_binomial && pr.fully_binomial;
    rep.pencils.push_back(std::move(pr));
  }

  std::ostringstream bounds;
  bounds << "exponent box " << rep.options.max_degree << ", unit order "
         << rep.options.max_order;

  if (all_binomial) {
    rep.status = KahlerStatus::Consistent;
    rep.summary = "every multiplier polynomial factors into a monomial times "
                  "binomials within bounds (" + bounds.str() +
                  "); no obstruction from this criterion";
    return rep;
  }

  // An obstruction needs a pencil hypersurface in >= 3 essential variables
  // with no binomial factor within bounds.
  int witness = -1;
  for (std::size_t i = 0; i < rep.pencils.size(); ++i)
    if (rep.pencils[i].support_variables >= 3 && rep.pencils[i].divisors.empty()) {
      witness = static_cast<int>(i);
      break;
    }
  if (witness < 0) {
    rep.status = KahlerStatus::Inconclusive;
    rep.summary = "some multiplier polynomial did not fully factor within bounds (" +
                  bounds.str() +
                  "), but no witness with >= 3 essential variables and no "
                  "binomial factor was found";
    return rep;
  }

  // Certify that the common zero set of the multiplier polynomials carries
  // torsion points of bounded order (so the stratum it cuts out is real).
  const AbelianizationData ab = abelianization(pres);
  int found = 0;
  for_each_torsion_character(ab, rep.options.cert_order, [&](const TorsionCharacter& chi) {
    for (const auto& p : pencils)
      if (!lp_eval_torsion(p, chi).is_zero()) return true;
    ++found;
    return found < rep.options.cert_threshold;
  });
  rep.certificates = found;

  if (found >= rep.options.cert_threshold) {
    rep.status = KahlerStatus::Obstructed;
    rep.summary = "multiplier polynomial #" + std::to_string(witness + 1) +
                  " has essential support in " +
                  std::to_string(rep.pencils[static_cast<std::size_t>(witness)].support_variables) +
                  " variables and no binomial factor within bounds (" + bounds.str() +
                  "); " + std::to_string(found) +
                  " torsion characters of order dividing " +
                  std::to_string(rep.options.cert_order) +
                  " vanish on all multiplier polynomials";
  } else {
    rep.status = KahlerStatus::Inconclusive;
    rep.summary = "a multiplier polynomial lacks binomial factors within bounds (" +
                  bounds.str() + "), but only " + std::to_string(found) +
                  " torsion certificates of order dividing " +
                  std::to_string(rep.options.cert_order) + " were found (threshold " +
                  std::to_string(rep.options.cert_threshold) + ")";
  }
  return rep;
}

}  // namespace alexstrat
