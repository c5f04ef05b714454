#include "alexstrat/character.hpp"

#include <algorithm>
#include <numeric>

#include "alexstrat/errors.hpp"

namespace alexstrat {

TorsionCharacter::TorsionCharacter(int rank_, int modulus_, std::vector<int> exponents_)
    : rank(rank_), modulus(modulus_), exponents(std::move(exponents_)) {
  if (modulus < 1) throw InputError("character modulus must be >= 1");
  if (static_cast<int>(exponents.size()) != rank)
    throw InputError("character exponent count does not match rank");
  for (int a : exponents)
    if (a < 0 || a >= modulus)
      throw InputError("character exponent " + std::to_string(a) +
                       " outside [0, " + std::to_string(modulus) + ")");
}

bool TorsionCharacter::is_trivial() const {
  return std::all_of(exponents.begin(), exponents.end(), [](int a) { return a == 0; });
}

TorsionCharacter TorsionCharacter::normalized() const {
  int g = modulus;
  for (int a : exponents) g = std::gcd(g, a);
  if (g <= 1) return *this;
  TorsionCharacter out;
  out.rank = rank;
  out.modulus = modulus / g;
  out.exponents.reserve(exponents.size());
  for (int a : exponents) out.exponents.push_back(a / g);
  return out;
}

int TorsionCharacter::order() const { return normalized().modulus; }

std::string TorsionCharacter::to_text() const {
  std::string s = "N=" + std::to_string(modulus) + " a=(";
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(exponents[i]);
  }
  return s + ")";
}

bool satisfies_relator_constraints(const TorsionCharacter& chi,
                                   const AbelianizationData& ab) {
  const IntMat& a = ab.relator_exponents;
  if (chi.rank != static_cast<int>(a.rows()))
    throw InputError("character rank does not match presentation rank");
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Int sum = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
      sum += a(i, j) * chi.exponents[i];
    if (sum % chi.modulus != 0) return false;
  }
  return true;
}

bool for_each_torsion_character(const AbelianizationData& ab, int order,
                                const std::function<bool(const TorsionCharacter&)>& fn) {
  if (order < 1) throw InputError("character order bound must be >= 1");
  const int r = ab.rank();
  const Int n(order);

  // Solve A^T a = 0 mod N through the Smith form of A^T: with U A^T V = D and
  // b = V^{-1} a, the system reads d_k b_k = 0 mod N, so each b_k ranges over
  // the multiples of N/gcd(d_k, N) and a = V b mod N.
  IntMat at(ab.relator_exponents.cols(), ab.relator_exponents.rows());
  for (std::size_t i = 0; i < at.rows(); ++i)
    for (std::size_t j = 0; j < at.cols(); ++j)
      at(i, j) = ab.relator_exponents(j, i);
  const SmithDecomposition snf = smith_normal_form(at);
  const std::size_t diag = std::min(at.rows(), at.cols());

  std::vector<long> counts(static_cast<std::size_t>(r), order);
  std::vector<long> strides(static_cast<std::size_t>(r), 1);
  for (std::size_t k = 0; k < static_cast<std::size_t>(r); ++k) {
    if (k < diag) {
      Int g = gcd(snf.d(k, k), n);
      counts[k] = g.convert_to<long>();
      strides[k] = order / counts[k];
    }
  }

  std::vector<long> b(static_cast<std::size_t>(r), 0);
  std::vector<long> digit(static_cast<std::size_t>(r), 0);
  TorsionCharacter chi;
  chi.rank = r;
  chi.modulus = order;
  chi.exponents.assign(static_cast<std::size_t>(r), 0);
  for (;;) {
    for (int i = 0; i < r; ++i) {
      Int acc = 0;
      for (int k = 0; k < r; ++k)
        acc += snf.v(static_cast<std::size_t>(i), static_cast<std::size_t>(k)) * b[static_cast<std::size_t>(k)];
      Int m = acc % n;
      if (m < 0) m += n;
      chi.exponents[static_cast<std::size_t>(i)] = m.convert_to<int>();
    }
    if (!fn(chi)) return false;

    // Odometer over the b digits.
    int k = 0;
    while (k < r) {
      if (++digit[static_cast<std::size_t>(k)] < counts[static_cast<std::size_t>(k)]) {
        b[static_cast<std::size_t>(k)] =
            digit[static_cast<std::size_t>(k)] * strides[static_cast<std::size_t>(k)];
        break;
      }
      digit[static_cast<std::size_t>(k)] = 0;
      b[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == r) break;
  }
  return true;
}

std::vector<TorsionCharacter> torsion_characters(const Presentation& pres, int order) {
  const AbelianizationData ab = abelianization(pres);
  std::vector<TorsionCharacter> out;
  for_each_torsion_character(ab, order, [&](const TorsionCharacter& chi) {
    out.push_back(chi);
    return true;
  });
  std::sort(out.begin(), out.end(),
            [](const TorsionCharacter& x, const TorsionCharacter& y) {
              return x.exponents < y.exponents;
            });
  return out;
}

Cyclotomic lp_eval_torsion(const LaurentPoly& p, const TorsionCharacter& chi) {
  if (p.rank() != chi.rank)
    throw InputError("polynomial variable count does not match character rank");
  const int n = chi.modulus;
  Cyclotomic acc = Cyclotomic::zero(n);
  for (const auto& [e, c] : p.terms()) {
    long exp = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      exp += static_cast<long>(e[i] % n) * chi.exponents[i];
      exp %= n;
    }
    acc += Cyclotomic::from_rational(n, Rational(c)) * Cyclotomic::root_of_unity(n, exp);
  }
  return acc;
}

}  // namespace alexstrat
