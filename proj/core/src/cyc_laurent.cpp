#include "alexstrat/cyc_laurent.hpp"

#include <stdexcept>

namespace alexstrat {

namespace {

void check_compatible(const CycLaurent& a, const CycLaurent& b) {
  if (a.rank() != b.rank() || a.modulus() != b.modulus())
    throw std::logic_error("cyclotomic Laurent operands are incompatible");
}

// Componentwise minimum exponent over the support; the unit t^{-min} shifts
// the polynomial into the subring with all exponents >= 0 and no variable
// dividing it.
Exponents min_exponents(const CycLaurent& p) {
  Exponents m(static_cast<std::size_t>(p.rank()), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

CycLaurent shifted(const CycLaurent& p, const Exponents& by) {
  CycLaurent out(p.rank(), p.modulus());
  Exponents e(static_cast<std::size_t>(p.rank()));
  for (const auto& [ep, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + by[i];
    out.add_term(e, c);
  }
  return out;
}

bool divides_monomial(const Exponents& den, const Exponents& num) {
  for (std::size_t i = 0; i < den.size(); ++i)
    if (num[i] < den[i]) return false;
  return true;
}

}  // namespace

CycLaurent CycLaurent::monomial(int rank, int modulus, Exponents e, Cyclotomic c) {
  CycLaurent p(rank, modulus);
  p.add_term(e, c);
  return p;
}

CycLaurent CycLaurent::lift(const LaurentPoly& p, int modulus) {
  CycLaurent out(p.rank(), modulus);
  for (const auto& [e, c] : p.terms())
    out.terms_.emplace(e, Cyclotomic::from_rational(modulus, Rational(c)));
  return out;
}

void CycLaurent::add_term(const Exponents& e, const Cyclotomic& c) {
  if (static_cast<int>(e.size()) != rank_)
    throw std::logic_error("exponent vector length does not match variable count");
  if (c.modulus() != modulus_)
    throw std::logic_error("coefficient modulus does not match polynomial modulus");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CycLaurent CycLaurent::operator-() const {
  CycLaurent out(rank_, modulus_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

CycLaurent operator+(const CycLaurent& a, const CycLaurent& b) {
  check_compatible(a, b);
  CycLaurent out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, c);
  return out;
}

CycLaurent operator-(const CycLaurent& a, const CycLaurent& b) {
  check_compatible(a, b);
  CycLaurent out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, -c);
  return out;
}

CycLaurent operator*(const CycLaurent& a, const CycLaurent& b) {
  check_compatible(a, b);
  CycLaurent out(a.rank(), a.modulus());
  Exponents e(static_cast<std::size_t>(a.rank()));
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

std::string CycLaurent::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (!first) out += " + ";
    first = false;
    std::string cs = c.to_string();
    if (mono.empty()) {
      out += cs;
    } else if (c.is_one()) {
      out += mono;
    } else {
      const bool atomic = cs.find(' ') == std::string::npos;
      out += (atomic ? cs : "(" + cs + ")") + "*" + mono;
    }
  }
  return out;
}

std::optional<CycLaurent> divide_exact(const CycLaurent& p, const CycLaurent& q) {
  check_compatible(p, q);
  if (q.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.is_zero()) return CycLaurent::zero(p.rank(), p.modulus());

  const Exponents mp = min_exponents(p);
  const Exponents mq = min_exponents(q);
  Exponents neg(mp.size());

  // Shift divisor so no variable divides it; then polynomial-subring
  // divisibility of the shifted operands is equivalent to Laurent
  // divisibility.
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -mq[i];
  const CycLaurent qq = shifted(q, neg);
  for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -mp[i];
  CycLaurent rem = shifted(p, neg);

  const auto& qlead = *qq.terms().rbegin();
  const Cyclotomic qlead_inv = qlead.second.inverse();

  CycLaurent quot(p.rank(), p.modulus());
  Exponents shift(mp.size());
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().rbegin();
    // Single-divisor division: if the leading term is not divisible the
    // remainder could only grow, so the division is already inexact.
    if (!divides_monomial(qlead.first, rlead.first)) return std::nullopt;
    for (std::size_t i = 0; i < shift.size(); ++i)
      shift[i] = rlead.first[i] - qlead.first[i];
    const Cyclotomic coeff = rlead.second * qlead_inv;
    CycLaurent step = CycLaurent::monomial(p.rank(), p.modulus(), shift, coeff);
    quot = quot + step;
    rem = rem - step * qq;
  }

  // Undo the shifts: p/q = t^{mp - mq} * (p'/q').
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = mp[i] - mq[i];
  return shifted(quot, shift);
}

std::optional<LaurentPoly> lp_divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
  auto quot = divide_exact(CycLaurent::lift(p, 1), CycLaurent::lift(q, 1));
  if (!quot) return std::nullopt;
  LaurentPoly out(p.rank());
  for (const auto& [e, c] : quot->terms()) {
    const Rational& r = c.coords()[0];
    if (denominator(r) != 1) return std::nullopt;
    out.add_term(e, numerator(r));
  }
  return out;
}

}  // namespace alexstrat
