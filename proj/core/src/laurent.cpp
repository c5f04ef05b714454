#include "alexstrat/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace alexstrat {

namespace {

void check_rank(int rank, const Exponents& e) {
  if (static_cast<int>(e.size()) != rank)
    throw std::logic_error("exponent vector length does not match variable count");
}

void check_same_rank(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.rank() != b.rank())
    throw std::logic_error("Laurent polynomials over different variable counts");
}

}  // namespace

LaurentPoly LaurentPoly::constant(int rank, Int c) {
  return monomial(rank, Exponents(static_cast<std::size_t>(rank), 0), std::move(c));
}

LaurentPoly LaurentPoly::monomial(int rank, Exponents e, Int c) {
  check_rank(rank, e);
  LaurentPoly p(rank);
  if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

LaurentPoly LaurentPoly::variable(int rank, int index) {
  Exponents e(static_cast<std::size_t>(rank), 0);
  e[static_cast<std::size_t>(index) - 1] = 1;
  return monomial(rank, std::move(e));
}

Int LaurentPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const Exponents& e, const Int& c) {
  check_rank(rank_, e);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(rank_);
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  check_same_rank(*this, o);
  if (this == &o) {
    // Doubling a nonzero integer never cancels, so the map shape is stable.
    for (auto& [e, c] : terms_) c *= 2;
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  check_same_rank(*this, o);
  if (this == &o) {
    terms_.clear();
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_rank(a, b);
  LaurentPoly p(a.rank());
  Exponents e(static_cast<std::size_t>(a.rank()));
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      p.add_term(e, ca * cb);
    }
  return p;
}

std::string LaurentPoly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    Int mag = neg ? Int(-c) : c;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (first) {
      if (neg) out << '-';
      first = false;
    } else {
      out << (neg ? " - " : " + ");
    }
    if (mono.empty())
      out << mag;
    else if (mag == 1)
      out << mono;
    else
      out << mag << '*' << mono;
  }
  return out.str();
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly lp_neg(const LaurentPoly& a) { return -a; }

}  // namespace alexstrat
