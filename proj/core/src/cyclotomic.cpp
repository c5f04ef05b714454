#include "alexstrat/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace alexstrat {

namespace {

// Dense univariate polynomials, ascending coefficients.
using ZPoly = std::vector<Int>;
using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

// Exact division of monic-divisor integer polynomials; remainder must vanish.
ZPoly divide_exact_monic(ZPoly num, const ZPoly& den) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  if (dd < 0 || den.back() != 1) throw std::logic_error("divisor must be monic");
  if (dn < dd) throw std::logic_error("cyclotomic division underflow");
  ZPoly q(static_cast<std::size_t>(dn - dd + 1), Int(0));
  for (int k = dn - dd; k >= 0; --k) {
    Int c = num[static_cast<std::size_t>(k + dd)];
    if (c == 0) continue;
    q[static_cast<std::size_t>(k)] = c;
    for (int i = 0; i <= dd; ++i)
      num[static_cast<std::size_t>(k + i)] -= c * den[static_cast<std::size_t>(i)];
  }
  for (const Int& c : num)
    if (c != 0) throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

ZPoly cyclotomic_rec(int n, std::map<int, ZPoly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  // x^n - 1
  ZPoly num(static_cast<std::size_t>(n) + 1, Int(0));
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = divide_exact_monic(std::move(num), cyclotomic_rec(d, memo));
  }
  memo.emplace(n, num);
  return num;
}

// Per-modulus tables: the minimal polynomial and the reductions of x^e for
// every exponent that arises in products and unit construction.
struct FieldTable {
  int n = 1;
  int phi = 1;
  ZPoly min_poly;
  std::vector<std::vector<Rational>> xpow;  // x^e mod Phi_n, e in [0, limit)
};

const FieldTable& field_table(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FieldTable>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto t = std::make_unique<FieldTable>();
  t->n = n;
  t->min_poly = cyclotomic_polynomial(n);
  t->phi = static_cast<int>(t->min_poly.size()) - 1;
  const int phi = t->phi;
  const int limit = std::max(n, 2 * phi - 1);
  t->xpow.reserve(static_cast<std::size_t>(limit));
  std::vector<Rational> cur(static_cast<std::size_t>(phi), Rational(0));
  cur[0] = 1;
  for (int e = 0; e < limit; ++e) {
    t->xpow.push_back(cur);
    // cur <- x * cur mod Phi_n
    Rational lead = cur[static_cast<std::size_t>(phi) - 1];
    for (int i = phi - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    cur[0] = 0;
    if (lead != 0)
      for (int i = 0; i < phi; ++i)
        cur[static_cast<std::size_t>(i)] -= lead * Rational(t->min_poly[static_cast<std::size_t>(i)]);
  }
  const FieldTable& ref = *t;
  cache.emplace(n, std::move(t));
  return ref;
}

void check_modulus(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.modulus() != b.modulus())
    throw std::logic_error("cyclotomic operands over different moduli");
}

// Quotient of rational polynomials (for the extended Euclid below).
QPoly qpoly_divmod(QPoly& rem, const QPoly& den) {
  QPoly q;
  if (degree(rem) >= degree(den)) q.assign(static_cast<std::size_t>(degree(rem) - degree(den)) + 1, Rational(0));
  while (degree(rem) >= degree(den) && !rem.empty()) {
    int shift = degree(rem) - degree(den);
    Rational c = rem.back() / den.back();
    q[static_cast<std::size_t>(shift)] = c;
    for (int i = 0; i <= degree(den); ++i)
      rem[static_cast<std::size_t>(i + shift)] -= c * den[static_cast<std::size_t>(i)];
    trim(rem);
  }
  return q;
}

QPoly qpoly_sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  // a - q*b
  QPoly out = a;
  if (!q.empty() && !b.empty()) {
    out.resize(std::max(out.size(), q.size() + b.size() - 1), Rational(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    }
  }
  trim(out);
  return out;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::logic_error("cyclotomic polynomial index must be >= 1");
  std::map<int, ZPoly> memo;
  return cyclotomic_rec(n, memo);
}

int totient(int n) {
  return static_cast<int>(cyclotomic_polynomial(n).size()) - 1;
}

Cyclotomic Cyclotomic::zero(int modulus) {
  const auto& t = field_table(modulus);
  return Cyclotomic(modulus, std::vector<Rational>(static_cast<std::size_t>(t.phi), Rational(0)));
}

Cyclotomic Cyclotomic::one(int modulus) {
  return from_rational(modulus, Rational(1));
}

Cyclotomic Cyclotomic::from_rational(int modulus, Rational value) {
  Cyclotomic c = zero(modulus);
  c.coords_[0] = std::move(value);
  return c;
}

Cyclotomic Cyclotomic::root_of_unity(int modulus, long k) {
  const auto& t = field_table(modulus);
  long e = k % modulus;
  if (e < 0) e += modulus;
  return Cyclotomic(modulus, t.xpow[static_cast<std::size_t>(e)]);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (coords_[0] != 1) return false;
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  check_modulus(a, b);
  Cyclotomic out = a;
  for (std::size_t i = 0; i < out.coords_.size(); ++i) out.coords_[i] += b.coords_[i];
  return out;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
  check_modulus(a, b);
  Cyclotomic out = a;
  for (std::size_t i = 0; i < out.coords_.size(); ++i) out.coords_[i] -= b.coords_[i];
  return out;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  check_modulus(a, b);
  const auto& t = field_table(a.modulus_);
  const int phi = t.phi;
  std::vector<Rational> conv(static_cast<std::size_t>(2 * phi - 1), Rational(0));
  for (int i = 0; i < phi; ++i) {
    if (a.coords_[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (b.coords_[static_cast<std::size_t>(j)] == 0) continue;
      conv[static_cast<std::size_t>(i + j)] +=
          a.coords_[static_cast<std::size_t>(i)] * b.coords_[static_cast<std::size_t>(j)];
    }
  }
  std::vector<Rational> out(static_cast<std::size_t>(phi), Rational(0));
  for (int e = 0; e < 2 * phi - 1; ++e) {
    if (conv[static_cast<std::size_t>(e)] == 0) continue;
    const auto& pw = t.xpow[static_cast<std::size_t>(e)];
    for (int i = 0; i < phi; ++i)
      out[static_cast<std::size_t>(i)] += conv[static_cast<std::size_t>(e)] * pw[static_cast<std::size_t>(i)];
  }
  return Cyclotomic(a.modulus_, std::move(out));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
  const auto& t = field_table(modulus_);
  // Extended Euclid in Q[x] against the (irreducible) minimal polynomial:
  // s*a + _*Phi = gcd = nonzero constant, so a^{-1} = s / gcd.
  QPoly r0(t.min_poly.begin(), t.min_poly.end());
  QPoly r1 = coords_;
  trim(r1);
  QPoly s0;            // coefficient of `a` in r0 representation
  QPoly s1{Rational(1)};
  while (!r1.empty()) {
    QPoly rem = r0;
    QPoly q = qpoly_divmod(rem, r1);
    QPoly s2 = qpoly_sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (degree(r0) != 0)
    throw std::logic_error("minimal polynomial not coprime to element");
  const Rational g = r0[0];
  std::vector<Rational> out(static_cast<std::size_t>(t.phi), Rational(0));
  for (std::size_t i = 0; i < s0.size(); ++i) out[i] = s0[i] / g;
  return Cyclotomic(modulus_, std::move(out));
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    Rational c = coords_[i];
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string var = i == 0 ? "" : (i == 1 ? "z" : "z^" + std::to_string(i));
    if (var.empty())
      os << c;
    else if (c == 1)
      os << var;
    else
      os << c << '*' << var;
  }
  if (first) return "0";
  return os.str();
}

int rank_cyclotomic(CycMat m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    m.swap_rows(rank, pivot);
    const Cyclotomic inv = m(rank, col).inverse();
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      const Cyclotomic f = m(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) = m(i, j) - f * m(rank, j);
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace alexstrat
