#include "alexstrat/covers.hpp"

#include <numeric>

#include "alexstrat/errors.hpp"
#include "alexstrat/parallel.hpp"

namespace alexstrat {

long FiniteAbelianGroup::size() const {
  long n = 1;
  for (int d : orders) n *= d;
  return n;
}

int FiniteAbelianGroup::exponent() const {
  int e = 1;
  for (int d : orders) e = std::lcm(e, d);
  return e;
}

Epimorphism validate_epimorphism(const Presentation& pres, FiniteAbelianGroup group,
                                 std::vector<std::vector<int>> images) {
  for (int d : group.orders)
    if (d < 1) throw InputError("cyclic factor order must be >= 1");
  const int r = pres.rank();
  const int k = group.factors();
  if (static_cast<int>(images.size()) != r)
    throw InputError("need one image per generator");
  for (auto& img : images) {
    if (static_cast<int>(img.size()) != k)
      throw InputError("image coordinate count does not match cyclic factor count");
    for (int f = 0; f < k; ++f) {
      int d = group.orders[static_cast<std::size_t>(f)];
      int& c = img[static_cast<std::size_t>(f)];
      c %= d;
      if (c < 0) c += d;
    }
  }

  // Homomorphism: every relator exponent vector must map to zero.
  const AbelianizationData ab = abelianization(pres);
  for (std::size_t j = 0; j < ab.relator_exponents.cols(); ++j)
    for (int f = 0; f < k; ++f) {
      Int sum = 0;
      for (int i = 0; i < r; ++i)
        sum += ab.relator_exponents(static_cast<std::size_t>(i), j) *
               images[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)];
      if (sum % group.orders[static_cast<std::size_t>(f)] != 0)
        throw InputError("images do not define a homomorphism: relator " +
                         std::to_string(j + 1) + " maps to a nonzero element");
    }

  // Surjectivity: the images together with diag(d) must span Z^k, i.e. the
  // Smith form of [images | diag(d)] has all k invariant factors equal to 1.
  IntMat b(static_cast<std::size_t>(k), static_cast<std::size_t>(r + k));
  for (int f = 0; f < k; ++f) {
    for (int i = 0; i < r; ++i)
      b(static_cast<std::size_t>(f), static_cast<std::size_t>(i)) =
          images[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)];
    b(static_cast<std::size_t>(f), static_cast<std::size_t>(r + f)) =
        group.orders[static_cast<std::size_t>(f)];
  }
  const SmithDecomposition snf = smith_normal_form(b);
  bool onto = snf.diag_rank() == k;
  if (onto)
    for (const Int& f : snf.invariant_factors())
      if (f != 1) onto = false;
  if (!onto) throw InputError("images do not generate the target group");

  return Epimorphism{pres, std::move(group), std::move(images)};
}

bool GroupCharacter::is_trivial() const {
  return std::all_of(exponents.begin(), exponents.end(), [](int c) { return c == 0; });
}

std::vector<GroupCharacter> characters_of(const FiniteAbelianGroup& g) {
  std::vector<GroupCharacter> out;
  out.reserve(static_cast<std::size_t>(g.size()));
  std::vector<int> c(g.orders.size(), 0);
  for (;;) {
    out.push_back(GroupCharacter{g, c});
    int k = static_cast<int>(c.size()) - 1;
    while (k >= 0) {
      if (++c[static_cast<std::size_t>(k)] < g.orders[static_cast<std::size_t>(k)]) break;
      c[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

TorsionCharacter pullback_character(const Epimorphism& epi, const GroupCharacter& chi) {
  if (chi.group != epi.group)
    throw InputError("character group does not match epimorphism target");
  const int n = epi.group.exponent();
  const int r = epi.pres.rank();
  std::vector<int> a(static_cast<std::size_t>(r), 0);
  for (int i = 0; i < r; ++i) {
    long acc = 0;
    for (int f = 0; f < epi.group.factors(); ++f) {
      const int d = epi.group.orders[static_cast<std::size_t>(f)];
      acc += static_cast<long>(n / d) * chi.exponents[static_cast<std::size_t>(f)] *
             epi.images[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)];
      acc %= n;
    }
    a[static_cast<std::size_t>(i)] = static_cast<int>(acc);
  }
  return TorsionCharacter(r, n, std::move(a));
}

long betti_cover_formula(const StrataContext& ctx, const Epimorphism& epi,
                         unsigned threads) {
  if (epi.pres != ctx.presentation())
    throw InputError("epimorphism presentation does not match context");
  const int r = ctx.rank();
  const int d = ctx.betti();
  const auto chars = characters_of(epi.group);

  std::vector<int> ranks(chars.size(), 0);
  parallel_for(chars.size(), threads, [&](std::size_t k) {
    ranks[k] = ctx.matrix_rank_at(pullback_character(epi, chars[k]));
  });

  long b1 = d;
  for (std::size_t k = 0; k < chars.size(); ++k) {
    if (chars[k].is_trivial()) continue;
    b1 += std::max(0, (r - 1) - ranks[k]);
  }

  // Cross-check: summing stratum membership counts over the pulled-back
  // characters must reproduce the same number.
  long accum = 0;
  for (const auto& gchi : chars) {
    const TorsionCharacter chi = pullback_character(epi, gchi);
    for (int i = 1; i <= r; ++i)
      if (ctx.in_w(chi, i)) ++accum;
  }
  if (accum != b1)
    throw std::logic_error("stratum-count accumulation disagrees with depth sum");
  return b1;
}

namespace {

long element_index(const std::vector<int>& g, const FiniteAbelianGroup& grp) {
  long idx = 0;
  for (std::size_t f = 0; f < g.size(); ++f)
    idx = idx * grp.orders[f] + g[f];
  return idx;
}

}  // namespace

IntMat group_ring_expand(const std::vector<std::vector<GroupRingElem>>& entries,
                         const FiniteAbelianGroup& g) {
  const long n = g.size();
  const std::size_t rows = entries.size();
  const std::size_t cols = rows == 0 ? 0 : entries.front().size();
  IntMat out(rows * static_cast<std::size_t>(n), cols * static_cast<std::size_t>(n));

  // Enumerate the group once; translate each element by each term.
  std::vector<std::vector<int>> elems;
  elems.reserve(static_cast<std::size_t>(n));
  std::vector<int> cur(g.orders.size(), 0);
  for (;;) {
    elems.push_back(cur);
    int k = static_cast<int>(cur.size()) - 1;
    while (k >= 0) {
      if (++cur[static_cast<std::size_t>(k)] < g.orders[static_cast<std::size_t>(k)]) break;
      cur[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }

  std::vector<int> shifted(g.orders.size());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (const auto& [elem, coeff] : entries[i][j])
        for (long h = 0; h < n; ++h) {
          for (std::size_t f = 0; f < shifted.size(); ++f)
            shifted[f] = (elems[static_cast<std::size_t>(h)][f] + elem[f]) %
                         g.orders[f];
          out(i * static_cast<std::size_t>(n) + static_cast<std::size_t>(h),
              j * static_cast<std::size_t>(n) +
                  static_cast<std::size_t>(element_index(shifted, g))) += coeff;
        }
  return out;
}

long betti_cover_oracle(const AlexanderMatrix& m, const Epimorphism& epi) {
  if (epi.pres != m.presentation)
    throw InputError("epimorphism presentation does not match matrix");
  const int r = m.rank();
  const int s = m.relator_count();
  const long n = epi.group.size();
  const auto& orders = epi.group.orders;

  // Push each matrix entry from the Laurent ring into Z[G] along the
  // epimorphism: a monomial t^lambda lands on the element sum_i lambda_i img_i.
  std::vector<std::vector<GroupRingElem>> pushed(
      static_cast<std::size_t>(r), std::vector<GroupRingElem>(static_cast<std::size_t>(s)));
  std::vector<int> g(orders.size());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j)
      for (const auto& [e, c] : m.entry(i, j).terms()) {
        for (std::size_t f = 0; f < orders.size(); ++f) {
          long acc = 0;
          for (int l = 0; l < r; ++l)
            acc += static_cast<long>(e[static_cast<std::size_t>(l)]) *
                   epi.images[static_cast<std::size_t>(l)][f];
          acc %= orders[f];
          if (acc < 0) acc += orders[f];
          g[f] = static_cast<int>(acc);
        }
        auto& target = pushed[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        auto [it, inserted] = target.emplace(g, c);
        if (!inserted) {
          it->second += c;
          if (it->second == 0) target.erase(it);
        }
      }

  const IntMat delta2 = group_ring_expand(pushed, epi.group);

  // First boundary map of the cover complex, oriented to match the block
  // convention (translation acts on column indices), so delta1 . delta2 = 0.
  IntMat delta1(static_cast<std::size_t>(n),
                static_cast<std::size_t>(r) * static_cast<std::size_t>(n));
  std::vector<std::vector<int>> elems;
  {
    std::vector<int> cur(orders.size(), 0);
    for (;;) {
      elems.push_back(cur);
      int k = static_cast<int>(cur.size()) - 1;
      while (k >= 0) {
        if (++cur[static_cast<std::size_t>(k)] < orders[static_cast<std::size_t>(k)]) break;
        cur[static_cast<std::size_t>(k)] = 0;
        --k;
      }
      if (k < 0) break;
    }
  }
  std::vector<int> shifted(orders.size());
  for (int i = 0; i < r; ++i)
    for (long h = 0; h < n; ++h) {
      for (std::size_t f = 0; f < orders.size(); ++f) {
        int v = elems[static_cast<std::size_t>(h)][f] -
                epi.images[static_cast<std::size_t>(i)][f];
        v %= orders[f];
        if (v < 0) v += orders[f];
        shifted[f] = v;
      }
      const std::size_t col =
          static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(h);
      delta1(static_cast<std::size_t>(element_index(shifted, epi.group)), col) += 1;
      delta1(static_cast<std::size_t>(h), col) -= 1;
    }

  // Chain condition and connectivity, asserted exactly.
  if (s > 0) {
    const IntMat zero = delta1 * delta2;
    for (std::size_t i = 0; i < zero.rows(); ++i)
      for (std::size_t j = 0; j < zero.cols(); ++j)
        if (zero(i, j) != 0) throw std::logic_error("boundary maps do not compose to zero");
  }
  const long nullity1 = static_cast<long>(r) * n - bareiss_rank(delta1);
  if (nullity1 != (static_cast<long>(r) - 1) * n + 1)
    throw std::logic_error("first boundary map has unexpected nullity");

  return (static_cast<long>(r) - 1) * n + 1 - bareiss_rank(delta2);
}

}  // namespace alexstrat
