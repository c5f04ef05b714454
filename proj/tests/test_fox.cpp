#include <doctest.h>

#include <random>
#include <vector>

#include "alexstrat/abelianization.hpp"
#include "alexstrat/fox.hpp"
#include "alexstrat/presentation.hpp"

using namespace alexstrat;

namespace {

std::vector<int> random_letters(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> out;
  for (int i = 0; i < len; ++i) {
    int g = gen(rng);
    out.push_back(sign(rng) ? g : -g);
  }
  return out;
}

LaurentPoly ab_monomial(const Word& w, int rank) {
  const std::vector<int> e = abelianize_word(w, rank);
  return LaurentPoly::monomial(rank, e);
}

}  // namespace

TEST_CASE("derivatives of single letters") {
  const int r = 3;
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      const LaurentPoly d = fox_partial(Word::from_letters({j}), i, r);
      if (i == j)
        CHECK(d == LaurentPoly::constant(r, Int(1)));
      else
        CHECK(d.is_zero());

      // d/dt_i (x_j^-1) = -t_j^-1 when i = j, else 0.
      const LaurentPoly dinv = fox_partial(Word::from_letters({-j}), i, r);
      if (i == j) {
        Exponents e(static_cast<std::size_t>(r), 0);
        e[static_cast<std::size_t>(j - 1)] = -1;
        CHECK(dinv == LaurentPoly::monomial(r, e, Int(-1)));
      } else {
        CHECK(dinv.is_zero());
      }
    }
  }
  CHECK(fox_partial(Word(), 1, 2).is_zero());
}

TEST_CASE("product rule: D(fg) = D(f) + ab(f) D(g)") {
  std::mt19937 rng(20260815);
  for (int trial = 0; trial < 150; ++trial) {
    const Word f = free_reduce(random_letters(rng, 3, 10));
    const Word g = free_reduce(random_letters(rng, 3, 10));
    const Word fg = word_multiply(f, g);
    const LaurentPoly abf = ab_monomial(f, 3);
    for (int i = 1; i <= 3; ++i) {
      const LaurentPoly lhs = fox_partial(fg, i, 3);
      const LaurentPoly rhs =
          fox_partial(f, i, 3) + abf * fox_partial(g, i, 3);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("fundamental identity: sum_i D_i(w) (t_i - 1) = ab(w) - 1") {
  std::mt19937 rng(424242);
  const int r = 3;
  const LaurentPoly one = LaurentPoly::constant(r, Int(1));
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<int> len(0, 20);
    const Word w = free_reduce(random_letters(rng, r, len(rng)));
    LaurentPoly acc = LaurentPoly::zero(r);
    const auto grad = fox_gradient(w, r);
    for (int i = 1; i <= r; ++i) {
      const LaurentPoly ti = LaurentPoly::variable(r, i);
      acc += grad[static_cast<std::size_t>(i - 1)] * (ti - one);
    }
    CHECK(acc == ab_monomial(w, r) - one);
  }
}

TEST_CASE("derivatives are invariant under free reduction") {
  std::mt19937 rng(1009);
  const int r = 3;
  for (int trial = 0; trial < 150; ++trial) {
    // Deliberately unreduced input: letters followed by their inverses.
    std::vector<int> noisy = random_letters(rng, r, 8);
    std::vector<int> tail = noisy;
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) noisy.push_back(-*it);
    std::vector<int> more = random_letters(rng, r, 6);
    noisy.insert(noisy.end(), more.begin(), more.end());

    const auto unreduced = fox_gradient_letters(noisy, r);
    const auto reduced = fox_gradient(free_reduce(noisy), r);
    for (int i = 0; i < r; ++i)
      CHECK(unreduced[static_cast<std::size_t>(i)] ==
            reduced[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("conjugation rule: D(u R u^-1) = ab(u) D(R) + (1 - ab(R)) D(u)") {
  std::mt19937 rng(55);
  const int r = 3;
  for (int trial = 0; trial < 100; ++trial) {
    const Word u = free_reduce(random_letters(rng, r, 6));
    const Word R = free_reduce(random_letters(rng, r, 8));
    const Word conj = word_multiply(word_multiply(u, R), word_inverse(u));
    const LaurentPoly abu = ab_monomial(u, r);
    const LaurentPoly abR = ab_monomial(R, r);
    const LaurentPoly one = LaurentPoly::constant(r, Int(1));
    for (int i = 1; i <= r; ++i) {
      const LaurentPoly lhs = fox_partial(conj, i, r);
      const LaurentPoly rhs =
          abu * fox_partial(R, i, r) + (one - abR) * fox_partial(u, i, r);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("trefoil relator derivatives, exact and rendered") {
  const Presentation pres =
      parse_presentation("gens: x, y\nrels: x y x y^-1 x^-1 y^-1\n");
  const AlexanderMatrix m = alexander_matrix(pres);
  REQUIRE(m.rank() == 2);
  REQUIRE(m.relator_count() == 1);

  LaurentPoly dx(2);
  dx.add_term({0, 0}, Int(1));
  dx.add_term({1, 0}, Int(-1));
  dx.add_term({1, 1}, Int(1));
  LaurentPoly dy(2);
  dy.add_term({1, -1}, Int(-1));
  dy.add_term({1, 0}, Int(1));
  dy.add_term({2, 0}, Int(-1));
  CHECK(m.entry(0, 0) == dx);
  CHECK(m.entry(1, 0) == dy);

  const auto names = variable_names(pres);
  REQUIRE(names == std::vector<std::string>{"t_x", "t_y"});
  CHECK(m.entry(0, 0).to_string(names) == "1 - t_x + t_x*t_y");
  CHECK(m.entry(1, 0).to_string(names) == "-t_x*t_y^-1 + t_x - t_x^2");
}

TEST_CASE("surface relator derivatives in genus 1 and 2") {
  // Genus 1: R = [x1, x2]; D_1([x1,x2]) = 1 - t_2, D_2([x1,x2]) = t_1 - 1.
  const Presentation g1 =
      parse_presentation("gens: x1, x2\nrels: x1 x2 x1^-1 x2^-1\n");
  const AlexanderMatrix m1 = alexander_matrix(g1);
  const auto one2 = LaurentPoly::constant(2, Int(1));
  CHECK(m1.entry(0, 0) == one2 - LaurentPoly::variable(2, 2));
  CHECK(m1.entry(1, 0) == LaurentPoly::variable(2, 1) - one2);

  // Genus 2: R = [x1, x3][x2, x4]; the first commutator differentiates as in
  // genus 1, the second is translated by ab([x1, x3]) = 1.
  const Presentation g2 = parse_presentation(
      "gens: x1, x2, x3, x4\nrels: x1 x3 x1^-1 x3^-1 x2 x4 x2^-1 x4^-1\n");
  const AlexanderMatrix m2 = alexander_matrix(g2);
  const auto one4 = LaurentPoly::constant(4, Int(1));
  CHECK(m2.entry(0, 0) == one4 - LaurentPoly::variable(4, 3));
  CHECK(m2.entry(2, 0) == LaurentPoly::variable(4, 1) - one4);
  CHECK(m2.entry(1, 0) == one4 - LaurentPoly::variable(4, 4));
  CHECK(m2.entry(3, 0) == LaurentPoly::variable(4, 2) - one4);
}

TEST_CASE("abelianized display view pushes exponents to the free quotient") {
  const Presentation pres =
      parse_presentation("gens: x, y\nrels: x y x y^-1 x^-1 y^-1\n");
  const AbelianizationData ab = abelianization(pres);
  REQUIRE(ab.betti == 1);
  const AbelianizedView view = abelianized_view(alexander_matrix(pres), ab);
  REQUIRE(view.names == std::vector<std::string>{"t"});

  // Both entries collapse to the classical single-variable normal form.
  CHECK(view.entries[0][0].to_string(view.names) == "1 - t + t^2");
  CHECK(view.entries[1][0].to_string(view.names) == "-1 + t - t^2");

  // Torus-knot presentation of the same group: a |-> t^3, b |-> t^2.
  const Presentation torus = parse_presentation("gens: a, b\nrels: a^2 b^-3\n");
  const AbelianizedView tview =
      abelianized_view(alexander_matrix(torus), abelianization(torus));
  CHECK(tview.entries[0][0].to_string(tview.names) == "1 + t^3");
  CHECK(tview.entries[1][0].to_string(tview.names) == "-1 - t^2 - t^4");
}

TEST_CASE("abelianization data on standard examples") {
  CHECK(abelianization(parse_presentation("gens: x, y\n")).betti == 2);

  const AbelianizationData tref =
      abelianization(parse_presentation("gens: x, y\nrels: x y x y^-1 x^-1 y^-1\n"));
  CHECK(tref.betti == 1);
  CHECK(tref.torsion.empty());

  // <a, b | a^2, b^3, a b a^-1 b^-1> has H_1 = Z/2 + Z/3 = Z/6.
  const AbelianizationData z6 = abelianization(
      parse_presentation("gens: a, b\nrels: a^2 ; b^3 ; a b a^-1 b^-1\n"));
  CHECK(z6.betti == 0);
  CHECK(z6.torsion == std::vector<Int>{Int(6)});

  // <a | a^2, a^3> is trivial: no torsion survives, betti 0.
  const AbelianizationData triv =
      abelianization(parse_presentation("gens: a\nrels: a^2 ; a^3\n"));
  CHECK(triv.betti == 0);
  CHECK(triv.torsion.empty());
}
