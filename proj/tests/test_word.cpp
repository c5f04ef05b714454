#include <doctest.h>

#include <random>
#include <vector>

#include "alexstrat/errors.hpp"
#include "alexstrat/presentation.hpp"
#include "alexstrat/word.hpp"

using namespace alexstrat;

namespace {

std::vector<int> random_letters(std::mt19937& rng, int rank, int len) {
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    int g = gen(rng);
    out.push_back(sign(rng) ? g : -g);
  }
  return out;
}

}  // namespace

TEST_CASE("free reduction cancels adjacent inverse pairs") {
  CHECK(free_reduce(std::vector<int>{1, -1}).empty());
  CHECK(free_reduce(std::vector<int>{1, 2, -2, -1}).empty());
  CHECK(free_reduce(std::vector<int>{1, 2, -2, 1}) ==
        Word::from_letters({1, 1}));
  // Reduction cascades through newly adjacent pairs.
  CHECK(free_reduce(std::vector<int>{1, 2, 3, -3, -2, -1, 2}) ==
        Word::from_letters({2}));
}

TEST_CASE("letter zero is rejected") {
  CHECK_THROWS_AS(free_reduce(std::vector<int>{1, 0}), InputError);
}

TEST_CASE("validate_letters enforces the generator range") {
  CHECK_NOTHROW(validate_letters(std::vector<int>{1, -2, 2}, 2));
  CHECK_THROWS_AS(validate_letters(std::vector<int>{3}, 2), InputError);
  CHECK_THROWS_AS(validate_letters(std::vector<int>{-3}, 2), InputError);
}

TEST_CASE("group laws hold for reduced words") {
  std::mt19937 rng(20260815);
  for (int trial = 0; trial < 200; ++trial) {
    const Word a = free_reduce(random_letters(rng, 3, 12));
    const Word b = free_reduce(random_letters(rng, 3, 12));
    const Word c = free_reduce(random_letters(rng, 3, 12));
    CHECK(word_multiply(word_multiply(a, b), c) ==
          word_multiply(a, word_multiply(b, c)));
    CHECK(word_multiply(a, word_inverse(a)).empty());
    CHECK(word_inverse(word_multiply(a, b)) ==
          word_multiply(word_inverse(b), word_inverse(a)));
  }
}

TEST_CASE("abelianization is the exponent sum and is a homomorphism") {
  const Word w = Word::from_letters({1, 2, 1, -2, -1, -2});
  CHECK(abelianize_word(w, 2) == std::vector<int>{1, -1});

  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Word a = free_reduce(random_letters(rng, 3, 10));
    const Word b = free_reduce(random_letters(rng, 3, 10));
    const auto ab_a = abelianize_word(a, 3);
    const auto ab_b = abelianize_word(b, 3);
    const auto ab_prod = abelianize_word(word_multiply(a, b), 3);
    for (int i = 0; i < 3; ++i) CHECK(ab_prod[static_cast<std::size_t>(i)] ==
                                      ab_a[static_cast<std::size_t>(i)] +
                                          ab_b[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("word rendering uses run-length exponents") {
  const std::vector<std::string> names{"x", "y"};
  CHECK(Word().to_text(names) == "1");
  CHECK(Word::from_letters({1, 1, -2, 1}).to_text(names) == "x^2 y^-1 x");
  CHECK(Word::from_letters({-2, -2, -2}).to_text(names) == "y^-3");
}

TEST_CASE("presentation parsing: grammar basics") {
  const Presentation pres = parse_presentation(
      "gens: x, y\n"
      "rels: x y x y^-1 x^-1 y^-1\n");
  CHECK(pres.generators == std::vector<std::string>{"x", "y"});
  REQUIRE(pres.relator_count() == 1);
  CHECK(pres.relators[0] == Word::from_letters({1, 2, 1, -2, -1, -2}));
}

TEST_CASE("presentation parsing: multiple relators, separators, exponents") {
  const Presentation pres = parse_presentation(
      "gens: a, b, c\n"
      "rels:\n"
      "  a^2 b^-3 ;\n"
      "  c^0 a b\n"
      "  b c b^-1 c^-1\n");
  REQUIRE(pres.relator_count() == 3);
  CHECK(pres.relators[0] == Word::from_letters({1, 1, -2, -2, -2}));
  // c^0 contributes nothing.
  CHECK(pres.relators[1] == Word::from_letters({1, 2}));
  CHECK(pres.relators[2] == Word::from_letters({2, 3, -2, -3}));
}

TEST_CASE("presentation parsing: no relators clause means a free group") {
  const Presentation pres = parse_presentation("gens: x, y, z\n");
  CHECK(pres.rank() == 3);
  CHECK(pres.relator_count() == 0);
}

TEST_CASE("presentation parsing: error positions are exact") {
  try {
    parse_presentation("gens: x, y\nrels: x q\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 9);
  }

  try {
    parse_presentation("gens: x, x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 10);
  }

  CHECK_THROWS_AS(parse_presentation("rels: x\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens: x\nrels: x^\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation(""), ParseError);
}

TEST_CASE("presentation text round-trips through the parser") {
  const char* sources[] = {
      "gens: x, y\nrels: x y x y^-1 x^-1 y^-1\n",
      "gens: a, b, c\nrels:\n a^2 b^-3 ;\n b c b^-1 c^-1\n",
      "gens: u, v\n",
  };
  for (const char* src : sources) {
    const Presentation p = parse_presentation(src);
    const Presentation q = parse_presentation(p.to_text());
    CHECK(p == q);
  }
}

TEST_CASE("parse_word resolves names against the presentation") {
  const Presentation pres = parse_presentation("gens: x, y\n");
  CHECK(parse_word("x y^-2 x", pres) == Word::from_letters({1, -2, -2, 1}));
  CHECK_THROWS_AS(parse_word("x z", pres), ParseError);
}
