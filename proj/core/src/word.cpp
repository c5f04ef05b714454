#include "alexstrat/word.hpp"

#include <cstdlib>

#include "alexstrat/errors.hpp"

namespace alexstrat {

Word Word::from_letters(std::span<const int> letters) {
  return free_reduce(letters);
}

Word Word::inverse() const {
  // Reversal of a reduced word is reduced; no second pass needed.
  std::vector<int> rev;
  rev.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    rev.push_back(-*it);
  return Word(Reduced{}, std::move(rev));
}

std::string Word::to_text(std::span<const std::string> names) const {
  if (letters_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
    const int letter = letters_[i];
    const long run = static_cast<long>(j - i);
    const long exp = letter > 0 ? run : -run;
    if (!out.empty()) out += ' ';
    out += names[static_cast<std::size_t>(std::abs(letter)) - 1];
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out;
}

Word free_reduce(std::span<const int> letters) {
  std::vector<int> stack;
  stack.reserve(letters.size());
  for (int l : letters) {
    if (l == 0) throw InputError("word letter 0 is invalid");
    if (!stack.empty() && stack.back() == -l)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return Word(Word::Reduced{}, std::move(stack));
}

Word word_multiply(const Word& a, const Word& b) {
  std::vector<int> cat;
  cat.reserve(a.size() + b.size());
  cat.insert(cat.end(), a.letters().begin(), a.letters().end());
  cat.insert(cat.end(), b.letters().begin(), b.letters().end());
  return free_reduce(cat);
}

Word word_inverse(const Word& w) { return w.inverse(); }

std::vector<int> abelianize_word(const Word& w, int rank) {
  validate_letters(w.letters(), rank);
  std::vector<int> e(static_cast<std::size_t>(rank), 0);
  for (int l : w.letters())
    e[static_cast<std::size_t>(std::abs(l)) - 1] += l > 0 ? 1 : -1;
  return e;
}

void validate_letters(std::span<const int> letters, int rank) {
  for (int l : letters) {
    if (l == 0 || std::abs(l) > rank)
      throw InputError("word letter index " + std::to_string(l) +
                       " outside 1.." + std::to_string(rank));
  }
}

}  // namespace alexstrat
