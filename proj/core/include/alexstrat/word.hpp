#pragma once

#include <span>
#include <string>
#include <vector>

namespace alexstrat {

// A freely reduced word in a free group. Letters are nonzero signed integers:
// +k is the k-th generator (1-based), -k its inverse. Construction always
// reduces, so two Words are equal in the free group iff their letter vectors
// are equal.
class Word {
 public:
  Word() = default;

  static Word from_letters(std::span<const int> letters);
  static Word from_letters(std::initializer_list<int> letters) {
    return from_letters(std::span<const int>(letters.begin(), letters.size()));
  }

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;

  bool operator==(const Word&) const = default;

  // Render with run-length exponents against generator names, e.g.
  // "x y^-1 x^2"; the empty word renders as "1".
  std::string to_text(std::span<const std::string> names) const;

 private:
  struct Reduced {};
  Word(Reduced, std::vector<int> letters) : letters_(std::move(letters)) {}

  std::vector<int> letters_;

  friend Word free_reduce(std::span<const int> letters);
};

// Free reduction of an arbitrary letter sequence (cancels adjacent x x^-1
// pairs until none remain).
Word free_reduce(std::span<const int> letters);

// Product in the free group: reduced concatenation.
Word word_multiply(const Word& a, const Word& b);

Word word_inverse(const Word& w);

// Exponent-sum vector of length `rank` (image in Z^rank).
std::vector<int> abelianize_word(const Word& w, int rank);

// Throws InputError unless every letter index lies in 1..rank.
void validate_letters(std::span<const int> letters, int rank);

}  // namespace alexstrat
