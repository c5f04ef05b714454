#pragma once

#include <string>
#include <vector>

#include "alexstrat/word.hpp"

namespace alexstrat {

// A finite presentation <x_1..x_r : R_1..R_s>. Generator names are unique
// identifiers; relators are freely reduced words over them.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  int rank() const { return static_cast<int>(generators.size()); }
  int relator_count() const { return static_cast<int>(relators.size()); }

  bool operator==(const Presentation&) const = default;

  // Text form accepted back by parse_presentation.
  std::string to_text() const;
};

// Parses the two-clause presentation grammar:
//
//   gens: x, y
//   rels: x y x^-1 y^-1 ; y^3
//
// Clauses may be separated by newlines or semicolons; `rels:` may be absent
// or empty (free group). Word atoms are `name`, `name^-1`, `name^<int>`.
// Throws ParseError with a 1-based line/column on malformed input.
Presentation parse_presentation(const std::string& text);

// Parses a single word against a presentation's generator set (same atom
// grammar as relators). Used for CLI word arguments.
Word parse_word(const std::string& text, const Presentation& pres);

}  // namespace alexstrat
