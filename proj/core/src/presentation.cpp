#include "alexstrat/presentation.hpp"

namespace alexstrat {

std::string Presentation::to_text() const {
  std::string out = "gens: ";
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i) out += ", ";
    out += generators[i];
  }
  out += "\n";
  if (!relators.empty()) {
    out += "rels: ";
    bool first = true;
    for (const Word& rel : relators) {
      // A freely trivial relator has no word-grammar spelling; it is dropped.
      if (rel.empty()) continue;
      if (!first) out += " ; ";
      out += rel.to_text(generators);
      first = false;
    }
    out += "\n";
  }
  return out;
}

}  // namespace alexstrat
