#include "alexstrat/fox.hpp"

#include <cstdlib>

namespace alexstrat {

std::vector<LaurentPoly> fox_gradient_letters(std::span<const int> letters, int rank) {
  validate_letters(letters, rank);
  std::vector<LaurentPoly> grad(static_cast<std::size_t>(rank), LaurentPoly::zero(rank));
  Exponents prefix(static_cast<std::size_t>(rank), 0);
  for (int l : letters) {
    const std::size_t g = static_cast<std::size_t>(std::abs(l)) - 1;
    if (l > 0) {
      grad[g].add_term(prefix, Int(1));
      prefix[g] += 1;
    } else {
      prefix[g] -= 1;
      grad[g].add_term(prefix, Int(-1));
    }
  }
  return grad;
}

std::vector<LaurentPoly> fox_gradient(const Word& w, int rank) {
  return fox_gradient_letters(w.letters(), rank);
}

LaurentPoly fox_partial(const Word& w, int gen_index, int rank) {
  return fox_gradient(w, rank)[static_cast<std::size_t>(gen_index) - 1];
}

AlexanderMatrix alexander_matrix(const Presentation& pres) {
  const int r = pres.rank();
  AlexanderMatrix m;
  m.presentation = pres;
  m.entries.assign(static_cast<std::size_t>(r), {});
  for (auto& row : m.entries)
    row.assign(static_cast<std::size_t>(pres.relator_count()), LaurentPoly::zero(r));
  for (int j = 0; j < pres.relator_count(); ++j) {
    auto grad = fox_gradient(pres.relators[static_cast<std::size_t>(j)], r);
    for (int i = 0; i < r; ++i)
      m.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          std::move(grad[static_cast<std::size_t>(i)]);
  }
  return m;
}

std::vector<std::string> variable_names(const Presentation& pres) {
  std::vector<std::string> names;
  names.reserve(pres.generators.size());
  for (const auto& g : pres.generators) names.push_back("t_" + g);
  return names;
}

AbelianizedView abelianized_view(const AlexanderMatrix& m, const AbelianizationData& ab) {
  const int r = m.rank();
  const int d = ab.betti;
  const int pivots = r - d;
  AbelianizedView view;
  if (d == 1) {
    view.names = {"t"};
  } else {
    for (int k = 1; k <= d; ++k) view.names.push_back("t_" + std::to_string(k));
  }

  // Rows pivots..r-1 of U are the coordinates of the free quotient Z^d:
  // a monomial t^lambda maps to s^{U_free * lambda}.
  view.entries.assign(static_cast<std::size_t>(r), {});
  Exponents image(static_cast<std::size_t>(d), 0);
  for (int i = 0; i < r; ++i) {
    auto& row = view.entries[static_cast<std::size_t>(i)];
    row.assign(static_cast<std::size_t>(m.relator_count()), LaurentPoly::zero(d));
    for (int j = 0; j < m.relator_count(); ++j) {
      for (const auto& [e, c] : m.entry(i, j).terms()) {
        for (int k = 0; k < d; ++k) {
          Int acc = 0;
          for (int l = 0; l < r; ++l)
            acc += ab.snf.u(static_cast<std::size_t>(pivots + k), static_cast<std::size_t>(l)) *
                   e[static_cast<std::size_t>(l)];
          image[static_cast<std::size_t>(k)] = acc.convert_to<int>();
        }
        row[static_cast<std::size_t>(j)].add_term(image, c);
      }
    }
  }
  return view;
}

}  // namespace alexstrat
