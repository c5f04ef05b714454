#include "alexstrat/matrix.hpp"

#include <cstdlib>

namespace alexstrat {

namespace {

// Pick the remaining entry of least nonzero magnitude as pivot; keeps the
// fraction-free intermediates small on the sparse matrices seen here.
bool find_pivot(const IntMat& m, std::size_t from, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = from; i < m.rows(); ++i)
    for (std::size_t j = from; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      Int mag = abs(m(i, j));
      if (!found || mag < best) {
        found = true;
        best = mag;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

int bareiss_rank(IntMat m) {
  std::size_t steps = std::min(m.rows(), m.cols());
  Int prev = 1;
  std::size_t t = 0;
  for (; t < steps; ++t) {
    std::size_t pi = t, pj = t;
    if (!find_pivot(m, t, pi, pj)) break;
    m.swap_rows(t, pi);
    m.swap_cols(t, pj);
    const Int pivot = m(t, t);
    for (std::size_t i = t + 1; i < m.rows(); ++i) {
      for (std::size_t j = t + 1; j < m.cols(); ++j)
        m(i, j) = (pivot * m(i, j) - m(i, t) * m(t, j)) / prev;
      m(i, t) = 0;
    }
    prev = pivot;
  }
  return static_cast<int>(t);
}

Int determinant(IntMat m) {
  if (m.rows() != m.cols()) throw std::logic_error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Int(1);
  Int prev = 1;
  int sign = 1;
  for (std::size_t t = 0; t + 1 < n; ++t) {
    // Row pivoting only, to keep the sign bookkeeping simple.
    std::size_t pi = t;
    while (pi < n && m(pi, t) == 0) ++pi;
    if (pi == n) return Int(0);
    if (pi != t) {
      m.swap_rows(t, pi);
      sign = -sign;
    }
    const Int pivot = m(t, t);
    for (std::size_t i = t + 1; i < n; ++i) {
      for (std::size_t j = t + 1; j < n; ++j)
        m(i, j) = (pivot * m(i, j) - m(i, t) * m(t, j)) / prev;
      m(i, t) = 0;
    }
    prev = pivot;
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

}  // namespace alexstrat
