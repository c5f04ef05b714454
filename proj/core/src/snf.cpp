#include "alexstrat/snf.hpp"

namespace alexstrat {

int SmithDecomposition::diag_rank() const {
  const std::size_t n = std::min(d.rows(), d.cols());
  int r = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (d(i, i) != 0) ++r;
  return r;
}

std::vector<Int> SmithDecomposition::invariant_factors() const {
  std::vector<Int> out;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

namespace {

// Least-magnitude nonzero entry of d in the trailing submatrix.
bool find_pivot(const IntMat& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Int mag = abs(d(i, j));
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

SmithDecomposition smith_normal_form(const IntMat& a) {
  const std::size_t n = a.rows(), m = a.cols();
  SmithDecomposition s{IntMat::identity(n), a, IntMat::identity(m)};
  IntMat& d = s.d;
  IntMat& u = s.u;
  IntMat& v = s.v;

  auto row_op = [&](std::size_t dst, std::size_t src, const Int& q) {
    // row_dst -= q * row_src, mirrored in U.
    for (std::size_t j = 0; j < m; ++j) d(dst, j) -= q * d(src, j);
    for (std::size_t j = 0; j < n; ++j) u(dst, j) -= q * u(src, j);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < n; ++i) d(i, dst) -= q * d(i, src);
    for (std::size_t i = 0; i < m; ++i) v(i, dst) -= q * v(i, src);
  };

  const std::size_t steps = std::min(n, m);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pi, pj;
    if (!find_pivot(d, t, pi, pj)) break;
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);

    for (;;) {
      // Clear column t. A nonzero remainder becomes a smaller pivot, so the
      // loop terminates (pivot magnitude strictly decreases).
      bool disturbed = false;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        row_op(i, t, q);
        if (d(i, t) != 0) {
          d.swap_rows(t, i);
          u.swap_rows(t, i);
          disturbed = true;
        }
      }
      if (disturbed) continue;
      for (std::size_t j = t + 1; j < m; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        col_op(j, t, q);
        if (d(t, j) != 0) {
          d.swap_cols(t, j);
          v.swap_cols(t, j);
          disturbed = true;
        }
      }
      if (disturbed) continue;

      // Pivot must divide every remaining entry; if not, fold the offending
      // row in and restart the clearing loop with a smaller pivot ahead.
      bool fixed = true;
      for (std::size_t i = t + 1; i < n && fixed; ++i)
        for (std::size_t j = t + 1; j < m && fixed; ++j)
          if (d(i, j) % d(t, t) != 0) {
            row_op(t, i, Int(-1));  // add row i to row t
            fixed = false;
          }
      if (fixed) break;
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < m; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < n; ++j) u(t, j) = -u(t, j);
    }
  }
  return s;
}

}  // namespace alexstrat
