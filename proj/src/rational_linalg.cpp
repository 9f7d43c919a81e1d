#include "hodge/rational_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace hodge::linalg {

std::size_t row_reduce(Matrix &m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows && sgn(m(pivot, c)) == 0)
      ++pivot;
    if (pivot == m.rows)
      continue;
    if (pivot != r)
      for (std::size_t j = 0; j < m.cols; ++j)
        std::swap(m(r, j), m(pivot, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols; ++j)
      m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0)
        continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols; ++j)
        m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t rank(Matrix m) { return row_reduce(m); }

std::vector<Rational> solve(const Matrix &a, const std::vector<Rational> &b) {
  if (a.rows != a.cols || b.size() != a.rows)
    throw std::invalid_argument("linalg::solve: shape mismatch");
  const std::size_t n = a.rows;
  Matrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  if (row_reduce(aug) < n || (n > 0 && sgn(aug(n - 1, n - 1)) == 0))
    throw std::domain_error("linalg::solve: singular matrix");
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = aug(i, n);
  return x;
}

} // namespace hodge::linalg
