#pragma once

#include "hodge/polynomial.hpp"

#include <vector>

namespace hodge::linalg {

// Dense row-major rational matrix.
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Rational> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Rational(0)) {}
  Rational &operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Rational &operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Reduces m to reduced row echelon form in place and returns the rank.
std::size_t row_reduce(Matrix &m);

std::size_t rank(Matrix m);

// Solves a x = b for square nonsingular a by Gauss-Jordan elimination.
// Throws std::domain_error if a is singular.
std::vector<Rational> solve(const Matrix &a, const std::vector<Rational> &b);

} // namespace hodge::linalg
