#pragma once

#include <cstddef>
#include <vector>

#include "sharpmap/polynomial.hpp"

namespace sharpmap::linear {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by exact Gaussian elimination.
std::size_t rank(RationalMatrix a);

/// Outcome of maximising min_i x_i subject to A x = b.
struct PositiveSolution {
  /// A strictly positive solution exists.
  bool feasible = false;
  /// Optimal vertex: the strictly positive x when feasible.
  std::vector<Rational> x;
  /// Optimal value of min_i x_i, capped at 1 (meaningful when feasible).
  Rational min_entry;
  /// cols(A) - rank(A): dimension of the solution set when feasible.
  std::size_t freedom = 0;
};

/// Decides whether A x = b has a solution with every x_i > 0.
///
/// Solved as the linear program  max t  s.t.  A x = b, x_i >= t, 0 <= t <= 1
/// by a two-phase exact simplex with Bland's rule, so the returned vertex
/// is a deterministic function of (A, b).
PositiveSolution max_min_positive(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace sharpmap::linear
