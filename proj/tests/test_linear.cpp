#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "sharpmap/linear.hpp"

using namespace sharpmap;
using linear::RationalMatrix;

namespace {

RationalMatrix random_matrix(std::size_t rows, std::size_t cols, std::int64_t span) {
  RationalMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = testgen::uniform(-span, span);
  return a;
}

RationalMatrix product(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

// Unit lower triangular times unit upper triangular: always invertible.
RationalMatrix invertible(std::size_t n) {
  RationalMatrix l(n, n), u(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    l(i, i) = 1;
    u(i, i) = 1;
    for (std::size_t j = 0; j < i; ++j) l(i, j) = testgen::uniform(-3, 3);
    for (std::size_t j = i + 1; j < n; ++j) u(i, j) = testgen::uniform(-3, 3);
  }
  return product(l, u);
}

}  // namespace

TEST_CASE("rank of matrices with planted rank") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = static_cast<std::size_t>(testgen::uniform(1, 6));
    const auto n = static_cast<std::size_t>(testgen::uniform(1, 6));
    const auto r = static_cast<std::size_t>(testgen::uniform(0, std::min(m, n)));
    RationalMatrix core(m, n);
    for (std::size_t i = 0; i < r; ++i) core(i, i) = 1;
    RationalMatrix a = product(product(invertible(m), core), invertible(n));
    CHECK(linear::rank(a) == r);
  }
}

TEST_CASE("positive solutions satisfy the system") {
  int feasible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = static_cast<std::size_t>(testgen::uniform(1, 4));
    const auto n = static_cast<std::size_t>(testgen::uniform(1, 6));
    RationalMatrix a = random_matrix(m, n, 3);
    std::vector<Rational> x0(n), b(m);
    // plant a positive solution half of the time
    const bool planted = testgen::uniform(0, 1) == 1;
    for (auto& v : x0) v = Rational(testgen::uniform(1, 5), 1);
    for (std::size_t i = 0; i < m; ++i) {
      if (planted) {
        for (std::size_t j = 0; j < n; ++j) b[i] += a(i, j) * x0[j];
      } else {
        b[i] = testgen::uniform(-4, 4);
      }
    }
    auto sol = linear::max_min_positive(a, b);
    if (planted) CHECK(sol.feasible);
    if (!sol.feasible) continue;
    ++feasible;
    REQUIRE(sol.x.size() == n);
    for (std::size_t i = 0; i < m; ++i) {
      Rational row(0);
      for (std::size_t j = 0; j < n; ++j) row += a(i, j) * sol.x[j];
      CHECK(row == b[i]);
    }
    for (const auto& v : sol.x) CHECK(v > 0);
    CHECK(sol.freedom == n - linear::rank(a));
  }
  CHECK(feasible > 50);
}

TEST_CASE("infeasible systems are recognised") {
  RationalMatrix a(1, 2);
  a(0, 0) = 1;
  a(0, 1) = 1;
  CHECK_FALSE(linear::max_min_positive(a, {Rational(0)}).feasible);
  CHECK_FALSE(linear::max_min_positive(a, {Rational(-1)}).feasible);
  RationalMatrix b(2, 2);
  b(0, 0) = 1;
  b(1, 0) = 1;
  CHECK_FALSE(linear::max_min_positive(b, {Rational(1), Rational(2)}).feasible);
  // x1 - x2 = 0 and x1 = 0: only the zero solution
  RationalMatrix c(2, 2);
  c(0, 0) = 1;
  c(0, 1) = -1;
  c(1, 0) = 1;
  CHECK_FALSE(linear::max_min_positive(c, {Rational(0), Rational(0)}).feasible);
}

TEST_CASE("redundant rows are harmless") {
  RationalMatrix a(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    a(0, j) = 1;
    a(1, j) = 2;
    a(2, j) = j;
  }
  auto sol = linear::max_min_positive(a, {Rational(3), Rational(6), Rational(3)});
  CHECK(sol.feasible);
  CHECK(sol.freedom == 1);
}
