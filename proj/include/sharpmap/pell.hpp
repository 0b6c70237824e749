#pragma once

#include <cstdint>
#include <vector>

#include "sharpmap/polynomial.hpp"

namespace sharpmap::pell {

class InvalidLambda : public Error {
 public:
  using Error::Error;
};

/// (d, k) with d^2 - lambda k^2 = 1, the index-th power of the fundamental solution.
struct PellSolution {
  Integer d;
  Integer k;
  Integer lambda;
  std::uint32_t index = 1;
};

/// (a, b) with a^2 - D b^2 = N.
struct GeneralizedPellSolution {
  Integer a;
  Integer b;
  Integer D;
  Integer N;
};

/// Minimal positive solution of d^2 - lambda k^2 = 1 from the continued
/// fraction of sqrt(lambda). Throws InvalidLambda for lambda < 2 or squares.
PellSolution fundamental_solution(const Integer& lambda);

/// (d_m, k_m) from d_{m+1} = d_1 d_m + lambda k_1 k_m, k_{m+1} = d_1 k_m + k_1 d_m.
PellSolution solution_at(const Integer& lambda, std::uint32_t m);

/// Solutions 1..count in one pass.
std::vector<PellSolution> solutions(const Integer& lambda, std::uint32_t count);

/// d_m mod 4 for lambda = 12.
unsigned congruence_class(std::uint32_t m);

/// Every solution of a^2 - D b^2 = N with a >= 1 and 1 <= b <= b_bound,
/// by exact scan over b; sorted by b.
std::vector<GeneralizedPellSolution> generalized_solutions(const Integer& D, const Integer& N,
                                                           std::uint64_t b_bound);

}  // namespace sharpmap::pell
