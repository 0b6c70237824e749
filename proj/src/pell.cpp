#include "sharpmap/pell.hpp"

namespace sharpmap::pell {

namespace {

void check_lambda(const Integer& lambda) {
  if (lambda < 2) throw InvalidLambda("lambda must be at least 2");
  if (mpz_perfect_square_p(lambda.get_mpz_t()) != 0) {
    throw InvalidLambda("lambda must not be a perfect square: " + lambda.get_str());
  }
}

}  // namespace

PellSolution fundamental_solution(const Integer& lambda) {
  check_lambda(lambda);
  Integer a0;
  mpz_sqrt(a0.get_mpz_t(), lambda.get_mpz_t());

  // sqrt(lambda) = [a0; a1, a2, ...] with the usual (m, q, a) recurrence;
  // convergents p/q are tested until p^2 - lambda q^2 = 1.
  Integer m(0), q(1), a(a0);
  Integer p_prev(1), p(a0);
  Integer k_prev(0), k(1);
  for (;;) {
    if (p * p - lambda * k * k == 1) return PellSolution{p, k, lambda, 1};
    m = q * a - m;
    q = (lambda - m * m) / q;
    a = (a0 + m) / q;
    Integer p_next = a * p + p_prev;
    Integer k_next = a * k + k_prev;
    p_prev = p;
    p = p_next;
    k_prev = k;
    k = k_next;
  }
}

std::vector<PellSolution> solutions(const Integer& lambda, std::uint32_t count) {
  std::vector<PellSolution> out;
  if (count == 0) return out;
  const PellSolution first = fundamental_solution(lambda);
  out.push_back(first);
  for (std::uint32_t i = 2; i <= count; ++i) {
    const PellSolution& prev = out.back();
    Integer d = first.d * prev.d + lambda * first.k * prev.k;
    Integer k = first.d * prev.k + first.k * prev.d;
    out.push_back(PellSolution{d, k, lambda, i});
  }
  return out;
}

PellSolution solution_at(const Integer& lambda, std::uint32_t m) {
  if (m == 0) throw Error("Pell index must be positive");
  return solutions(lambda, m).back();
}

unsigned congruence_class(std::uint32_t m) {
  Integer d = solution_at(Integer(12), m).d;
  Integer r = d % 4;
  return static_cast<unsigned>(r.get_ui());
}

std::vector<GeneralizedPellSolution> generalized_solutions(const Integer& D, const Integer& N,
                                                           std::uint64_t b_bound) {
  if (b_bound == 0) throw Error("b_bound must be positive");
  std::vector<GeneralizedPellSolution> out;
  Integer b, a_sq, a;
  for (std::uint64_t bi = 1; bi <= b_bound; ++bi) {
    b = static_cast<unsigned long>(bi);
    a_sq = N + D * b * b;
    if (a_sq <= 0 || mpz_perfect_square_p(a_sq.get_mpz_t()) == 0) continue;
    mpz_sqrt(a.get_mpz_t(), a_sq.get_mpz_t());
    out.push_back(GeneralizedPellSolution{a, b, D, N});
  }
  return out;
}

}  // namespace sharpmap::pell
