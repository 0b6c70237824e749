#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "sharpmap/pell.hpp"

using namespace sharpmap;

namespace {

bool is_square(const Integer& z) { return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0; }

// Smallest k >= 1 with lambda k^2 + 1 a perfect square, by plain scan.
std::pair<Integer, Integer> scan_fundamental(long lambda) {
  for (Integer k = 1;; ++k) {
    Integer t = lambda * k * k + 1;
    if (is_square(t)) return {sqrt(t), k};
  }
}

// (d_1 + k_1 sqrt(lambda))^m expanded with binomials.
std::pair<Integer, Integer> binomial_power(const Integer& d1, const Integer& k1, long lambda,
                                           unsigned m) {
  Integer d = 0, k = 0, c;
  for (unsigned i = 0; i <= m; ++i) {
    mpz_bin_uiui(c.get_mpz_t(), m, i);
    Integer dp, kp, lp;
    mpz_pow_ui(dp.get_mpz_t(), d1.get_mpz_t(), m - i);
    mpz_pow_ui(kp.get_mpz_t(), k1.get_mpz_t(), i);
    mpz_ui_pow_ui(lp.get_mpz_t(), static_cast<unsigned long>(lambda), i / 2);
    Integer term = c * dp * kp * lp;
    if (i % 2 == 0) d += term;
    else k += term;
  }
  return {d, k};
}

}  // namespace

TEST_CASE("fundamental solutions match a plain scan") {
  for (long lambda = 2; lambda <= 20; ++lambda) {
    if (is_square(Integer(lambda))) {
      CHECK_THROWS_AS(pell::fundamental_solution(Integer(lambda)), pell::InvalidLambda);
      continue;
    }
    auto [d, k] = scan_fundamental(lambda);
    auto sol = pell::fundamental_solution(Integer(lambda));
    CHECK(sol.d == d);
    CHECK(sol.k == k);
    CHECK(sol.index == 1);
  }
  CHECK_THROWS_AS(pell::fundamental_solution(Integer(1)), pell::InvalidLambda);
  CHECK_THROWS_AS(pell::fundamental_solution(Integer(-3)), pell::InvalidLambda);
}

TEST_CASE("recurrence agrees with binomial powers") {
  for (long lambda : {2L, 3L, 5L, 7L, 12L, 13L, 19L}) {
    auto sols = pell::solutions(Integer(lambda), 12);
    REQUIRE(sols.size() == 12);
    for (unsigned m = 1; m <= 12; ++m) {
      auto [d, k] = binomial_power(sols[0].d, sols[0].k, lambda, m);
      CHECK(sols[m - 1].d == d);
      CHECK(sols[m - 1].k == k);
      CHECK(sols[m - 1].index == m);
      CHECK(d * d - lambda * k * k == 1);
      CHECK(pell::solution_at(Integer(lambda), m).d == d);
    }
  }
}

TEST_CASE("lambda 12 degrees") {
  auto sols = pell::solutions(Integer(12), 5);
  std::vector<std::string> d;
  for (const auto& s : sols) d.push_back(s.d.get_str());
  CHECK(d == std::vector<std::string>{"7", "97", "1351", "18817", "262087"});
  CHECK(sols[0].k == 2);
}

TEST_CASE("lambda 12 congruence classes") {
  for (unsigned m = 1; m <= 40; ++m) {
    Integer r = pell::solution_at(Integer(12), m).d % 4;
    CHECK(pell::congruence_class(m) == r.get_ui());
    CHECK(pell::congruence_class(m) == (m % 2 == 1 ? 3u : 1u));
  }
}

TEST_CASE("generalized scan matches brute force") {
  for (long D : {2L, 3L, 8L}) {
    for (long N : {-7L, -1L, 1L, 7L}) {
      std::set<std::pair<long, long>> expected;
      for (long b = 1; b <= 80; ++b)
        for (long a = 1; a * a <= D * b * b + N + 1000; ++a)
          if (a * a - D * b * b == N) expected.insert({a, b});
      std::set<std::pair<long, long>> got;
      for (const auto& s : pell::generalized_solutions(Integer(D), Integer(N), 80)) {
        got.insert({s.a.get_si(), s.b.get_si()});
      }
      CHECK(got == expected);
    }
  }
}

TEST_CASE("b-values of a^2 - 8 b^2 = -7") {
  std::vector<long> bs;
  for (const auto& s : pell::generalized_solutions(Integer(8), Integer(-7), 64)) {
    bs.push_back(s.b.get_si());
  }
  CHECK(bs == std::vector<long>{1, 2, 4, 11, 23, 64});
}
