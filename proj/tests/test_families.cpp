#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sharpmap/families.hpp"
#include "sharpmap/poly_core.hpp"

using namespace sharpmap;

namespace {

Integer binom(unsigned long n, unsigned long k) {
  Integer c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return c;
}

// f_d from ((x + r)/2)^d + ((x - r)/2)^d + (-1)^{d+1} y^d with r^2 = x^2 + 4y:
// the odd powers of r cancel and r^{2i} = (x^2 + 4y)^i is expanded directly.
Polynomial radical_oracle(std::uint32_t d) {
  Polynomial p(2);
  for (std::uint32_t j = 0; j <= d; j += 2) {
    const std::uint32_t i = j / 2;
    for (std::uint32_t t = 0; t <= i; ++t) {
      Integer four;
      mpz_ui_pow_ui(four.get_mpz_t(), 4, t);
      Rational c(binom(d, j) * binom(i, t) * four);
      Integer den;
      mpz_ui_pow_ui(den.get_mpz_t(), 2, d - 1);
      c /= Rational(den);
      p.add_term(ExponentVector{d - j + 2 * (i - t), t}, c);
    }
  }
  p.add_term(ExponentVector{0, d}, Rational(d % 2 == 1 ? 1 : -1));
  return p;
}

}  // namespace

TEST_CASE("recurrence matches the radical expansion") {
  for (std::uint32_t d = 1; d <= 40; ++d) CHECK(families::f(d) == radical_oracle(d));
}

TEST_CASE("small members") {
  CHECK(families::f(1) == Polynomial(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
  CHECK(families::f(3) == Polynomial(2, {{{3, 0}, 1}, {{1, 1}, 3}, {{0, 3}, 1}}));
  CHECK(families::f(5) ==
        Polynomial(2, {{{5, 0}, 1}, {{3, 1}, 5}, {{1, 2}, 5}, {{0, 5}, 1}}));
  CHECK(families::f(7).to_string() == "x^7 + y^7 + 7*x^5*y + 14*x^3*y^2 + 7*x*y^3");
  CHECK_THROWS_AS(families::f(0), families::InvalidDegree);
}

TEST_CASE("odd members are sharp") {
  for (std::uint32_t d = 1; d <= 61; d += 2) {
    Polynomial p = families::f(d);
    CHECK(is_in_H(p));
    CHECK(p.degree() == d);
    CHECK(p.term_count() == (d + 3) / 2);
  }
}

TEST_CASE("only f_1 and f_3 are symmetric") {
  for (std::uint32_t d = 1; d <= 21; d += 2) {
    const Polynomial p = families::f(d);
    CHECK((p == p.swapped()) == (d <= 3));
  }
}

TEST_CASE("K values are the coefficients of f_{2r+1}") {
  for (std::uint32_t r = 1; r <= 30; ++r) {
    Polynomial p = radical_oracle(2 * r + 1);
    for (std::uint32_t s = 1; s <= r; ++s) {
      CHECK(Rational(families::K(r, s)) == p.coefficient({2 * r + 1 - 2 * s, s}));
    }
    CHECK_THROWS_AS(families::K(r, 0), families::RangeError);
    CHECK_THROWS_AS(families::K(r, r + 1), families::RangeError);
  }
  CHECK(families::K(5, 1) == 11);
  CHECK(families::K(5, 2) == 44);
  CHECK(families::K(5, 3) == 77);
}

TEST_CASE("coefficient ratio") {
  for (std::uint32_t r = 2; r <= 40; ++r) {
    for (std::uint32_t s = 1; s + 1 <= r; ++s) {
      Rational expected(families::K(r, s + 1), families::K(r, s));
      expected.canonicalize();
      CHECK(families::coefficient_ratio(r, s) == expected);
    }
  }
  CHECK(families::coefficient_ratio(3, 1) == 2);
  CHECK(families::coefficient_ratio(3, 2) == Rational(1, 2));
  CHECK(families::coefficient_ratio(5, 2) == Rational(7, 4));
  CHECK_THROWS_AS(families::coefficient_ratio(3, 3), families::RangeError);
}

TEST_CASE("even family") {
  for (std::uint32_t k = 1; k <= 10; ++k) {
    auto members = families::even_family(k);
    REQUIRE(members.size() == k);
    for (std::size_t i = 0; i < k; ++i) {
      CHECK(is_in_H(members[i].poly));
      CHECK(members[i].poly.degree() == 2 * k);
      CHECK(members[i].poly.term_count() == k + 2);
      CHECK(members[i].degree == 2 * k);
      for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(equivalent(members[i].poly, members[j].poly));
    }
  }
}

TEST_CASE("degree 2 and 4 witnesses") {
  const Polynomial d2 = Polynomial(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 1}, 1}});
  auto two = families::even_family(1);
  CHECK(equivalent(two[0].poly, d2));

  const Polynomial u1 = Polynomial(2, {{{4, 0}, 1}, {{3, 1}, 1}, {{1, 1}, 3}, {{0, 3}, 1}});
  const Polynomial u2 = Polynomial(2, {{{4, 0}, 1}, {{2, 1}, 3}, {{1, 3}, 1}, {{0, 1}, 1}});
  auto four = families::even_family(2);
  auto found = [&](const Polynomial& p) {
    for (const auto& e : four) if (e.poly == p) return true;
    return false;
  };
  CHECK(found(u1));
  CHECK(found(u2));
  CHECK_FALSE(equivalent(u1, u2));
}
