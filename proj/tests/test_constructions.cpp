#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sharpmap/constructions.hpp"
#include "sharpmap/families.hpp"
#include "sharpmap/poly_core.hpp"

using namespace sharpmap;
namespace con = sharpmap::constructions;

namespace {

// Rebuilds the result from f_d and the trace alone.
Polynomial replay(std::uint32_t d, const con::Construction& c) {
  Polynomial p = families::f(d);
  for (const auto& step : c.trace) {
    for (const auto& [e, k] : step.consumed) p.add_term(e, -k);
    for (const auto& [e, k] : step.produced) p.add_term(e, k);
  }
  return p;
}

Integer pow2(unsigned long e) {
  Integer z;
  mpz_ui_pow_ui(z.get_mpz_t(), 2, e);
  return z;
}

}  // namespace

TEST_CASE("ratio-2 sites sit at the Pell degrees") {
  std::vector<std::uint32_t> degrees;
  for (std::uint32_t d = 3; d <= 3000; d += 2) {
    auto s = con::pell_ratio_site(d);
    if (!s) continue;
    degrees.push_back(d);
    const std::uint32_t r = (d - 1) / 2;
    CHECK(families::K(r, *s + 1) == 2 * families::K(r, *s));
  }
  CHECK(degrees == std::vector<std::uint32_t>{7, 97, 1351});
}

TEST_CASE("q at degree 7") {
  auto c = con::q(7);
  CHECK(c.poly == Polynomial(2, {{{7, 0}, 1}, {{3, 3}, 7}, {{3, 1}, 7}, {{1, 3}, 7}, {{0, 7}, 1}}));
  CHECK_FALSE(equivalent(c.poly, families::f(7)));
  CHECK(replay(7, c) == c.poly);
  for (const auto& step : c.trace) CHECK(step.valid());
}

TEST_CASE("q at degree 97") {
  auto c = con::q(97);
  CHECK(is_in_H(c.poly));
  CHECK(c.poly.degree() == 97);
  CHECK(c.poly.term_count() == 50);
  CHECK_FALSE(equivalent(c.poly, families::f(97)));
  CHECK(replay(97, c) == c.poly);
}

TEST_CASE("q needs a ratio-2 site") {
  CHECK_THROWS_AS(con::q(9), con::NoRatioSite);
  CHECK_THROWS_AS(con::q(99), con::NoRatioSite);
}

TEST_CASE("h family") {
  for (std::uint32_t m = 2; m <= 12; ++m) {
    auto c = con::h(m);
    const std::uint32_t d = 4 * m - 1;
    CHECK(is_in_H(c.poly));
    CHECK(c.poly.degree() == d);
    CHECK(c.poly.term_count() == 2 * m + 1);
    CHECK_FALSE(equivalent(c.poly, families::f(d)));
    CHECK(replay(d, c) == c.poly);
    CHECK(c.poly.coefficient({2 * m - 1, 1}) == d);
    CHECK(c.poly.coefficient({2 * m - 1, 2 * m - 1}) == d);
  }
  CHECK(con::h(2).poly == con::q(7).poly);
  CHECK(con::h(3).poly == con::ratio4_construct(5, 1).poly);
  CHECK_THROWS(con::h(1));
}

TEST_CASE("C formulas agree with the h coefficients") {
  for (std::uint32_t m = 2; m <= 16; ++m) {
    const auto h = con::h(m).poly;
    const Integer scale = pow2(4 * m - 1);
    for (std::uint32_t s = 1; s <= 2 * m - 1; ++s) {
      const Rational coeff = h.coefficient({4 * m - 1 - 2 * s, s});
      CHECK(Rational(con::C_closed(m, s)) == coeff * scale);
      CHECK(con::C_sum(m, s) == con::C_closed(m, s));
    }
    CHECK(con::C_closed(m, 1) == 0);
    CHECK(con::C_closed(m, 2) == 0);
  }
  CHECK(con::C_closed(4, 3) == 4587520);
  CHECK(con::C_closed(5, 3) == 149422080);
  CHECK(con::C_closed(5, 4) == 747110400);
}

TEST_CASE("positivity inequality") {
  for (std::uint32_t m = 4; m <= 40; ++m) {
    for (std::uint32_t s = 3; s + 1 <= m; ++s) {
      CHECK(con::positivity_inequality(m, s));
      CHECK(con::C_closed(m, s) > 0);
    }
  }
}

TEST_CASE("degree 1 mod 6 construction") {
  for (std::uint32_t k = 1; k <= 8; ++k) {
    auto c = con::mod6(k);
    const std::uint32_t d = 6 * k + 1;
    CHECK(is_in_H(c.poly));
    CHECK(c.poly.degree() == d);
    CHECK(c.poly.term_count() == 3 * k + 2);
    CHECK_FALSE(equivalent(c.poly, families::f(d)));
    CHECK(replay(d, c) == c.poly);
    for (const auto& step : c.trace) {
      CHECK(step.valid());
      CHECK(step.identity == con::LineIdentity::quartic);
    }
  }
  CHECK_FALSE(equivalent(con::mod6(1).poly, con::q(7).poly));
  CHECK_THROWS(con::mod6(0));
}

TEST_CASE("ratio-4 sites") {
  // plain scan over the K values
  std::vector<std::pair<std::uint32_t, std::uint32_t>> naive;
  for (std::uint32_t r = 3; r <= 60; ++r) {
    for (std::uint32_t s = 1; s + 2 <= r; ++s) {
      if (families::K(r, s + 1) == 4 * families::K(r, s) &&
          families::K(r, s + 2) >= 2 * families::K(r, s)) {
        naive.emplace_back(r, s);
      }
    }
  }
  CHECK(con::ratio4_sites(60) == naive);
  auto sites = con::ratio4_sites(400);
  CHECK(sites == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 1}, {186, 54}});
  CHECK(con::ratio4_sites_via_pell(400) == sites);
}

TEST_CASE("ratio-4 construction") {
  auto c = con::ratio4_construct(5, 1);
  CHECK(is_in_H(c.poly));
  CHECK(c.poly.degree() == 11);
  CHECK(c.poly.term_count() == 7);
  CHECK_FALSE(equivalent(c.poly, families::f(11)));
  CHECK(replay(11, c) == c.poly);
  CHECK_THROWS_AS(con::ratio4_construct(5, 2), con::NoRatioSite);
}

TEST_CASE("replacement steps detect a broken identity") {
  con::ReplacementStep step;
  step.consumed = {{ExponentVector{2, 0}, 1}, {ExponentVector{0, 1}, 2}};
  step.produced = {{ExponentVector{0, 0}, 1}, {ExponentVector{0, 2}, 1}};
  CHECK(step.valid());
  step.produced[1].second = 2;
  CHECK_FALSE(step.valid());
}
