#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "sharpmap/families.hpp"
#include "sharpmap/poly_core.hpp"
#include "sharpmap/search.hpp"
#include "naive_search.hpp"

using namespace sharpmap;
namespace srch = sharpmap::search;

namespace {

std::set<std::vector<ExponentVector>> orbit_closure(const srch::EnumerationResult& res) {
  std::set<std::vector<ExponentVector>> out;
  for (const auto& w : res.witnesses) {
    out.insert(w.support.monomials);
    out.insert(srch::swapped(w.support).monomials);
  }
  return out;
}

}  // namespace

TEST_CASE("pruned search agrees with the naive enumerator") {
  for (std::uint32_t d = 1; d <= 5; ++d) {
    for (std::size_t n = 2; n <= (d + 4) / 2 + (d <= 3 ? 1 : 0); ++n) {
      CAPTURE(d);
      CAPTURE(n);
      auto hits = naive::enumerate(d, n);
      auto res = srch::enumerate_sharp(d, n);
      REQUIRE(res.exhaustive);
      std::set<std::vector<ExponentVector>> naive_set;
      for (const auto& h : hits) naive_set.insert(h.support);
      CHECK(orbit_closure(res) == naive_set);
      for (const auto& w : res.witnesses) {
        CHECK(is_in_H(w.poly));
        CHECK(w.poly.degree() == d);
        CHECK(w.poly.term_count() == n);
        CHECK(srch::canonical(w.support) == w.support);
        for (const auto& h : hits) {
          if (h.support == w.support.monomials) CHECK(h.freedom == w.freedom);
        }
      }
    }
  }
}

TEST_CASE("support helpers") {
  auto s = srch::make_support(3, {ExponentVector{0, 3}, ExponentVector{3, 0}, ExponentVector{1, 1},
                                  ExponentVector{1, 1}});
  CHECK(s.monomials.size() == 3);
  CHECK(srch::satisfies_invariants(s));
  CHECK(srch::swapped(s) == s);
  auto bad = srch::make_support(3, {ExponentVector{3, 0}, ExponentVector{1, 1}});
  CHECK_FALSE(srch::satisfies_invariants(bad));
  CHECK_THROWS_AS(srch::feasible(bad), Error);
  CHECK(srch::monomials_up_to(2).size() == 6);
  CHECK(srch::monomials_up_to(2).front() == ExponentVector{0, 0});
}

TEST_CASE("feasibility of the f_d supports") {
  for (std::uint32_t d = 1; d <= 15; d += 2) {
    const Polynomial f = families::f(d);
    std::vector<ExponentVector> mons;
    for (const auto& [e, c] : f.terms()) mons.push_back(e);
    auto res = srch::feasible(srch::make_support(d, mons));
    CHECK(res.status == srch::FeasibilityStatus::point);
    CHECK(srch::realize(srch::make_support(d, mons), res.coefficients) == f);
  }
  // one term above the minimum leaves room for a family of solutions
  bool seen_polytope = false;
  for (const auto& w : srch::enumerate_sharp(3, 4).witnesses) {
    auto res = srch::feasible(w.support);
    CHECK(res.status != srch::FeasibilityStatus::infeasible);
    if (res.status == srch::FeasibilityStatus::polytope) {
      seen_polytope = true;
      CHECK(res.freedom >= 1);
      CHECK(is_in_H(srch::realize(w.support, res.coefficients)));
    }
  }
  CHECK(seen_polytope);
}

TEST_CASE("minimal term counts in low degree") {
  auto two = srch::minimal_terms(2, {}, true);
  REQUIRE(two.min_terms);
  CHECK(*two.min_terms == 3);
  CHECK(two.ruled_out == std::vector<std::size_t>{2});
  CHECK(two.exhaustive);
  auto four = srch::minimal_terms(4, {}, true);
  REQUIRE(four.min_terms);
  CHECK(*four.min_terms == 4);
  CHECK(four.ruled_out == std::vector<std::size_t>{2, 3});

  const Polynomial square = pow(coordinate_sum(2), 2);
  const Polynomial other = Polynomial(2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 1}, 1}});
  auto has = [&](const Polynomial& p) {
    for (const auto& q : two.certificate.distinct) if (q == p) return true;
    return false;
  };
  CHECK(has(square));
  CHECK(has(other));
  CHECK(has(other.swapped()));
}

TEST_CASE("uniqueness in degrees 1 to 7") {
  auto r1 = srch::uniqueness_status(1);
  CHECK(r1.status == srch::Uniqueness::unique);
  CHECK(r1.minimal.certificate.distinct.front() == families::f(1));
  auto r3 = srch::uniqueness_status(3);
  CHECK(r3.status == srch::Uniqueness::unique);
  CHECK(r3.minimal.certificate.distinct.front() == families::f(3));
  auto r5 = srch::uniqueness_status(5);
  CHECK(r5.status == srch::Uniqueness::unique_up_to_equivalence);
  CHECK(r5.minimal.certificate.distinct.size() == 2);
  auto r7 = srch::uniqueness_status(7);
  CHECK(r7.status == srch::Uniqueness::fails);
  CHECK(r7.minimal.certificate.representatives.size() >= 3);
  CHECK(r7.minimal.certificate.exhaustive);
  CHECK(*r7.minimal.min_terms == 5);
}

TEST_CASE("sharded search matches the single shard") {
  auto one = srch::enumerate_sharp(7, 5);
  auto many = srch::enumerate_sharp(7, 5, srch::Budget{std::numeric_limits<double>::infinity(), 3});
  REQUIRE(one.witnesses.size() == many.witnesses.size());
  for (std::size_t i = 0; i < one.witnesses.size(); ++i) {
    CHECK(one.witnesses[i].support == many.witnesses[i].support);
    CHECK(one.witnesses[i].poly == many.witnesses[i].poly);
  }
  CHECK(one.stats.examined == many.stats.examined);
}

TEST_CASE("budget exhaustion") {
  auto res = srch::enumerate_sharp(11, 7, srch::Budget{0.05, 1});
  CHECK_FALSE(res.exhaustive);
  auto status = srch::uniqueness_status(11, srch::Budget{0.05, 1});
  CHECK(status.status == srch::Uniqueness::unknown);
  CHECK(srch::to_string(status.status) == "Unknown");
}
