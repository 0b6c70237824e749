#include "sharpmap/constructions.hpp"

#include <stdexcept>

#include "sharpmap/families.hpp"
#include "sharpmap/pell.hpp"
#include "sharpmap/poly_core.hpp"

namespace sharpmap::constructions {

using families::f;
using families::K;

std::string to_string(LineIdentity id) {
  switch (id) {
    case LineIdentity::square:
      return "x^2 + 2y = 1 + y^2";
    case LineIdentity::quartic:
      return "x^4 + 4x^2y + 2y^2 = 1 + y^4";
    case LineIdentity::family_multiple:
      return "multiple of f_k - 1";
  }
  return "unknown";
}

bool ReplacementStep::valid() const {
  Polynomial diff(2);
  for (const auto& [e, c] : consumed) diff.add_term(e, c);
  for (const auto& [e, c] : produced) diff.add_term(e, -c);
  return restrict_to_hyperplane(diff).is_zero();
}

namespace {

void ensure(bool cond, const std::string& what) {
  if (!cond) throw std::logic_error("construction check failed: " + what);
}

Polynomial apply(const Polynomial& base, const ReplacementStep& step) {
  ensure(step.valid(), "replacement is not an identity on the line");
  Polynomial out = base;
  for (const auto& [e, c] : step.consumed) {
    ensure(base.coefficient(e) == c, "consumed term is not present in the base polynomial");
    out.add_term(e, -c);
  }
  for (const auto& [e, c] : step.produced) out.add_term(e, c);
  return out;
}

// Membership, degree, sharp term count and inequivalence to f_d.
void check_sharp_alternative(const Polynomial& p, std::uint32_t d, const Polynomial& fd) {
  ensure(is_in_H(p), "result is not in H");
  ensure(p.degree() == static_cast<std::int64_t>(d), "result has the wrong degree");
  ensure(p.term_count() == (d + 3) / 2, "result does not have (d+3)/2 terms");
  ensure(!equivalent(p, fd), "result is equivalent to f_d");
}

ExponentVector xy(std::uint32_t a, std::uint32_t b) { return ExponentVector{a, b}; }

Rational factorial(long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(out);
}

Integer binomial(std::uint32_t n, std::uint32_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer pow2(std::uint32_t e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

}  // namespace

std::optional<std::uint32_t> pell_ratio_site(std::uint32_t d) {
  if (d % 2 == 0) throw Error("ratio-2 sites need an odd degree");
  const std::uint32_t r = (d - 1) / 2;
  Integer t = Integer(r) * Integer(r) + Integer(r);
  if (t % 3 != 0) return std::nullopt;
  t /= 3;
  if (mpz_perfect_square_p(t.get_mpz_t()) == 0) return std::nullopt;
  Integer k;
  mpz_sqrt(k.get_mpz_t(), t.get_mpz_t());
  // same statement as d^2 = 12 k^2 + 1
  ensure(Integer(d) * Integer(d) == 12 * k * k + 1, "ratio site is not a Pell solution");
  if (k == 0) return std::nullopt;
  const auto s = static_cast<std::uint32_t>(r - k.get_ui());
  ensure(s > 0 && s < r, "ratio site out of range");
  ensure(families::coefficient_ratio(r, s) == 2, "coefficient ratio at the site is not 2");
  return s;
}

Construction q(std::uint32_t d) {
  const auto site = pell_ratio_site(d);
  if (!site) throw NoRatioSite("degree " + std::to_string(d) + " has no ratio-2 site");
  const std::uint32_t r = (d - 1) / 2;
  const std::uint32_t s = *site;
  const std::uint32_t a = 2 * r + 1 - 2 * s;
  const Rational k1(K(r, s));
  const Rational k2(K(r, s + 1));
  ensure(k2 == 2 * k1, "K_{r,s+1} != 2 K_{r,s}");

  ReplacementStep step;
  step.identity = LineIdentity::square;
  step.consumed = {{xy(a, s), k1}, {xy(a - 2, s + 1), k2}};
  step.produced = {{xy(a - 2, s), k1}, {xy(a - 2, s + 2), k1}};

  const Polynomial fd = f(d);
  Construction out{apply(fd, step), {step}};
  check_sharp_alternative(out.poly, d, fd);
  return out;
}

Construction h(std::uint32_t m) {
  if (m < 2) throw RangeError("h_m needs m >= 2");
  const std::uint32_t d = 4 * m - 1;
  const Polynomial fd = f(d);
  Polynomial shift = Polynomial::monomial(xy(2 * m - 1, 1), Rational(d));
  Polynomial subtracted = shift * (f(2 * m - 2) - Polynomial::constant(2, Rational(1)));

  ReplacementStep step;
  step.identity = LineIdentity::family_multiple;
  for (const auto& [e, c] : subtracted.terms()) {
    if (sgn(c) > 0) step.consumed.emplace_back(e, c);
    else step.produced.emplace_back(e, -c);
  }
  ensure(step.valid(), "subtracted multiple does not vanish on the line");
  Construction out{fd - subtracted, {step}};
  check_sharp_alternative(out.poly, d, fd);
  ensure(out.poly.term_count() == 2 * m + 1, "h_m does not have 2m+1 terms");
  return out;
}

Integer C_closed(std::uint32_t m, std::uint32_t s) {
  if (m < 2 || s < 1 || s > 2 * m - 1) throw RangeError("C_closed needs m >= 2, 1 <= s <= 2m-1");
  const long M = m;
  const long S = s;
  Rational bracket = factorial(4 * M - S - 2) / (factorial(4 * M - 2 * S - 1) * factorial(S));
  if (s <= m) {
    // for s > m the second sum is empty (1/(negative)! = 0)
    bracket -= Rational(2 * (M - 1)) * factorial(2 * M - S - 2) /
               (factorial(2 * M - 2 * S) * factorial(S - 1));
  }
  Rational value = Rational(Integer(4 * m - 1) * pow2(4 * m - 1)) * bracket;
  ensure(value.get_den() == 1, "C_closed is not an integer");
  return value.get_num();
}

Integer C_sum(std::uint32_t m, std::uint32_t s) {
  if (m < 2 || s < 1 || s > 2 * m - 1) throw RangeError("C_sum needs m >= 2, 1 <= s <= 2m-1");
  Integer four_s;
  mpz_ui_pow_ui(four_s.get_mpz_t(), 4, s);
  Integer first(0);
  for (std::uint32_t j = s; j <= 2 * m - 1; ++j) {
    first += binomial(4 * m - 1, 2 * j) * binomial(j, s) * four_s;
  }
  Integer second(0);
  for (std::uint32_t l = s - 1; l + 1 <= m; ++l) {
    second += binomial(2 * m - 2, 2 * l) * binomial(l, s - 1) * (four_s / 4);
  }
  return 2 * first - Integer(4 * m - 1) * pow2(2 * m + 2) * second;
}

bool positivity_inequality(std::uint32_t m, std::uint32_t s) {
  if (s < 3 || s + 1 > m) throw RangeError("positivity inequality needs 3 <= s <= m-1");
  const long M = m;
  const long S = s;
  Rational lhs = factorial(4 * M - S - 2) / factorial(4 * M - 2 * S - 1);
  Rational rhs =
      Rational(2 * (M - 1) * S) * factorial(2 * M - S - 2) / factorial(2 * M - 2 * S);
  return lhs > rhs;
}

Construction mod6(std::uint32_t k) {
  if (k < 1) throw RangeError("mod6 needs k >= 1");
  const std::uint32_t d = 6 * k + 1;
  const std::uint32_t r = 3 * k;
  const std::uint32_t s = 2 * k;
  const Rational k_prev(K(r, s - 1));
  const Rational k_mid(K(r, s));
  const Rational k_next(K(r, s + 1));
  ensure(k_mid / k_next == 2, "K_{r,s}/K_{r,s+1} != 2");
  Rational expected_prev_ratio(Integer(k) * Integer(4 * k + 1),
                               Integer(2 * k + 3) * Integer(k + 1));
  expected_prev_ratio.canonicalize();
  ensure(k_prev / k_mid == expected_prev_ratio, "K_{r,s-1}/K_{r,s} disagrees with closed form");
  const Rational c = 4 * k_prev / k_mid;
  ensure(c > 1, "c - 1 is not positive");

  const std::uint32_t e = 2 * r - 1 - 2 * s;
  const Rational quarter = k_mid / 4;
  ReplacementStep step;
  step.identity = LineIdentity::quartic;
  step.consumed = {{xy(e + 4, s - 1), k_prev}, {xy(e + 2, s), k_mid}, {xy(e, s + 1), k_next}};
  step.produced = {{xy(e + 4, s - 1), quarter * (c - 1)},
                   {xy(e, s - 1), quarter},
                   {xy(e, s + 3), quarter}};

  const Polynomial fd = f(d);
  Construction out{apply(fd, step), {step}};
  check_sharp_alternative(out.poly, d, fd);
  ensure(out.poly.term_count() == 3 * k + 2, "mod6 result does not have 3k+2 terms");
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> ratio4_sites(std::uint32_t r_bound) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t r = 3; r <= r_bound; ++r) {
    for (std::uint32_t s = 1; s + 2 <= r; ++s) {
      // K_{r,s+1}/K_{r,s} = (2r-2s+1)(2r-2s)/((s+1)(2r-s)) == 4
      const std::uint64_t lhs = std::uint64_t(2 * r - 2 * s + 1) * (2 * r - 2 * s);
      const std::uint64_t rhs = 4 * std::uint64_t(s + 1) * (2 * r - s);
      if (lhs != rhs) continue;
      if (K(r, s + 2) >= 2 * K(r, s)) out.emplace_back(r, s);
    }
  }
  return out;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> ratio4_sites_via_pell(std::uint32_t r_bound) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (const auto& sol :
       pell::generalized_solutions(Integer(8), Integer(-7), 2 * std::uint64_t(r_bound) + 1)) {
    if (sol.b % 2 == 0 || sol.b < 3 || sol.a % 8 != 7) continue;
    const auto r = static_cast<std::uint32_t>(Integer((sol.b - 1) / 2).get_ui());
    const Integer shift = (1 + sol.a) / 8;
    if (shift >= r) continue;
    const auto s = static_cast<std::uint32_t>(r - shift.get_ui());
    if (s < 1 || s + 2 > r) continue;
    if (K(r, s + 1) == 4 * K(r, s) && K(r, s + 2) >= 2 * K(r, s)) out.emplace_back(r, s);
  }
  return out;
}

Construction ratio4_construct(std::uint32_t r, std::uint32_t s) {
  if (s < 1 || s + 2 > r) throw RangeError("ratio-4 site needs 1 <= s <= r-2");
  const Rational k0(K(r, s));
  const Rational k1(K(r, s + 1));
  const Rational k2(K(r, s + 2));
  if (k1 != 4 * k0 || k2 < 2 * k0) {
    throw NoRatioSite("(" + std::to_string(r) + "," + std::to_string(s) + ") is not a ratio-4 site");
  }
  const std::uint32_t d = 2 * r + 1;
  const std::uint32_t a = d - 2 * s;
  ReplacementStep step;
  step.identity = LineIdentity::quartic;
  step.consumed = {{xy(a, s), k0}, {xy(a - 2, s + 1), k1}, {xy(a - 4, s + 2), k2}};
  step.produced = {{xy(a - 4, s), k0}, {xy(a - 4, s + 4), k0}};
  if (k2 != 2 * k0) step.produced.emplace_back(xy(a - 4, s + 2), k2 - 2 * k0);

  const Polynomial fd = f(d);
  Construction out{apply(fd, step), {step}};
  check_sharp_alternative(out.poly, d, fd);
  ensure(out.poly.term_count() == r + 2, "ratio-4 result does not have r+2 terms");
  return out;
}

}  // namespace sharpmap::constructions
