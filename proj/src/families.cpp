#include "sharpmap/families.hpp"

#include <stdexcept>

#include "sharpmap/poly_core.hpp"

namespace sharpmap::families {

Polynomial f(std::uint32_t d) {
  if (d == 0) throw InvalidDegree("f_d needs d >= 1");
  // g_n = sum_s c[s] x^{n-2s} y^s, kept as coefficient rows
  std::vector<Integer> prev{Integer(2)};  // g_0
  std::vector<Integer> cur{Integer(1)};   // g_1
  for (std::uint32_t n = 2; n <= d; ++n) {
    std::vector<Integer> next(n / 2 + 1);
    for (std::size_t s = 0; s < cur.size(); ++s) next[s] += cur[s];
    for (std::size_t s = 0; s < prev.size(); ++s) next[s + 1] += prev[s];
    prev = std::move(cur);
    cur = std::move(next);
  }
  Polynomial p(2);
  for (std::uint32_t s = 0; s < cur.size(); ++s) {
    p.add_term(ExponentVector{d - 2 * s, s}, Rational(cur[s]));
  }
  p.add_term(ExponentVector{0, d}, Rational(d % 2 == 1 ? 1 : -1));
  return p;
}

Integer K(std::uint32_t r, std::uint32_t s) {
  if (s < 1 || s > r) throw RangeError("K_{r,s} needs 1 <= s <= r");
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * r - s, s - 1);
  Integer num = Integer(2 * r + 1) * binom;
  if (num % s != 0) throw std::logic_error("K_{r,s} is not an integer");
  return num / s;
}

Rational coefficient_ratio(std::uint32_t r, std::uint32_t s) {
  if (s < 1 || s + 1 > r) throw RangeError("coefficient ratio needs 1 <= s <= r-1");
  Rational ratio(K(r, s + 1), K(r, s));
  ratio.canonicalize();
  Rational closed(Integer(2 * r - 2 * s + 1) * Integer(2 * r - 2 * s),
                  Integer(s + 1) * Integer(2 * r - s));
  closed.canonicalize();
  if (ratio != closed) throw std::logic_error("coefficient ratio disagrees with closed form");
  return ratio;
}

Polynomial even_u(std::uint32_t j, std::uint32_t l, bool pick_x) {
  const Polynomial base = f(2 * j + 1);
  const ExponentVector m_exp = pick_x ? ExponentVector{2 * j + 1, 0} : ExponentVector{0, 2 * j + 1};
  const Polynomial m = Polynomial::monomial(m_exp, Rational(1));
  return (base - m) + m * f(2 * l + 1);
}

std::vector<SharpFamilyElement> even_family(std::uint32_t k) {
  if (k == 0) throw InvalidDegree("even_family needs k >= 1");
  std::vector<SharpFamilyElement> out;
  for (std::uint32_t j = 0; j < k; ++j) {
    const std::uint32_t l = k - 1 - j;
    Polynomial u = even_u(j, l, true);
    bool duplicate = false;
    for (const auto& e : out) duplicate = duplicate || equivalent(e.poly, u);
    if (duplicate) continue;
    out.push_back(SharpFamilyElement{
        2 * k, std::move(u),
        "even_u(" + std::to_string(j) + "," + std::to_string(l) + ",x)"});
  }
  if (out.size() != k) throw std::logic_error("even family members are not pairwise inequivalent");
  for (const auto& e : out) {
    if (!is_in_H(e.poly) || e.poly.degree() != 2 * static_cast<std::int64_t>(k) ||
        e.poly.term_count() != k + 2) {
      throw std::logic_error("even family member violates its contract: " + e.provenance);
    }
  }
  return out;
}

}  // namespace sharpmap::families
