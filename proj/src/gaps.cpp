#include "sharpmap/gaps.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

#include "sharpmap/families.hpp"
#include "sharpmap/linear.hpp"
#include "sharpmap/search.hpp"

namespace sharpmap::gaps {

std::int64_t frobenius(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || (a == 0 && b == 0)) throw Error("frobenius needs nonnegative inputs");
  if (std::gcd(a, b) != 1) throw Error("frobenius needs coprime inputs");
  return a * b - a - b;
}

std::int64_t T(std::int64_t n) {
  if (n < 1) throw Error("T(n) needs n >= 1");
  return n * n - 2 * n + 2;
}

namespace {

// Highest-degree pure x_n term of p.
std::pair<ExponentVector, Rational> top_pure_last(const Polynomial& p) {
  const std::size_t last = p.nvars() - 1;
  const std::pair<const ExponentVector, Rational>* best = nullptr;
  for (const auto& term : p.terms()) {
    if (term.first.is_pure_in(last)) best = &term;  // ascending order: last hit is highest
  }
  if (best == nullptr) throw NoPureTerm("polynomial has no pure term in the last variable");
  return *best;
}

Polynomial spread(const Polynomial& p, const Rational& fraction) {
  auto [e, c] = top_pure_last(p);
  const Rational moved = c * fraction;
  Polynomial out = p;
  out.add_term(e, -moved);
  out += Polynomial::monomial(e, moved) * coordinate_sum(p.nvars());
  return out;
}

void ensure(bool cond, const std::string& what) {
  if (!cond) throw std::logic_error("gap construction check failed: " + what);
}

}  // namespace

Polynomial W(const Polynomial& p) { return spread(p, Rational(1)); }

Polynomial V(const Polynomial& p) { return spread(p, Rational(1, 2)); }

std::optional<Decomposition> decompose_target(std::int64_t n, std::int64_t N) {
  if (n < 2) throw Error("decompose_target needs n >= 2");
  const std::int64_t rest = N - n;
  for (std::int64_t j = 0; rest - j * (n - 1) >= 0; ++j) {
    const std::int64_t left = rest - j * (n - 1);
    if (left % n == 0) return Decomposition{j, left / n};
  }
  return std::nullopt;
}

bool components_independent_of_constant(const MonomialMap& m) {
  std::map<ExponentVector, std::size_t> basis;
  basis.emplace(ExponentVector::zero(m.nvars), 0);
  for (const auto& [e, c] : m.components) {
    if (e.is_constant()) return false;
    basis.emplace(e, basis.size());
  }
  // rows: the constant 1 and each component monomial, over the monomial basis
  linear::RationalMatrix a(m.components.size() + 1, basis.size());
  a(0, 0) = 1;
  for (std::size_t i = 0; i < m.components.size(); ++i) {
    a(i + 1, basis.at(m.components[i].first)) = 1;
  }
  return linear::rank(std::move(a)) == m.components.size() + 1;
}

GapWitness gap_witness(std::int64_t n, std::int64_t N) {
  if (n < 1 || N < 1) throw Error("gap_witness needs n >= 1 and N >= 1");
  GapWitness w;
  w.n = n;
  w.N = N;
  if (n == 1) {
    Polynomial p(1);
    for (std::int64_t i = 1; i <= N; ++i) {
      p.add_term(ExponentVector{static_cast<std::uint32_t>(i)}, Rational(1, static_cast<unsigned long>(N)));
    }
    w.poly = std::move(p);
  } else {
    auto dec = decompose_target(n, N);
    if (!dec) {
      throw BelowThreshold("N = " + std::to_string(N) + " is not representable for n = " +
                           std::to_string(n) + ": N - n is not a nonnegative combination of " +
                           std::to_string(n - 1) + " and " + std::to_string(n) +
                           " (T(n) = " + std::to_string(T(n)) + ")");
    }
    w.j = dec->j;
    w.k = dec->k;
    Polynomial p = coordinate_sum(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < w.j; ++i) p = W(p);
    for (std::int64_t i = 0; i < w.k; ++i) p = V(p);
    w.poly = std::move(p);
  }
  ensure(is_in_H(w.poly), "witness is not in H");
  ensure(static_cast<std::int64_t>(w.poly.term_count()) == N, "witness does not have N terms");
  ensure(components_independent_of_constant(to_monomial_map(w.poly)),
         "witness components are not independent of the constant");
  w.minimality =
      "components are distinct nonconstant monomials; no invertible linear fractional map of "
      "the target can make a component vanish, so N is the minimal embedding dimension";
  return w;
}

std::vector<TableRow> target_table(std::int64_t n, std::int64_t N_max) {
  std::vector<TableRow> rows;
  for (std::int64_t N = n; N <= N_max; ++N) rows.push_back(TableRow{N, decompose_target(n, N)});
  return rows;
}

std::optional<Recipe> recipe_from_string(const std::string& tag) {
  static const std::map<std::string, Recipe> table = {
      {"two_minus_s", Recipe::two_minus_s},
      {"two_s_minus_one", Recipe::two_s_minus_one},
      {"one_plus_x_times", Recipe::one_plus_x_times},
      {"one_minus_x_times", Recipe::one_minus_x_times},
      {"f_odd", Recipe::f_odd},
      {"two_minus_f_odd", Recipe::two_minus_f_odd},
      {"append_negative", Recipe::append_negative},
  };
  auto it = table.find(tag);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::string to_string(Recipe r) {
  switch (r) {
    case Recipe::two_minus_s: return "two_minus_s";
    case Recipe::two_s_minus_one: return "two_s_minus_one";
    case Recipe::one_plus_x_times: return "one_plus_x_times";
    case Recipe::one_minus_x_times: return "one_minus_x_times";
    case Recipe::f_odd: return "f_odd";
    case Recipe::two_minus_f_odd: return "two_minus_f_odd";
    case Recipe::append_negative: return "append_negative";
  }
  return "unknown";
}

SignatureWitness signature_witness(Recipe recipe, const RecipeParams& params) {
  const std::int64_t n = params.n;
  if (n < 1) throw Error("signature recipes need n >= 1");
  const auto nv = static_cast<std::size_t>(n);
  const Polynomial one = Polynomial::constant(nv, Rational(1));
  const Polynomial s = coordinate_sum(nv);
  const Polynomial x1 = Polynomial::variable(nv, 0);
  const auto un = static_cast<std::size_t>(n);

  SignatureWitness w;
  w.recipe = recipe;
  switch (recipe) {
    case Recipe::two_minus_s:
      w.poly = Polynomial::constant(nv, Rational(2)) - s;
      w.requested = {1, un};
      break;
    case Recipe::two_s_minus_one:
      w.poly = s * Rational(2) - one;
      w.requested = {un, 1};
      break;
    case Recipe::one_plus_x_times:
      if (n < 2) throw Error("one_plus_x_times needs n >= 2");
      w.poly = one + x1 * (one - s);
      w.requested = {2, un};
      break;
    case Recipe::one_minus_x_times:
      if (n < 2) throw Error("one_minus_x_times needs n >= 2");
      w.poly = one - x1 * (one - s);
      w.requested = {un + 1, 1};
      break;
    case Recipe::f_odd:
    case Recipe::two_minus_f_odd: {
      if (n != 2) throw Error("f_odd recipes are two-variable");
      if (params.r < 0) throw Error("r must be nonnegative");
      const auto r = static_cast<std::uint32_t>(params.r);
      Polynomial f = families::f(2 * r + 1);
      if (recipe == Recipe::f_odd) {
        w.poly = std::move(f);
        w.requested = {r + 2, 0};
      } else {
        w.poly = Polynomial::constant(2, Rational(2)) - f;
        w.requested = {1, r + 2};
      }
      break;
    }
    case Recipe::append_negative: {
      const Polynomial base = params.base.value_or(one);
      if (base.nvars() != nv) throw Error("base polynomial has the wrong number of variables");
      if (!is_in_J(base)) throw Error("base polynomial is not in J");
      const Signature sb = signature(base);
      const auto d = static_cast<std::uint32_t>(std::max<std::int64_t>(base.degree(), 0));
      Polynomial lift = Polynomial::monomial(ExponentVector::pure(nv, nv - 1, d + 1), Rational(1));
      w.poly = base + lift * (one - s);
      w.requested = {sb.n_plus + 1, sb.n_minus + un};
      break;
    }
  }
  if (!is_in_J(w.poly)) throw std::logic_error("signature recipe produced a polynomial outside J");
  if (!(signature(w.poly) == w.requested)) {
    throw std::logic_error("signature recipe " + to_string(recipe) + " missed its signature");
  }
  return w;
}

std::optional<Polynomial> find_signature_witness(const Signature& sig, std::uint32_t max_degree) {
  const std::size_t total = sig.n_plus + sig.n_minus;
  if (total == 0) return std::nullopt;
  const auto mons = search::monomials_up_to(max_degree);
  if (total > mons.size()) return std::nullopt;

  std::vector<std::size_t> idx(total);
  for (std::size_t i = 0; i < total; ++i) idx[i] = i;
  for (;;) {
    std::vector<ExponentVector> chosen;
    for (auto i : idx) chosen.push_back(mons[i]);
    std::vector<Rational> rhs;
    const linear::RationalMatrix base = search::line_system(chosen, max_degree, rhs);

    // every placement of the n_minus negative signs
    std::vector<bool> negative(total, false);
    std::fill(negative.end() - static_cast<std::ptrdiff_t>(sig.n_minus), negative.end(), true);
    do {
      linear::RationalMatrix a = base;
      for (std::size_t j = 0; j < total; ++j) {
        if (!negative[j]) continue;
        for (std::size_t i = 0; i < a.rows(); ++i) a(i, j) = -a(i, j);
      }
      auto sol = linear::max_min_positive(a, rhs);
      if (sol.feasible) {
        Polynomial p(2);
        for (std::size_t j = 0; j < total; ++j) {
          p.add_term(chosen[j], negative[j] ? Rational(-sol.x[j]) : sol.x[j]);
        }
        return p;
      }
    } while (std::next_permutation(negative.begin(), negative.end()));

    std::size_t pos = total;
    while (pos > 0 && idx[pos - 1] == mons.size() - total + (pos - 1)) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t i = pos; i < total; ++i) idx[i] = idx[i - 1] + 1;
  }
  return std::nullopt;
}

}  // namespace sharpmap::gaps
