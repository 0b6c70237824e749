#include "sharpmap/poly_core.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <random>

namespace sharpmap {

namespace {

// Terms of (1 - x_1 - ... - x_m)^b as (exponent, integer coefficient).
std::vector<std::pair<ExponentVector, Integer>> expand_complement_power(std::size_t m,
                                                                       std::uint32_t b) {
  std::vector<std::pair<ExponentVector, Integer>> out;
  std::vector<std::uint32_t> beta(m, 0);
  auto recurse = [&](auto&& self, std::size_t var, std::uint32_t remaining,
                     const Integer& coeff) -> void {
    if (var == m) {
      std::uint32_t used = b - remaining;
      out.emplace_back(ExponentVector(beta), (used % 2 == 0) ? coeff : Integer(-coeff));
      return;
    }
    Integer binom;
    for (std::uint32_t k = 0; k <= remaining; ++k) {
      mpz_bin_uiui(binom.get_mpz_t(), remaining, k);
      beta[var] = k;
      self(self, var + 1, remaining - k, Integer(coeff * binom));
    }
    beta[var] = 0;
  };
  recurse(recurse, 0, b, Integer(1));
  return out;
}

double log_abs(const Integer& z) {
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace

Polynomial restrict_to_hyperplane(const Polynomial& p) {
  const std::size_t n = p.nvars();
  if (n == 1) {
    Rational total(0);
    for (const auto& [e, c] : p.terms()) total += c;
    return Polynomial::constant(1, total);
  }
  Polynomial out(n - 1);
  std::map<std::uint32_t, std::vector<std::pair<ExponentVector, Integer>>> powers;
  for (const auto& [e, c] : p.terms()) {
    const std::uint32_t b = e[n - 1];
    auto it = powers.find(b);
    if (it == powers.end()) it = powers.emplace(b, expand_complement_power(n - 1, b)).first;
    const ExponentVector head = e.without_last();
    for (const auto& [beta, k] : it->second) out.add_term(head + beta, c * k);
  }
  return out;
}

bool is_in_J(const Polynomial& p) {
  Polynomial r = restrict_to_hyperplane(p);
  return r.term_count() == 1 && r.terms().begin()->first.is_constant() &&
         r.terms().begin()->second == 1;
}

bool is_in_H(const Polynomial& p) {
  for (const auto& [e, c] : p.terms()) {
    if (sgn(c) <= 0) return false;
  }
  return is_in_J(p);
}

Signature signature(const Polynomial& p) {
  Signature s;
  for (const auto& [e, c] : p.terms()) {
    if (sgn(c) > 0) ++s.n_plus;
    else ++s.n_minus;
  }
  return s;
}

bool equivalent(const Polynomial& p, const Polynomial& q) {
  if (p.nvars() != 2 || q.nvars() != 2) {
    throw UnsupportedArity("equivalence is only defined for two-variable polynomials");
  }
  return p == q || p == q.swapped();
}

MonomialMap to_monomial_map(const Polynomial& p) {
  if (!is_in_H(p)) throw NotInH("polynomial is not in H: " + p.to_string());
  MonomialMap m;
  m.nvars = p.nvars();
  m.components.assign(p.terms().begin(), p.terms().end());
  return m;
}

double check_sphere_numeric(const MonomialMap& m, std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw Error("samples must be positive");
  std::vector<double> log_coeff;
  log_coeff.reserve(m.components.size());
  for (const auto& [e, c] : m.components) {
    log_coeff.push_back(log_abs(c.get_num()) - log_abs(c.get_den()));
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> log_x(m.nvars);
  double worst = 0.0;
  for (std::size_t sample = 0; sample < samples; ++sample) {
    // uniform on S^{2n-1}: normalised Gaussian vector in C^n = R^{2n}
    std::vector<double> modulus_sq(m.nvars);
    double norm_sq = 0.0;
    for (std::size_t j = 0; j < m.nvars; ++j) {
      double re = normal(rng);
      double im = normal(rng);
      modulus_sq[j] = re * re + im * im;
      norm_sq += modulus_sq[j];
    }
    for (std::size_t j = 0; j < m.nvars; ++j) log_x[j] = std::log(modulus_sq[j] / norm_sq);

    double total = 0.0;
    for (std::size_t t = 0; t < m.components.size(); ++t) {
      const ExponentVector& e = m.components[t].first;
      double lg = log_coeff[t];
      for (std::size_t j = 0; j < m.nvars; ++j) {
        if (e[j] != 0) lg += static_cast<double>(e[j]) * log_x[j];
      }
      total += std::exp(lg);
    }
    worst = std::max(worst, std::fabs(total - 1.0));
  }
  return worst;
}

}  // namespace sharpmap
