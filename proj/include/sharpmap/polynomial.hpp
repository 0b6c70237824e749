#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sharpmap {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Multi-index of a monomial x_1^{e_1} ... x_n^{e_n}.
///
/// Ordering is graded lexicographic: total degree first, then the
/// exponent sequences compared lexicographically. Under this order
/// (0,2) < (1,1) < (2,0), so y^2 sorts before xy before x^2.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<std::uint32_t> exponents);
  ExponentVector(std::initializer_list<std::uint32_t> exponents);

  /// All-zero multi-index in `nvars` variables.
  static ExponentVector zero(std::size_t nvars);
  /// x_var^power in `nvars` variables.
  static ExponentVector pure(std::size_t nvars, std::size_t var, std::uint32_t power);

  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint64_t total_degree() const;
  bool is_constant() const;
  /// True when only x_var appears, with a positive exponent.
  bool is_pure_in(std::size_t var) const;

  std::span<const std::uint32_t> exponents() const { return e_; }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  ExponentVector operator+(const ExponentVector& other) const;
  /// Reverses the variable order; for two variables this is x <-> y.
  ExponentVector reversed() const;
  /// Drops the last variable.
  ExponentVector without_last() const;
  /// Appends one more variable with the given exponent.
  ExponentVector with_appended(std::uint32_t e) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b);

 private:
  std::vector<std::uint32_t> e_;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so `term_count()` is structural.
/// Terms iterate in ascending graded lexicographic order.
class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational>;

  explicit Polynomial(std::size_t nvars);
  Polynomial(std::size_t nvars, std::initializer_list<std::pair<ExponentVector, Rational>> terms);
  /// Builds a polynomial from a term list, merging duplicate exponents.
  static Polynomial from_terms(std::size_t nvars,
                               const std::vector<std::pair<ExponentVector, Rational>>& terms);
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t var);
  static Polynomial monomial(const ExponentVector& e, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Maximum total degree over stored terms; -1 for the zero polynomial.
  std::int64_t degree() const;
  /// Coefficient of x^e (zero when absent).
  Rational coefficient(const ExponentVector& e) const;
  bool contains(const ExponentVector& e) const { return terms_.count(e) != 0; }

  /// Adds c * x^e in place, dropping the term if it cancels.
  void add_term(const ExponentVector& e, const Rational& c);

  Rational evaluate(std::span<const Rational> point) const;
  /// Reverses the variable order. For two variables: p(x,y) -> p(y,x).
  Polynomial swapped() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Human readable form, e.g. "x^3 + 3*x*y + y^3" (highest degree first).
  std::string to_string() const;

 private:
  void check_arity(const ExponentVector& e) const;

  std::size_t nvars_;
  TermMap terms_;
};

/// s = x_1 + ... + x_n.
Polynomial coordinate_sum(std::size_t nvars);

/// Exact integer power p^k.
Polynomial pow(const Polynomial& p, unsigned k);

/// Rational rendered as "numerator/denominator" (denominator always shown).
std::string rational_to_fraction_string(const Rational& q);
/// Parses "a/b" or "a" into a canonical rational; throws Error on bad input.
Rational rational_from_string(const std::string& text);

}  // namespace sharpmap
