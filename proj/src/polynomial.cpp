#include "sharpmap/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sharpmap {

ExponentVector::ExponentVector(std::vector<std::uint32_t> exponents) : e_(std::move(exponents)) {}

ExponentVector::ExponentVector(std::initializer_list<std::uint32_t> exponents) : e_(exponents) {}

ExponentVector ExponentVector::zero(std::size_t nvars) {
  return ExponentVector(std::vector<std::uint32_t>(nvars, 0));
}

ExponentVector ExponentVector::pure(std::size_t nvars, std::size_t var, std::uint32_t power) {
  std::vector<std::uint32_t> e(nvars, 0);
  e.at(var) = power;
  return ExponentVector(std::move(e));
}

std::uint64_t ExponentVector::total_degree() const {
  return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
}

bool ExponentVector::is_constant() const {
  return std::all_of(e_.begin(), e_.end(), [](std::uint32_t v) { return v == 0; });
}

bool ExponentVector::is_pure_in(std::size_t var) const {
  if (var >= e_.size() || e_[var] == 0) return false;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i != var && e_[i] != 0) return false;
  }
  return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (other.size() != size()) throw Error("exponent vectors of different length");
  std::vector<std::uint32_t> out(e_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.e_[i];
  return ExponentVector(std::move(out));
}

ExponentVector ExponentVector::reversed() const {
  return ExponentVector(std::vector<std::uint32_t>(e_.rbegin(), e_.rend()));
}

ExponentVector ExponentVector::without_last() const {
  return ExponentVector(std::vector<std::uint32_t>(e_.begin(), e_.end() - 1));
}

ExponentVector ExponentVector::with_appended(std::uint32_t e) const {
  std::vector<std::uint32_t> out(e_);
  out.push_back(e);
  return ExponentVector(std::move(out));
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.e_.begin(), a.e_.end(), b.e_.begin(),
                                                b.e_.end());
}

Polynomial::Polynomial(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0) throw Error("a polynomial needs at least one variable");
}

Polynomial::Polynomial(std::size_t nvars,
                       std::initializer_list<std::pair<ExponentVector, Rational>> terms)
    : Polynomial(nvars) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

Polynomial Polynomial::from_terms(std::size_t nvars,
                                  const std::vector<std::pair<ExponentVector, Rational>>& terms) {
  Polynomial p(nvars);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(ExponentVector::zero(nvars), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var) {
  Polynomial p(nvars);
  p.add_term(ExponentVector::pure(nvars, var, 1), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(const ExponentVector& e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

std::int64_t Polynomial::degree() const {
  if (terms_.empty()) return -1;
  // grlex puts a highest-degree term last
  return static_cast<std::int64_t>(terms_.rbegin()->first.total_degree());
}

Rational Polynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::check_arity(const ExponentVector& e) const {
  if (e.size() != nvars_) throw Error("exponent vector length does not match nvars");
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
  check_arity(e);
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw Error("evaluation point has wrong dimension");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (std::uint32_t k = 0; k < e[i]; ++k) v *= point[i];
    }
    total += v;
  }
  return total;
}

Polynomial Polynomial::swapped() const {
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e.reversed(), c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw Error("adding polynomials in different numbers of variables");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.nvars_ != nvars_) throw Error("subtracting polynomials in different numbers of variables");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw Error("multiplying polynomials in different numbers of variables");
  Polynomial out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

namespace {

std::string variable_name(std::size_t nvars, std::size_t i) {
  if (nvars <= 3) return std::string(1, "xyz"[i]);
  return "x" + std::to_string(i + 1);
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out << "-";
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || e.is_constant()) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << "*";
      out << variable_name(nvars_, i);
      if (e[i] > 1) out << "^" << e[i];
      wrote = true;
    }
  }
  return out.str();
}

Polynomial coordinate_sum(std::size_t nvars) {
  Polynomial s(nvars);
  for (std::size_t i = 0; i < nvars; ++i) s.add_term(ExponentVector::pure(nvars, i, 1), Rational(1));
  return s;
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(p.nvars(), Rational(1));
  for (unsigned i = 0; i < k; ++i) result = result * p;
  return result;
}

std::string rational_to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
  auto valid_int = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw Error("malformed rational coefficient: '" + text + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) throw Error("zero denominator in coefficient: '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace sharpmap
