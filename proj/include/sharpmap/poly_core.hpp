#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "sharpmap/polynomial.hpp"

namespace sharpmap {

class UnsupportedArity : public Error {
 public:
  using Error::Error;
};

class NotInH : public Error {
 public:
  using Error::Error;
};

/// Counts of strictly positive and strictly negative coefficients.
struct Signature {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// A proper monomial sphere map z -> (sqrt(c_a) z^a)_a, stored through
/// its squared moduli c_a > 0 on pairwise distinct exponents.
struct MonomialMap {
  std::size_t nvars = 0;
  std::vector<std::pair<ExponentVector, Rational>> components;
};

/// Substitutes x_n := 1 - (x_1 + ... + x_{n-1}) and expands exactly.
///
/// The result lives in n-1 variables. For n = 1 the substitution is
/// x_1 := 1 and the result is returned as a constant in one variable.
Polynomial restrict_to_hyperplane(const Polynomial& p);

/// p == 1 identically on x_1 + ... + x_n = 1.
bool is_in_J(const Polynomial& p);
/// is_in_J(p) and every stored coefficient is positive.
bool is_in_H(const Polynomial& p);

inline std::size_t term_count(const Polynomial& p) { return p.term_count(); }

Signature signature(const Polynomial& p);

/// Two-variable equivalence: p == q or p(x,y) == q(y,x).
/// Throws UnsupportedArity for any other number of variables.
bool equivalent(const Polynomial& p, const Polynomial& q);

/// Throws NotInH when p is not in H.
MonomialMap to_monomial_map(const Polynomial& p);

/// Largest |sum_a c_a |z^a|^2 - 1| over `samples` seeded random points of
/// the unit sphere in C^n. Terms are evaluated in log space so that very
/// large coefficients do not overflow.
double check_sphere_numeric(const MonomialMap& m, std::size_t samples, std::uint64_t seed);

}  // namespace sharpmap
