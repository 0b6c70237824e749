#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sharpmap/polynomial.hpp"

namespace sharpmap::families {

class InvalidDegree : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

/// A member of one of the sharp two-variable families, tagged with its origin.
struct SharpFamilyElement {
  std::uint32_t degree = 0;
  Polynomial poly{2};
  std::string provenance;  // "f_d" or "even_u(j,l,x|y)"
};

/// The group-invariant polynomial
///   f_d = ((x + sqrt(x^2+4y))/2)^d + ((x - sqrt(x^2+4y))/2)^d + (-1)^{d+1} y^d,
/// computed without radicals: the radical part is the power sum g_d of the
/// roots of t^2 - x t - y, so g_0 = 2, g_1 = x, g_d = x g_{d-1} + y g_{d-2}.
Polynomial f(std::uint32_t d);

/// K_{r,s} = (2r+1)/s * C(2r-s, s-1), the coefficient of x^{2r+1-2s} y^s in f_{2r+1}.
/// Valid for 1 <= s <= r.
Integer K(std::uint32_t r, std::uint32_t s);

/// K_{r,s+1} / K_{r,s}; cross-checked against
/// (2r-2s+1)(2r-2s) / ((s+1)(2r-s)). Valid for 1 <= s <= r-1.
Rational coefficient_ratio(std::uint32_t r, std::uint32_t s);

/// u = (f_{2j+1} - m) + m f_{2l+1} with m = x^{2j+1} (pick_x) or y^{2j+1}.
Polynomial even_u(std::uint32_t j, std::uint32_t l, bool pick_x);

/// k pairwise inequivalent sharp elements of H(2, 2k), one per j = 0..k-1.
std::vector<SharpFamilyElement> even_family(std::uint32_t k);

}  // namespace sharpmap::families
