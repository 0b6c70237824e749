#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sharpmap/polynomial.hpp"

namespace sharpmap::constructions {

class NoRatioSite : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

using Term = std::pair<ExponentVector, Rational>;

/// Identity on the line x + y = 1 that justifies a rewrite.
enum class LineIdentity {
  square,          // x^2 + 2y = 1 + y^2
  quartic,         // x^4 + 4x^2 y + 2y^2 = 1 + y^4
  family_multiple  // a multiple of f_k - 1, which vanishes on the line
};

std::string to_string(LineIdentity id);

/// Terms removed from a polynomial and the terms put in their place.
struct ReplacementStep {
  std::vector<Term> consumed;
  std::vector<Term> produced;
  LineIdentity identity = LineIdentity::square;

  /// sum(consumed) - sum(produced) vanishes identically on x + y = 1.
  bool valid() const;
};

struct Construction {
  Polynomial poly{2};
  std::vector<ReplacementStep> trace;
};

/// For odd d = 2r+1: s = r - sqrt((r^2+r)/3) when that root is an integer,
/// i.e. when d^2 = 12k^2 + 1. At such s, K_{r,s+1} = 2 K_{r,s}.
std::optional<std::uint32_t> pell_ratio_site(std::uint32_t d);

/// f_d with K x^a y^s + 2K x^{a-2} y^{s+1} rewritten as
/// K x^{a-2} y^s + K x^{a-2} y^{s+2}. Throws NoRatioSite when d has none.
Construction q(std::uint32_t d);

/// h_m = f_{4m-1} - (4m-1) x^{2m-1} y (f_{2m-2} - 1), for m >= 2.
Construction h(std::uint32_t m);

/// 2^{4m-1} times the coefficient of x^{4m-1-2s} y^s in h_m, from the
/// closed factorial form. Defined for 1 <= s <= 2m-1.
Integer C_closed(std::uint32_t m, std::uint32_t s);
/// Same quantity from the double binomial sums of the radical expansion.
Integer C_sum(std::uint32_t m, std::uint32_t s);

/// (4m-s-2)!/(4m-2s-1)! > 2(m-1)s (2m-s-2)!/(2m-2s)!  for 3 <= s <= m-1,
/// evaluated exactly.
bool positivity_inequality(std::uint32_t m, std::uint32_t s);

/// Degree 6k+1: three consecutive terms of f_{6k+1} at s = 2k rewritten via
/// x^4 + 4x^2y + 2y^2 = 1 + y^4, for k >= 1.
Construction mod6(std::uint32_t k);

/// All (r, s) with r <= r_bound, 1 <= s <= r-2, K_{r,s+1} = 4 K_{r,s}
/// and K_{r,s+2} >= 2 K_{r,s}; found by scanning the coefficient ratios.
std::vector<std::pair<std::uint32_t, std::uint32_t>> ratio4_sites(std::uint32_t r_bound);

/// The same sites recovered from a^2 - 8b^2 = -7 with b = 2r+1,
/// a = 7 (mod 8) and s = r - (1+a)/8.
std::vector<std::pair<std::uint32_t, std::uint32_t>> ratio4_sites_via_pell(std::uint32_t r_bound);

/// f_{2r+1} with K x^a y^s + 4K x^{a-2} y^{s+1} + K' x^{a-4} y^{s+2} rewritten
/// as K x^{a-4} y^s (1 + y^4) + (K' - 2K) x^{a-4} y^{s+2}.
Construction ratio4_construct(std::uint32_t r, std::uint32_t s);

}  // namespace sharpmap::constructions
