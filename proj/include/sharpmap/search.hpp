#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sharpmap/linear.hpp"
#include "sharpmap/polynomial.hpp"

namespace sharpmap::search {

/// Candidate monomial set for an element of H(2, degree).
///
/// Invariants: the largest total degree is `degree`; there is a pure-x
/// monomial x^a (a >= 1) and a pure-y monomial y^b (b >= 1). Monomials are
/// sorted in graded lexicographic order without repeats.
struct Support {
  std::uint32_t degree = 0;
  std::vector<ExponentVector> monomials;

  friend bool operator==(const Support&, const Support&) = default;
  friend auto operator<=>(const Support& a, const Support& b) { return a.monomials <=> b.monomials; }
};

/// Builds a support from arbitrary monomials (sorted, deduplicated).
Support make_support(std::uint32_t degree, std::vector<ExponentVector> monomials);
/// Checks the Support invariants.
bool satisfies_invariants(const Support& s);
/// Support with x and y exchanged.
Support swapped(const Support& s);
/// min(s, swapped(s)) in the support order.
Support canonical(const Support& s);

/// All two-variable monomials of total degree <= d, in graded lex order.
std::vector<ExponentVector> monomials_up_to(std::uint32_t d);

/// The (d+1) x N system sum_i c_i x^{a_i} (1-x)^{b_i} = 1, one row per
/// power of x; `rhs` receives the unit vector e_0.
linear::RationalMatrix line_system(const std::vector<ExponentVector>& monomials, std::uint32_t d,
                                   std::vector<Rational>& rhs);

enum class FeasibilityStatus { infeasible, point, polytope };

std::string to_string(FeasibilityStatus s);

struct FeasibilityResult {
  FeasibilityStatus status = FeasibilityStatus::infeasible;
  /// Strictly positive coefficients aligned with the support (empty when infeasible).
  std::vector<Rational> coefficients;
  /// support size - rank of the line system.
  std::size_t freedom = 0;
};

/// Exact decision of whether some strictly positive coefficient vector on
/// `support` gives an element of H(2, degree). Throws Error when the
/// support invariants fail.
FeasibilityResult feasible(const Support& support);

/// The polynomial with the given support and coefficients.
Polynomial realize(const Support& support, const std::vector<Rational>& coefficients);

struct Budget {
  double seconds = std::numeric_limits<double>::infinity();
  /// Number of worker threads the enumeration is split across.
  std::size_t shards = 1;
};

struct SearchStats {
  std::uint64_t examined = 0;  // supports run through the feasibility test
  std::uint64_t pruned = 0;    // combinations discarded by the pruning rules
  std::uint64_t feasible = 0;
  double elapsed_seconds = 0.0;
};

struct SharpWitness {
  Support support;
  Polynomial poly{2};
  std::size_t freedom = 0;
};

struct EnumerationResult {
  /// One witness per feasible swap-canonical support, in support order.
  std::vector<SharpWitness> witnesses;
  bool exhaustive = true;
  SearchStats stats;
};

/// Every support of `terms` monomials of degree <= d that survives the
/// pruning rules, reduced modulo x <-> y, is tested for feasibility.
///
/// Pruning rules, each discarding only supports that carry no element
/// of H(2, d):
///  - a monomial of total degree d is present (else the degree is < d);
///  - a pure-x and a pure-y monomial are present (p(1,0) = p(0,1) = 1, and a
///    constant term alone cannot be 1 there, since the positive
///    remaining terms would push p above 1 inside the segment);
///  - only the smaller of a support and its swap is visited (the swap of
///    an element of H is again in H).
EnumerationResult enumerate_sharp(std::uint32_t d, std::size_t terms, const Budget& budget = {});

/// One representative per class plus the search attestation.
struct SharpCertificate {
  std::uint32_t degree = 0;
  std::size_t min_terms = 0;
  std::vector<Polynomial> representatives;
  /// Distinct sharp polynomials: representatives together with their swaps.
  std::vector<Polynomial> distinct;
  bool has_polytope = false;
  bool exhaustive = false;
  SearchStats stats;
};

struct MinimalTermsResult {
  std::optional<std::size_t> min_terms;
  /// Term counts searched exhaustively without finding a witness.
  std::vector<std::size_t> ruled_out;
  bool exhaustive = false;
  SharpCertificate certificate;
};

/// Smallest N for which H(2, d) has an element with N terms.
///
/// Starts at ceil((d+3)/2), the lower bound d <= 2N - 3; with
/// `confirm_below` every smaller N >= 2 is searched too.
MinimalTermsResult minimal_terms(std::uint32_t d, const Budget& budget = {},
                                 bool confirm_below = false);

enum class Uniqueness { unique, unique_up_to_equivalence, fails, unknown };

std::string to_string(Uniqueness u);

struct UniquenessReport {
  Uniqueness status = Uniqueness::unknown;
  MinimalTermsResult minimal;
};

/// Unique: one sharp polynomial. UniqueUpToEquivalence: exactly a
/// polynomial and its swap. Fails: two or more classes, or a
/// positive-dimensional family of sharp polynomials. Unknown: the budget
/// ran out before any of these could be decided.
UniquenessReport uniqueness_status(std::uint32_t d, const Budget& budget = {});

}  // namespace sharpmap::search
