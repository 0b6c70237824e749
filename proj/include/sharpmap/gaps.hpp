#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sharpmap/poly_core.hpp"
#include "sharpmap/polynomial.hpp"

namespace sharpmap::gaps {

class NoPureTerm : public Error {
 public:
  using Error::Error;
};

class BelowThreshold : public Error {
 public:
  using Error::Error;
};

class UnknownRecipe : public Error {
 public:
  using Error::Error;
};

/// Largest integer that is not a nonnegative combination of coprime a, b:
/// ab - a - b. The pair (1, 0) is accepted and gives -1.
std::int64_t frobenius(std::int64_t a, std::int64_t b);

/// n^2 - 2n + 2: every target dimension from here on is attained.
std::int64_t T(std::int64_t n);

/// p - c x_n^d + c x_n^d s, where c x_n^d is the pure x_n term of highest
/// degree and s = x_1 + ... + x_n. Throws NoPureTerm if p has none.
Polynomial W(const Polynomial& p);
/// p - (c/2) x_n^d + (c/2) x_n^d s.
Polynomial V(const Polynomial& p);

/// (j, k) >= 0 with j(n-1) + kn = N - n and j minimal.
struct Decomposition {
  std::int64_t j = 0;
  std::int64_t k = 0;
};

/// std::nullopt when N - n is not a nonnegative combination of n-1 and n.
std::optional<Decomposition> decompose_target(std::int64_t n, std::int64_t N);

/// V^k W^j s with exactly N terms, in H(n).
struct GapWitness {
  std::int64_t n = 0;
  std::int64_t N = 0;
  std::int64_t j = 0;
  std::int64_t k = 0;
  Polynomial poly{1};
  /// Why N is the minimal embedding dimension of the associated map.
  std::string minimality;
};

/// Builds the witness for (n, N). For n = 1 this is sum_{i=1}^N x^i / N.
/// For n >= 2, N must admit a decomposition; otherwise BelowThreshold.
GapWitness gap_witness(std::int64_t n, std::int64_t N);

/// True when the components are distinct nonconstant monomials and no
/// nontrivial rational combination of them is a constant, checked by an
/// exact rank computation over the monomial basis.
bool components_independent_of_constant(const MonomialMap& m);

struct TableRow {
  std::int64_t N = 0;
  std::optional<Decomposition> decomposition;
};

/// Representability of every N in [n, N_max].
std::vector<TableRow> target_table(std::int64_t n, std::int64_t N_max);

/// Catalog of explicit elements of J with prescribed signature.
enum class Recipe {
  two_minus_s,       // 2 - s                          (1, n)
  two_s_minus_one,   // 2s - 1                         (n, 1)
  one_plus_x_times,  // 1 + x_1 (1 - s)                (2, 2) for n = 2
  one_minus_x_times, // 1 - x_1 (1 - s)                (3, 1) for n = 2
  f_odd,             // f_{2r+1}                       (r+2, 0)
  two_minus_f_odd,   // 2 - f_{2r+1}                   (1, r+2)
  append_negative    // p + x_n^{d+1} (1 - s)          (a+1, b+n) from (a, b)
};

std::optional<Recipe> recipe_from_string(const std::string& tag);
std::string to_string(Recipe r);

struct SignatureWitness {
  Signature requested;
  Polynomial poly{1};
  Recipe recipe = Recipe::two_minus_s;
};

struct RecipeParams {
  std::int64_t n = 2;
  std::int64_t r = 1;
  /// Base polynomial for append_negative; the constant 1 when empty.
  std::optional<Polynomial> base;
};

/// Builds the catalog polynomial and its advertised signature; throws
/// std::logic_error if the result is not in J or has another signature.
SignatureWitness signature_witness(Recipe recipe, const RecipeParams& params);

/// Two-variable element of J of degree <= max_degree with exactly the given
/// signature, if one exists; found by exhaustive search over supports and
/// sign patterns with exact feasibility.
std::optional<Polynomial> find_signature_witness(const Signature& sig, std::uint32_t max_degree);

}  // namespace sharpmap::gaps
