#pragma once

// Hand-rolled random generators for property tests. Seeds are fixed so
// failures reproduce.

#include <cstdint>
#include <random>
#include <vector>

#include "sharpmap/polynomial.hpp"

namespace testgen {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed5eedULL);
  return engine;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline sharpmap::Rational rational(std::int64_t span = 20) {
  sharpmap::Rational q(uniform(-span, span), static_cast<unsigned long>(uniform(1, span)));
  q.canonicalize();
  return q;
}

inline sharpmap::ExponentVector exponent(std::size_t nvars, std::uint32_t max_degree) {
  std::vector<std::uint32_t> e(nvars, 0);
  std::uint32_t left = static_cast<std::uint32_t>(uniform(0, max_degree));
  for (std::size_t i = 0; i < nvars && left > 0; ++i) {
    const auto take = static_cast<std::uint32_t>(uniform(0, left));
    e[i] = take;
    left -= take;
  }
  return sharpmap::ExponentVector(std::move(e));
}

inline sharpmap::Polynomial polynomial(std::size_t nvars, std::uint32_t max_degree,
                                       std::size_t max_terms) {
  sharpmap::Polynomial p(nvars);
  const auto terms = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(max_terms)));
  for (std::size_t t = 0; t < terms; ++t) p.add_term(exponent(nvars, max_degree), rational());
  return p;
}

/// A random point of the hyperplane x_1 + ... + x_n = 1.
inline std::vector<sharpmap::Rational> hyperplane_point(std::size_t nvars) {
  std::vector<sharpmap::Rational> pt(nvars);
  sharpmap::Rational rest(1);
  for (std::size_t i = 0; i + 1 < nvars; ++i) {
    pt[i] = rational(9);
    rest -= pt[i];
  }
  pt[nvars - 1] = rest;
  return pt;
}

}  // namespace testgen
