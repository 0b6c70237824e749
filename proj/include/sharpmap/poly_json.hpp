#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "sharpmap/polynomial.hpp"

namespace sharpmap {

using Json = nlohmann::ordered_json;

// Wire format:
//   {"nvars": n, "terms": [{"exp": [e1,...,en], "coeff": "num/den"}, ...]}
// Terms appear in ascending graded lexicographic order and every
// coefficient is written as "numerator/denominator".

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

/// Compact canonical serialization.
std::string serialize(const Polynomial& p);
Polynomial parse_polynomial(const std::string& text);

Json exponent_to_json(const ExponentVector& e);
/// List of (exponent, coefficient) pairs in the same term encoding.
Json terms_to_json(const std::vector<std::pair<ExponentVector, Rational>>& terms);

}  // namespace sharpmap
