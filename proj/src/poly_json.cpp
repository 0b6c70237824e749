#include "sharpmap/poly_json.hpp"

namespace sharpmap {

Json exponent_to_json(const ExponentVector& e) {
  Json out = Json::array();
  for (auto v : e) out.push_back(v);
  return out;
}

Json terms_to_json(const std::vector<std::pair<ExponentVector, Rational>>& terms) {
  Json out = Json::array();
  for (const auto& [e, c] : terms) {
    out.push_back(Json{{"exp", exponent_to_json(e)}, {"coeff", rational_to_fraction_string(c)}});
  }
  return out;
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back(Json{{"exp", exponent_to_json(e)}, {"coeff", rational_to_fraction_string(c)}});
  }
  return Json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("nvars") || !j.contains("terms")) {
      throw Error("polynomial JSON needs 'nvars' and 'terms'");
    }
    const auto nvars = j.at("nvars").get<std::int64_t>();
    if (nvars < 1) throw Error("nvars must be positive");
    Polynomial p(static_cast<std::size_t>(nvars));
    for (const auto& term : j.at("terms")) {
      std::vector<std::uint32_t> exps;
      for (const auto& v : term.at("exp")) {
        auto e = v.get<std::int64_t>();
        if (e < 0) throw Error("negative exponent");
        exps.push_back(static_cast<std::uint32_t>(e));
      }
      if (exps.size() != static_cast<std::size_t>(nvars)) {
        throw Error("exponent vector length does not match nvars");
      }
      const Json& coeff = term.at("coeff");
      Rational c = coeff.is_string() ? rational_from_string(coeff.get<std::string>())
                                     : Rational(coeff.get<long>());
      p.add_term(ExponentVector(std::move(exps)), c);
    }
    return p;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("malformed polynomial JSON: ") + ex.what());
  }
}

std::string serialize(const Polynomial& p) { return to_json(p).dump(); }

Polynomial parse_polynomial(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(std::string("invalid JSON: ") + ex.what());
  }
  return polynomial_from_json(j);
}

}  // namespace sharpmap
