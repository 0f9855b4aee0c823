#include "detrep/poly_json.hpp"

#include <stdexcept>

namespace detrep {

nlohmann::json to_json(const Polynomial& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coef", c}});
  return {{"nvars", f.nvars()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("nvars") || !j.contains("terms"))
    throw std::invalid_argument("polynomial JSON needs \"nvars\" and \"terms\"");
  if (!j.at("nvars").is_number_integer())
    throw std::invalid_argument("\"nvars\" must be an integer");
  const int nvars = j.at("nvars").get<int>();
  if (nvars < 1) throw std::invalid_argument("\"nvars\" must be positive");
  if (!j.at("terms").is_array()) throw std::invalid_argument("\"terms\" must be an array");

  Polynomial::TermMap terms;
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coef"))
      throw std::invalid_argument("each term needs \"exp\" and \"coef\"");
    if (!t.at("coef").is_number()) throw std::invalid_argument("\"coef\" must be a number");
    auto e = t.at("exp").get<Exponents>();
    if (static_cast<int>(e.size()) != nvars)
      throw std::invalid_argument("exponent vector length differs from nvars");
    if (!terms.emplace(std::move(e), t.at("coef").get<double>()).second)
      throw std::invalid_argument("duplicate exponent vector in polynomial JSON");
  }
  return Polynomial(nvars, std::move(terms));
}

}  // namespace detrep
