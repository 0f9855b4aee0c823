#pragma once

#include <nlohmann/json.hpp>

#include "detrep/poly.hpp"

namespace detrep {

/// {"nvars": n, "terms": [{"exp": [k1,...,kn], "coef": c}, ...]}, terms in
/// ascending graded lexicographic order.
nlohmann::json to_json(const Polynomial& f);

/// Inverse of to_json. Rejects duplicate exponent vectors and malformed
/// entries with std::invalid_argument.
Polynomial polynomial_from_json(const nlohmann::json& j);

}  // namespace detrep
