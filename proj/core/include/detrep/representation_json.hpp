#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "detrep/msdr.hpp"

namespace detrep {

/// {"d": d, "D1": [...], "A": [[[...]], ...], "residual": r, "classes": c}
nlohmann::json to_json(const MSDR& rep, int classes);
/// {"status", "classes", "representations": [...], "diagnostics": [...]}
nlohmann::json to_json(const SolveReport& report);

/// Accepts a single representation object or a solve report. Throws
/// std::invalid_argument on malformed shapes or non-symmetric matrices.
std::vector<MSDR> representations_from_json(const nlohmann::json& j);

}  // namespace detrep
