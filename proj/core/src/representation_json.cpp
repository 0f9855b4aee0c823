#include "detrep/representation_json.hpp"

#include <stdexcept>

namespace detrep {

namespace {

nlohmann::json rows_of(const SymmetricMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < a.order(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < a.order(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

MSDR one_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("D1") || !j.contains("A"))
    throw std::invalid_argument("representation JSON needs \"D1\" and \"A\"");
  MSDR rep;
  rep.D1.diag = j.at("D1").get<std::vector<double>>();
  const int d = rep.D1.order();
  if (j.contains("d") && j.at("d").get<int>() != d)
    throw std::invalid_argument("\"d\" differs from the length of \"D1\"");
  for (const auto& m : j.at("A")) {
    const auto rows = m.get<std::vector<std::vector<double>>>();
    if (static_cast<int>(rows.size()) != d) throw std::invalid_argument("coefficient matrix has the wrong order");
    for (const auto& r : rows)
      if (static_cast<int>(r.size()) != d) throw std::invalid_argument("coefficient matrix is not square");
    Matrix dense(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) dense(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    rep.A.push_back(SymmetricMatrix::from_dense(dense, 1e-9));
  }
  if (j.contains("residual")) rep.residual = j.at("residual").get<double>();
  return rep;
}

}  // namespace

nlohmann::json to_json(const MSDR& rep, int classes) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& m : rep.A) a.push_back(rows_of(m));
  return {{"d", rep.order()}, {"D1", rep.D1.diag}, {"A", std::move(a)}, {"residual", rep.residual},
          {"classes", classes}};
}

nlohmann::json to_json(const SolveReport& report) {
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& r : report.representations) reps.push_back(to_json(r, report.classes()));
  return {{"status", to_string(report.status)},
          {"classes", report.classes()},
          {"representations", std::move(reps)},
          {"diagnostics", report.diagnostics}};
}

std::vector<MSDR> representations_from_json(const nlohmann::json& j) {
  std::vector<MSDR> out;
  if (j.is_object() && j.contains("representations")) {
    for (const auto& r : j.at("representations")) out.push_back(one_from_json(r));
  } else if (j.is_object() && j.contains("representation")) {
    out.push_back(one_from_json(j.at("representation")));
  } else {
    out.push_back(one_from_json(j));
  }
  return out;
}

}  // namespace detrep
