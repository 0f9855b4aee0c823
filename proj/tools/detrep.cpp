// detrep: compute and check monic symmetric determinantal representations.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "detrep/expression.hpp"
#include "detrep/gmd.hpp"
#include "detrep/multivariate.hpp"
#include "detrep/poly_json.hpp"
#include "detrep/random_instance.hpp"
#include "detrep/representation_json.hpp"
#include "detrep/roots.hpp"

namespace {

using detrep::Polynomial;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitImpossible = 2;
constexpr int kExitExhausted = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string expr;
  int nvars = 0;
  std::uint64_t seed = 0;
  double tol_verify = 1e-8;
  double tol_linear = 1e-8;
  double tol_compat = 1e-6;
  int newton_starts = 0;
  bool normalize = false;
  std::string format = "json";
  std::string output;
  std::string route = "auto";
  std::string rep;
  int degree = 3;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

int infer_nvars(const std::string& text) {
  int n = 0;
  static const std::regex var("x([0-9]+)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), var); it != std::sregex_iterator(); ++it)
    n = std::max(n, std::stoi((*it)[1].str()));
  return std::max(n, 1);
}

Polynomial parse_text(const std::string& text, int nvars) {
  try {
    return detrep::parse_expression(text, nvars > 0 ? nvars : infer_nvars(text));
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

Polynomial read_polynomial(const Options& o) {
  if (!o.expr.empty() && !o.input.empty()) throw InputError("give either --input or --expr, not both");
  if (!o.expr.empty()) return parse_text(o.expr, o.nvars);
  if (o.input.empty()) throw InputError("no polynomial given (use --input FILE or --expr STR)");

  const std::string text = read_file(o.input);
  const json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) return parse_text(text, o.nvars);
  try {
    return detrep::polynomial_from_json(j.contains("polynomial") ? j.at("polynomial") : j);
  } catch (const std::exception& e) {
    throw InputError(o.input + ": " + e.what());
  }
}

Polynomial monic(Polynomial f, const Options& o) {
  const double c0 = f.coefficient(detrep::Exponents(static_cast<std::size_t>(f.nvars()), 0));
  if (std::abs(c0 - 1.0) <= 1e-9) return f;
  if (!o.normalize) throw InputError("f(0) = " + std::to_string(c0) + " but must be 1 (see --normalize)");
  if (c0 <= 0) throw InputError("--normalize needs f(0) > 0, got " + std::to_string(c0));
  std::cerr << "warning: dividing by f(0) = " << c0 << "; the result represents f/f(0)\n";
  return f.scaled(1.0 / c0);
}

detrep::SolveConfig config_of(const Options& o) {
  if (o.tol_verify <= 0 || o.tol_linear <= 0 || o.tol_compat <= 0) throw InputError("tolerances must be positive");
  detrep::SolveConfig cfg;
  cfg.seed = o.seed;
  cfg.tol_verify = o.tol_verify;
  cfg.tol_linear = o.tol_linear;
  cfg.tol_compat = o.tol_compat;
  cfg.newton_starts = o.newton_starts;
  if (o.route == "linear") {
    cfg.route = detrep::MultivariateRoute::Linear;
  } else if (o.route == "compat") {
    cfg.route = detrep::MultivariateRoute::Compatibility;
  }
  return cfg;
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw InputError("cannot write " + o.output);
  out << text;
}

std::string matrix_text(const detrep::SymmetricMatrix& a) {
  std::ostringstream os;
  os.precision(8);
  for (int i = 0; i < a.order(); ++i) {
    os << "    [";
    for (int j = 0; j < a.order(); ++j) os << (j ? ", " : "") << a(i, j);
    os << "]\n";
  }
  return os.str();
}

std::string report_text(const detrep::SolveReport& r) {
  std::ostringstream os;
  os.precision(8);
  os << "status: " << detrep::to_string(r.status) << "\n";
  os << "classes: " << r.classes() << "\n";
  for (std::size_t k = 0; k < r.representations.size(); ++k) {
    const auto& rep = r.representations[k];
    os << "representation " << k + 1 << " (residual " << rep.residual << ")\n  D1 = diag(";
    for (int i = 0; i < rep.order(); ++i) os << (i ? ", " : "") << rep.D1.diag[static_cast<std::size_t>(i)];
    os << ")\n";
    for (std::size_t m = 0; m < rep.A.size(); ++m) os << "  A1" << m + 2 << " =\n" << matrix_text(rep.A[m]);
  }
  for (const auto& line : r.diagnostics) os << "# " << line << "\n";
  return os.str();
}

int cmd_solve(const Options& o) {
  const Polynomial f = monic(read_polynomial(o), o);
  const detrep::SolveReport r = detrep::solve(f, config_of(o));
  emit(o, o.format == "text" ? report_text(r) : to_json(r).dump(2) + "\n");
  if (r.status == detrep::SolveStatus::Found) return kExitOk;
  return detrep::is_certified_impossible(r.status) ? kExitImpossible : kExitExhausted;
}

int cmd_verify(const Options& o) {
  const Polynomial f = monic(read_polynomial(o), o);
  if (o.rep.empty()) throw InputError("verify needs --rep FILE");
  std::vector<detrep::MSDR> reps;
  try {
    reps = detrep::representations_from_json(read_json(o.rep));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(o.rep + ": " + e.what());
  }
  if (reps.empty()) throw InputError(o.rep + ": no representation");

  json results = json::array();
  bool all_ok = true;
  for (const auto& rep : reps) {
    if (static_cast<int>(rep.A.size()) != f.nvars() - 1)
      throw InputError("representation has " + std::to_string(rep.A.size() + 1) + " matrices, polynomial has " +
                       std::to_string(f.nvars()) + " variables");
    const double r = detrep::representation_residual(f, rep.D1, rep.A);
    const bool ok = detrep::within_tolerance(f, r, o.tol_verify);
    all_ok = all_ok && ok;
    results.push_back({{"residual", r}, {"verified", ok}});
  }
  if (o.format == "text") {
    std::ostringstream os;
    for (const auto& r : results)
      os << "residual " << r["residual"].get<double>() << (r["verified"].get<bool>() ? " ok" : " FAILED") << "\n";
    emit(o, os.str());
  } else {
    emit(o, json{{"results", results}, {"verified", all_ok}}.dump(2) + "\n");
  }
  return all_ok ? kExitOk : kExitImpossible;
}

int cmd_gmd(const Options& o) {
  if (o.input.empty()) throw InputError("gmd needs --input FILE with \"matrices\" and \"multiplicities\"");
  const json j = read_json(o.input);
  detrep::NumericTuple t;
  try {
    const auto mats = j.at("matrices").get<std::vector<std::vector<std::vector<double>>>>();
    const auto mult = j.at("multiplicities").get<std::vector<int>>();
    if (mats.size() != mult.size()) throw InputError("one multiplicity per matrix is required");
    for (std::size_t s = 0; s < mats.size(); ++s) {
      const auto d = static_cast<Eigen::Index>(mats[s].size());
      detrep::Matrix m(d, d);
      for (Eigen::Index r = 0; r < d; ++r) {
        if (static_cast<Eigen::Index>(mats[s][r].size()) != d) throw InputError("matrix is not square");
        for (Eigen::Index c = 0; c < d; ++c) m(r, c) = mats[s][r][c];
      }
      t.push_back({m, mult[s]});
    }
  } catch (const json::exception& e) {
    throw InputError(o.input + ": " + e.what());
  }
  double value = 0.0;
  try {
    value = detrep::gmd(t);
  } catch (const std::logic_error& e) {
    throw InputError(e.what());
  }
  std::ostringstream os;
  os.precision(17);
  if (o.format == "text") {
    os << value << "\n";
  } else {
    os << json{{"gmd", value}}.dump(2) << "\n";
  }
  emit(o, os.str());
  return kExitOk;
}

int cmd_rz_check(const Options& o) {
  const Polynomial f = monic(read_polynomial(o), o);
  const int d = std::max(1, f.degree());
  json axes = json::array();
  bool pass = true;
  for (int i = 1; i <= f.nvars(); ++i) {
    const detrep::ReciprocalEigs e = detrep::negative_reciprocal_eigs(detrep::restrict_axis(f, i), d);
    pass = pass && e.all_real;
    json a = {{"axis", i}, {"all_real", e.all_real}};
    if (e.all_real) a["eigenvalues"] = e.values;
    axes.push_back(std::move(a));
  }
  if (o.format == "text") {
    std::ostringstream os;
    for (const auto& a : axes) os << "axis " << a["axis"] << ": " << (a["all_real"].get<bool>() ? "real" : "NOT real") << "\n";
    os << (pass ? "passes" : "fails") << " the axis real-root condition (necessary, not sufficient)\n";
    emit(o, os.str());
  } else {
    emit(o, json{{"passes", pass}, {"axes", axes}}.dump(2) + "\n");
  }
  return pass ? kExitOk : kExitImpossible;
}

int cmd_random(const Options& o) {
  if (o.degree < 1 || o.nvars < 1) throw InputError("random needs --degree >= 1 and --nvars >= 1");
  const detrep::RandomInstance inst = detrep::random_instance(o.degree, o.nvars, o.seed);
  const json j = {{"polynomial", detrep::to_json(inst.polynomial)},
                  {"representation", detrep::to_json(inst.representation, 1)}};
  emit(o, j.dump(2) + "\n");
  return kExitOk;
}

void add_polynomial_options(CLI::App* sub, Options& o) {
  sub->add_option("--input", o.input, "Polynomial file (JSON or expression text)");
  sub->add_option("--expr", o.expr, "Polynomial expression, e.g. \"1+x1+x2\"");
  sub->add_option("--nvars", o.nvars, "Number of variables (default: largest index in --expr)");
  sub->add_flag("--normalize", o.normalize, "Divide f by f(0) when f(0) > 0");
}

void add_common_options(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "Random seed");
  sub->add_option("--tol-verify", o.tol_verify, "Verification tolerance (relative to max |coefficient|)");
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--output", o.output, "Write the result to FILE instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monic symmetric determinantal representations of real polynomials"};
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Find representations f = det(I + x1 D1 + x2 A12 + ...)");
  add_polynomial_options(solve, o);
  add_common_options(solve, o);
  solve->add_option("--newton-starts", o.newton_starts, "Newton multistart budget (0: default)");
  solve->add_option("--tol-linear", o.tol_linear, "Linear-system consistency tolerance");
  solve->add_option("--tol-compat", o.tol_compat, "Compatibility tolerance");
  solve->add_option("--route", o.route, "Multivariate route")->check(CLI::IsMember({"auto", "linear", "compat"}));

  auto* verify = app.add_subcommand("verify", "Check a representation against a polynomial");
  add_polynomial_options(verify, o);
  add_common_options(verify, o);
  verify->add_option("--rep", o.rep, "Representation or solve-report JSON")->required();

  auto* gmd = app.add_subcommand("gmd", "Generalized mixed discriminant of a matrix tuple");
  gmd->add_option("--input", o.input, "JSON with \"matrices\" and \"multiplicities\"")->required();
  gmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  gmd->add_option("--output", o.output, "Write the result to FILE instead of stdout");

  auto* rz = app.add_subcommand("rz-check", "Axis real-root condition (necessary only)");
  add_polynomial_options(rz, o);
  add_common_options(rz, o);

  auto* random = app.add_subcommand("random", "Random determinantal polynomial with its representation");
  random->add_option("--degree", o.degree, "Matrix size d");
  random->add_option("--nvars", o.nvars, "Number of variables")->required();
  random->add_option("--seed", o.seed, "Random seed");
  random->add_option("--output", o.output, "Write the result to FILE instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*solve) return cmd_solve(o);
    if (*verify) return cmd_verify(o);
    if (*gmd) return cmd_gmd(o);
    if (*rz) return cmd_rz_check(o);
    if (*random) return cmd_random(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
