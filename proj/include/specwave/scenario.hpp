// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "specwave/damping.hpp"
#include "specwave/enclosure.hpp"
#include "specwave/grid.hpp"
#include "specwave/pencil.hpp"
#include "specwave/quadrature.hpp"

namespace specwave
{

inline constexpr const char *kVersion = "0.3.0";
inline constexpr const char *kCsvHeader = "# specwave-csv v1";

enum class Analysis
{
  enclose,
  solve,
  verify_lt,
  similarity,
  step_secular,
  sweep_alpha
};

std::string to_string(Analysis a);
Analysis analysis_from_string(const std::string &name);
/// Every analysis, in execution order.
std::vector<Analysis> all_analyses();

struct XiGridSpec
{
  int count = 25;
  double r_min = 1e-3;
  double r_max = 1e3;
  int phases = 8;
};

struct Thresholds
{
  std::optional<double> tau_re;  // default max(5h, 10/L)
  double loc_threshold = 0.5;
  double resolution = 0.5;
  std::optional<double> epsilon;  // default 2 (pi / 2L)^2
  double tol = 1e-10;
  double abs_tol = 1e-8;
  double rel_tol = 1e-2;
};

/// Alpha sweep: explicit values, or `count` points spread over the
/// predicted coupling interval.
struct SweepSpec
{
  std::vector<double> alphas;
  int count = 11;
};

struct FrankSpec
{
  double gamma = 0.5;
  int d = 3;
  double value = 0.0;
};

struct ScenarioConfig
{
  nlohmann::json damping = {{"kind", "zero"}};
  std::optional<nlohmann::json> potential;  // verify-lt; defaults to damping
  double grid_l = 20.0;
  int grid_n = 2000;
  XiGridSpec xi;
  QuadratureSpec quadrature;
  Thresholds thresholds;
  SolverMethod method = SolverMethod::automatic;
  int dense_max_nodes = 500;
  std::vector<double> lt_gammas = {0.5, 1.5};
  std::optional<double> lt_constant;  // for gammas without a known constant
  std::optional<FrankSpec> frank;
  SweepSpec sweep;
  int secular_points = 1000;
  std::set<Analysis> analyses;
  std::filesystem::path out_dir = "specwave-out";
  std::uint64_t seed = 42;

  /// Throws DomainError on invalid settings.
  void validate() const;
  Grid grid() const;
  ClassifyOptions classify_options() const;
  SolveOptions solve_options() const;
};

/// Unknown keys are rejected. Complex numbers are written as a number or as
/// [re, im].
ScenarioConfig config_from_json(const nlohmann::json &j);
nlohmann::json to_json(const ScenarioConfig &c);

/// {"kind": "step", "a": -3, "b": 1}, {"kind": "gaussian", "amplitude": 1,
/// "width": 1}, {"kind": "zero"} or {"kind": "sampled", "values": [...]} on
/// the scenario grid.
DampingProfile damping_from_json(const nlohmann::json &j, const Grid &g);

/// "zero", "step:A,B" or "gaussian:A,W" with real A.
nlohmann::json damping_json_from_string(const std::string &text);

struct SweepRow
{
  double alpha = 0.0;
  bool in_interval = false;
  std::vector<double> genuine_real;  // genuine real eigenvalues of A_{alpha a}
  std::size_t genuine_count = 0;
};

struct SweepTable
{
  EnclosureRegion interval;
  std::vector<SweepRow> rows;
  /// Some alpha inside [lo, hi] has a genuine eigenvalue on the predicted
  /// half-line.
  bool found_in_interval = false;
};

/// Solves the pencil of alpha * a for each alpha and records the genuine
/// real eigenvalues.
SweepTable sweep_alpha(const DampingProfile &a, const std::vector<double> &alphas, const Grid &g,
                       const QuadratureSpec &q, const SolveOptions &solve,
                       const ClassifyOptions &classify, double real_tol = 1e-6);

struct RunReport
{
  nlohmann::json body;  // deterministic part, written as report.json
  std::map<std::string, double> timings;  // seconds, written as timings.json
  std::vector<std::string> failures;
  int exit_code = 0;
};

/// Runs the requested analyses (norms, enclosures, solve, membership,
/// inequalities, similarity, secular scan, sweep) and writes the artifacts
/// to config.out_dir. Module errors are caught and recorded; exit codes are
/// 0 ok, 1 check failure, 2 config or domain error, 3 numerical failure.
RunReport run(const ScenarioConfig &config);

}  // namespace specwave
