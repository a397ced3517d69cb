// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace specwave
{

struct ConstantInfo
{
  double gamma = 0.0;
  double value = 0.0;
  std::string provenance;
};

/// One inequality check. margin > 0 means slack on the passing side.
struct Check
{
  std::string name;
  std::string relation;  // "<=" or ">="
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::string note;
  std::optional<ConstantInfo> constants;
};

/// lhs <= rhs within abs_tol + rel_tol |rhs|.
Check check_at_most(std::string name, double lhs, double rhs, double abs_tol, double rel_tol);
/// lhs >= rhs within abs_tol + rel_tol |rhs|.
Check check_at_least(std::string name, double lhs, double rhs, double abs_tol, double rel_tol);

struct VerificationReport
{
  std::string subject;
  std::vector<Check> checks;

  bool all_pass() const;
  std::vector<std::string> failures() const;
};

nlohmann::json to_json(const Check &c);
nlohmann::json to_json(const VerificationReport &r);

}  // namespace specwave
