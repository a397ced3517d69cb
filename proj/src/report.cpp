// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#include "specwave/report.hpp"

#include <algorithm>
#include <cmath>

namespace specwave
{

Check check_at_most(std::string name, double lhs, double rhs, double abs_tol, double rel_tol)
{
  Check c;
  c.name = std::move(name);
  c.relation = "<=";
  c.lhs = lhs;
  c.rhs = rhs;
  c.margin = rhs - lhs;
  c.tolerance = abs_tol + rel_tol * std::abs(rhs);
  c.pass = lhs <= rhs + c.tolerance;
  return c;
}

Check check_at_least(std::string name, double lhs, double rhs, double abs_tol, double rel_tol)
{
  Check c;
  c.name = std::move(name);
  c.relation = ">=";
  c.lhs = lhs;
  c.rhs = rhs;
  c.margin = lhs - rhs;
  c.tolerance = abs_tol + rel_tol * std::abs(rhs);
  c.pass = lhs >= rhs - c.tolerance;
  return c;
}

bool VerificationReport::all_pass() const
{
  return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

std::vector<std::string> VerificationReport::failures() const
{
  std::vector<std::string> out;
  for (const auto &c : checks)
    if (!c.pass)
      out.push_back(subject + ": " + c.name);
  return out;
}

nlohmann::json to_json(const Check &c)
{
  nlohmann::json j = {{"check", c.name}, {"relation", c.relation}, {"lhs", c.lhs},
                      {"rhs", c.rhs},    {"margin", c.margin},     {"tolerance", c.tolerance},
                      {"pass", c.pass}};
  if (!c.note.empty())
    j["note"] = c.note;
  if (c.constants)
    j["constants"] = {{"gamma", c.constants->gamma},
                      {"L_value", c.constants->value},
                      {"provenance", c.constants->provenance}};
  return j;
}

nlohmann::json to_json(const VerificationReport &r)
{
  nlohmann::json checks = nlohmann::json::array();
  for (const auto &c : r.checks)
    checks.push_back(to_json(c));
  return {{"subject", r.subject}, {"pass", r.all_pass()}, {"checks", checks}};
}

}  // namespace specwave
