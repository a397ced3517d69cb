// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

// Command line front end: specwave <subcommand> [--config FILE] [flags].

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "specwave/errors.hpp"
#include "specwave/scenario.hpp"

namespace
{

struct Overrides
{
  std::string config_path;
  std::optional<std::string> damping;
  std::optional<int> grid_n;
  std::optional<double> grid_l;
  std::optional<double> tau_re;
  std::optional<double> loc_threshold;
  std::optional<double> epsilon;
  std::optional<double> tol;
  std::optional<int> panels;
  std::optional<std::string> method;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::vector<double> gammas;
  std::vector<double> alphas;
};

void add_common(CLI::App *cmd, Overrides &o)
{
  cmd->add_option("--config", o.config_path, "JSON scenario file");
  cmd->add_option("--damping", o.damping, "zero | step:A,B | gaussian:A,W");
  cmd->add_option("--grid-n", o.grid_n, "interior grid nodes");
  cmd->add_option("--grid-l", o.grid_l, "half-length of the box");
  cmd->add_option("--tau-re", o.tau_re, "continuum threshold on |Re mu|");
  cmd->add_option("--loc-threshold", o.loc_threshold, "outer-mass threshold");
  cmd->add_option("--epsilon", o.epsilon, "negative eigenvalue cutoff");
  cmd->add_option("--tol", o.tol, "secular root tolerance");
  cmd->add_option("--panels", o.panels, "quadrature panels");
  cmd->add_option("--method", o.method, "automatic | dense | structured");
  cmd->add_option("--out-dir", o.out_dir, "output directory");
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--gamma", o.gammas, "Lieb-Thirring exponents");
  cmd->add_option("--alpha", o.alphas, "explicit sweep couplings");
}

specwave::ScenarioConfig build_config(const Overrides &o, const std::string &subcommand)
{
  nlohmann::json j = nlohmann::json::object();
  if (!o.config_path.empty())
  {
    std::ifstream in(o.config_path);
    if (!in)
      throw specwave::DomainError("cannot read config " + o.config_path);
    try
    {
      j = nlohmann::json::parse(in);
    }
    catch (const nlohmann::json::exception &e)
    {
      throw specwave::DomainError(std::string("config parse error: ") + e.what());
    }
  }
  if (o.damping)
    j["damping"] = specwave::damping_json_from_string(*o.damping);
  if (o.grid_n)
    j["grid"]["N"] = *o.grid_n;
  if (o.grid_l)
    j["grid"]["L"] = *o.grid_l;
  if (o.tau_re)
    j["thresholds"]["tau_re"] = *o.tau_re;
  if (o.loc_threshold)
    j["thresholds"]["loc_threshold"] = *o.loc_threshold;
  if (o.epsilon)
    j["thresholds"]["epsilon"] = *o.epsilon;
  if (o.tol)
    j["thresholds"]["tol"] = *o.tol;
  if (o.panels)
    j["quadrature"]["panels"] = *o.panels;
  if (o.method)
    j["solver"]["method"] = *o.method;
  if (o.out_dir)
    j["out_dir"] = *o.out_dir;
  if (o.seed)
    j["seed"] = *o.seed;
  if (!o.gammas.empty())
    j["lt"]["gammas"] = o.gammas;
  if (!o.alphas.empty())
    j["sweep"]["alphas"] = o.alphas;
  j["analyses"] = nlohmann::json::array({subcommand});
  try
  {
    return specwave::config_from_json(j);
  }
  catch (const nlohmann::json::exception &e)
  {
    throw specwave::DomainError(std::string("config error: ") + e.what());
  }
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Spectral analysis of damped wave operators"};
  app.set_version_flag("--version", specwave::kVersion);
  app.require_subcommand(1);

  Overrides o;
  std::string chosen;
  const std::pair<const char *, const char *> commands[] = {
    {"enclose", "Eigenvalue enclosures from norms of the damping"},
    {"solve", "Full discrete spectrum with genuine/artifact classification"},
    {"verify-lt", "Lieb-Thirring, BFZ and Bargmann checks for the potential"},
    {"similarity", "Similarity verdict and sampled Birman-Schwinger HS norms"},
    {"step-secular", "Real eigenvalues of a step damping from its secular function"},
    {"sweep-alpha", "Genuine real eigenvalues across a coupling sweep"},
    {"all", "Every analysis above"},
  };
  for (const auto &[name, help] : commands)
  {
    CLI::App *cmd = app.add_subcommand(name, help);
    add_common(cmd, o);
    cmd->callback([&chosen, name] { chosen = name; });
  }

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e)
  {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  specwave::ScenarioConfig config;
  try
  {
    config = build_config(o, chosen);
  }
  catch (const specwave::Error &e)
  {
    std::cerr << "specwave: " << e.what() << '\n';
    return 2;
  }

  const specwave::RunReport report = specwave::run(config);
  for (const auto &f : report.failures)
    std::cerr << "specwave: " << f << '\n';
  std::cout << "specwave " << chosen << ": " << (report.failures.empty() ? "pass" : "fail") << " (exit "
            << report.exit_code << "), artifacts in " << config.out_dir.string() << '\n';
  return report.exit_code;
}
