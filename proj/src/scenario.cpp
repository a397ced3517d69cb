// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#include "specwave/scenario.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>

#include "specwave/errors.hpp"
#include "specwave/schrodinger.hpp"
#include "specwave/similarity.hpp"
#include "specwave/stepwell.hpp"

namespace specwave
{

using nlohmann::json;

namespace
{

void check_keys(const json &j, std::initializer_list<const char *> allowed, const std::string &where)
{
  if (!j.is_object())
    throw DomainError(where + " must be a JSON object");
  for (const auto &item : j.items())
  {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char *k) { return item.key() == k; });
    if (!known)
      throw DomainError("unknown key '" + item.key() + "' in " + where);
  }
}

double get_number(const json &j, const char *key, const std::string &where)
{
  if (!j.contains(key))
    throw DomainError("missing '" + std::string(key) + "' in " + where);
  const json &v = j.at(key);
  if (!v.is_number())
    throw DomainError("'" + std::string(key) + "' in " + where + " must be a number");
  return v.get<double>();
}

int get_int(const json &v, const std::string &what)
{
  if (!v.is_number_integer())
    throw DomainError(what + " must be an integer");
  return v.get<int>();
}

cplx complex_from_json(const json &v, const std::string &what)
{
  if (v.is_number())
    return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw DomainError(what + " must be a number or [re, im]");
}

json complex_to_json(cplx z)
{
  if (z.imag() == 0.0)
    return z.real();
  return json::array({z.real(), z.imag()});
}

json finite_or_null(double v)
{
  return std::isfinite(v) ? json(v) : json(nullptr);
}

std::string csv_number(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text(const std::filesystem::path &path, const std::string &text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw DomainError("cannot write " + path.string());
  out << text;
  if (!out)
    throw DomainError("write failed for " + path.string());
}

bool is_real_value(cplx mu, double tol)
{
  return std::abs(mu.imag()) <= tol * std::max(1.0, std::abs(mu));
}

constexpr double kRealTol = 1e-6;

}  // namespace

std::string to_string(Analysis a)
{
  switch (a)
  {
  case Analysis::enclose:
    return "enclose";
  case Analysis::solve:
    return "solve";
  case Analysis::verify_lt:
    return "verify-lt";
  case Analysis::similarity:
    return "similarity";
  case Analysis::step_secular:
    return "step-secular";
  case Analysis::sweep_alpha:
    return "sweep-alpha";
  }
  return "unknown";
}

std::vector<Analysis> all_analyses()
{
  return {Analysis::enclose,    Analysis::solve,        Analysis::verify_lt,
          Analysis::similarity, Analysis::step_secular, Analysis::sweep_alpha};
}

Analysis analysis_from_string(const std::string &name)
{
  for (Analysis a : all_analyses())
    if (to_string(a) == name)
      return a;
  throw DomainError("unknown analysis '" + name + "'");
}

void ScenarioConfig::validate() const
{
  if (grid_n < 3)
    throw DomainError("grid N must be at least 3, got " + std::to_string(grid_n));
  if (!(grid_l > 0.0) || !std::isfinite(grid_l))
    throw DomainError("grid L must be positive");
  quadrature.validate();
  if (xi.count < 1 || xi.phases < 2 || xi.phases % 2 != 0 || !(xi.r_min > 0.0) ||
      !(xi.r_max >= xi.r_min))
    throw DomainError("invalid xi grid");
  if (thresholds.tau_re && !(*thresholds.tau_re > 0.0))
    throw DomainError("tau_re must be positive");
  if (thresholds.epsilon && !(*thresholds.epsilon > 0.0))
    throw DomainError("epsilon must be positive");
  for (double v : {thresholds.loc_threshold, thresholds.resolution, thresholds.tol,
                   thresholds.abs_tol, thresholds.rel_tol})
    if (!(v > 0.0) || !std::isfinite(v))
      throw DomainError("thresholds must be positive");
  if (thresholds.loc_threshold >= 1.0)
    throw DomainError("loc_threshold must lie in (0, 1)");
  if (dense_max_nodes < 0)
    throw DomainError("dense_max_nodes must be nonnegative");
  if (lt_gammas.empty())
    throw DomainError("at least one Lieb-Thirring gamma is needed");
  if (sweep.count < 1)
    throw DomainError("sweep count must be positive");
  for (double a : sweep.alphas)
    if (!(a >= 0.0) || !std::isfinite(a))
      throw DomainError("sweep alphas must be nonnegative");
  if (secular_points < 100)
    throw DomainError("secular scan needs at least 100 points");
  if (analyses.empty())
    throw DomainError("no analyses requested");
  if (out_dir.empty())
    throw DomainError("output directory is empty");
}

Grid ScenarioConfig::grid() const
{
  return Grid(grid_l, grid_n);
}

ClassifyOptions ScenarioConfig::classify_options() const
{
  ClassifyOptions o = default_classify_options(grid());
  if (thresholds.tau_re)
    o.tau_re = *thresholds.tau_re;
  o.loc_threshold = thresholds.loc_threshold;
  o.resolution = thresholds.resolution;
  return o;
}

SolveOptions ScenarioConfig::solve_options() const
{
  SolveOptions o;
  o.method = method;
  o.dense_max_nodes = dense_max_nodes;
  o.seed = seed;
  return o;
}

ScenarioConfig config_from_json(const json &j)
{
  check_keys(j, {"damping", "potential", "grid", "xi_grid", "quadrature", "thresholds", "solver", "lt",
                 "frank", "sweep", "secular_points", "analyses", "out_dir", "seed"},
             "config");
  ScenarioConfig c;
  if (j.contains("damping"))
    c.damping = j.at("damping");
  if (j.contains("potential"))
    c.potential = j.at("potential");
  if (j.contains("grid"))
  {
    const json &g = j.at("grid");
    check_keys(g, {"L", "N"}, "grid");
    if (g.contains("L"))
      c.grid_l = get_number(g, "L", "grid");
    if (g.contains("N"))
      c.grid_n = get_int(g.at("N"), "grid N");
  }
  if (j.contains("xi_grid"))
  {
    const json &x = j.at("xi_grid");
    check_keys(x, {"count", "r_min", "r_max", "phases"}, "xi_grid");
    if (x.contains("count"))
      c.xi.count = get_int(x.at("count"), "xi_grid count");
    if (x.contains("r_min"))
      c.xi.r_min = get_number(x, "r_min", "xi_grid");
    if (x.contains("r_max"))
      c.xi.r_max = get_number(x, "r_max", "xi_grid");
    if (x.contains("phases"))
      c.xi.phases = get_int(x.at("phases"), "xi_grid phases");
  }
  if (j.contains("quadrature"))
  {
    const json &q = j.at("quadrature");
    check_keys(q, {"rule", "panels", "truncation_radius"}, "quadrature");
    if (q.contains("rule"))
    {
      const std::string rule = q.at("rule").get<std::string>();
      if (rule == "simpson")
        c.quadrature.rule = QuadratureRule::simpson;
      else if (rule == "trapezoid")
        c.quadrature.rule = QuadratureRule::trapezoid;
      else
        throw DomainError("unknown quadrature rule '" + rule + "'");
    }
    if (q.contains("panels"))
      c.quadrature.panels = get_int(q.at("panels"), "quadrature panels");
    if (q.contains("truncation_radius"))
      c.quadrature.truncation_radius = get_number(q, "truncation_radius", "quadrature");
  }
  if (j.contains("thresholds"))
  {
    const json &t = j.at("thresholds");
    check_keys(t, {"tau_re", "loc_threshold", "resolution", "epsilon", "tol", "abs_tol", "rel_tol"},
               "thresholds");
    if (t.contains("tau_re"))
      c.thresholds.tau_re = get_number(t, "tau_re", "thresholds");
    if (t.contains("epsilon"))
      c.thresholds.epsilon = get_number(t, "epsilon", "thresholds");
    if (t.contains("loc_threshold"))
      c.thresholds.loc_threshold = get_number(t, "loc_threshold", "thresholds");
    if (t.contains("resolution"))
      c.thresholds.resolution = get_number(t, "resolution", "thresholds");
    if (t.contains("tol"))
      c.thresholds.tol = get_number(t, "tol", "thresholds");
    if (t.contains("abs_tol"))
      c.thresholds.abs_tol = get_number(t, "abs_tol", "thresholds");
    if (t.contains("rel_tol"))
      c.thresholds.rel_tol = get_number(t, "rel_tol", "thresholds");
  }
  if (j.contains("solver"))
  {
    const json &s = j.at("solver");
    check_keys(s, {"method", "dense_max_nodes"}, "solver");
    if (s.contains("method"))
    {
      const std::string m = s.at("method").get<std::string>();
      if (m == "automatic" || m == "auto")
        c.method = SolverMethod::automatic;
      else if (m == "dense")
        c.method = SolverMethod::dense;
      else if (m == "structured")
        c.method = SolverMethod::structured;
      else
        throw DomainError("unknown solver method '" + m + "'");
    }
    if (s.contains("dense_max_nodes"))
      c.dense_max_nodes = get_int(s.at("dense_max_nodes"), "dense_max_nodes");
  }
  if (j.contains("lt"))
  {
    const json &l = j.at("lt");
    check_keys(l, {"gammas", "constant"}, "lt");
    if (l.contains("gammas"))
      c.lt_gammas = l.at("gammas").get<std::vector<double>>();
    if (l.contains("constant"))
      c.lt_constant = get_number(l, "constant", "lt");
  }
  if (j.contains("frank"))
  {
    const json &f = j.at("frank");
    check_keys(f, {"gamma", "d", "value"}, "frank");
    c.frank = FrankSpec{get_number(f, "gamma", "frank"), get_int(f.at("d"), "frank d"),
                        get_number(f, "value", "frank")};
  }
  if (j.contains("sweep"))
  {
    const json &s = j.at("sweep");
    check_keys(s, {"alphas", "count"}, "sweep");
    if (s.contains("alphas"))
      c.sweep.alphas = s.at("alphas").get<std::vector<double>>();
    if (s.contains("count"))
      c.sweep.count = get_int(s.at("count"), "sweep count");
  }
  if (j.contains("secular_points"))
    c.secular_points = get_int(j.at("secular_points"), "secular_points");
  if (j.contains("analyses"))
  {
    for (const auto &name : j.at("analyses"))
    {
      const std::string s = name.get<std::string>();
      if (s == "all")
      {
        const auto every = all_analyses();
        c.analyses.insert(every.begin(), every.end());
      }
      else
        c.analyses.insert(analysis_from_string(s));
    }
  }
  if (j.contains("out_dir"))
    c.out_dir = j.at("out_dir").get<std::string>();
  if (j.contains("seed"))
  {
    if (!j.at("seed").is_number_unsigned())
      throw DomainError("seed must be a nonnegative integer");
    c.seed = j.at("seed").get<std::uint64_t>();
  }
  return c;
}

json to_json(const ScenarioConfig &c)
{
  json analyses = json::array();
  for (Analysis a : all_analyses())
    if (c.analyses.count(a))
      analyses.push_back(to_string(a));
  json thresholds = {{"loc_threshold", c.thresholds.loc_threshold},
                     {"resolution", c.thresholds.resolution},
                     {"tol", c.thresholds.tol},
                     {"abs_tol", c.thresholds.abs_tol},
                     {"rel_tol", c.thresholds.rel_tol}};
  if (c.thresholds.tau_re)
    thresholds["tau_re"] = *c.thresholds.tau_re;
  if (c.thresholds.epsilon)
    thresholds["epsilon"] = *c.thresholds.epsilon;
  json quadrature = {{"rule", c.quadrature.rule == QuadratureRule::simpson ? "simpson" : "trapezoid"},
                     {"panels", c.quadrature.panels}};
  if (c.quadrature.truncation_radius)
    quadrature["truncation_radius"] = *c.quadrature.truncation_radius;
  json lt = {{"gammas", c.lt_gammas}};
  if (c.lt_constant)
    lt["constant"] = *c.lt_constant;
  json j = {{"damping", c.damping},
            {"grid", {{"L", c.grid_l}, {"N", c.grid_n}}},
            {"xi_grid",
             {{"count", c.xi.count}, {"r_min", c.xi.r_min}, {"r_max", c.xi.r_max}, {"phases", c.xi.phases}}},
            {"quadrature", quadrature},
            {"thresholds", thresholds},
            {"solver", {{"method", to_string(c.method)}, {"dense_max_nodes", c.dense_max_nodes}}},
            {"lt", lt},
            {"sweep", {{"alphas", c.sweep.alphas}, {"count", c.sweep.count}}},
            {"secular_points", c.secular_points},
            {"analyses", analyses},
            {"out_dir", c.out_dir.string()},
            {"seed", c.seed}};
  if (c.potential)
    j["potential"] = *c.potential;
  if (c.frank)
    j["frank"] = {{"gamma", c.frank->gamma}, {"d", c.frank->d}, {"value", c.frank->value}};
  return j;
}

DampingProfile damping_from_json(const json &j, const Grid &g)
{
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw DomainError("damping needs a string 'kind'");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "zero")
  {
    check_keys(j, {"kind"}, "zero damping");
    return DampingProfile::zero();
  }
  if (kind == "step")
  {
    check_keys(j, {"kind", "a", "b"}, "step damping");
    if (!j.contains("a"))
      throw DomainError("missing 'a' in step damping");
    return DampingProfile::step(complex_from_json(j.at("a"), "step a"), get_number(j, "b", "step damping"));
  }
  if (kind == "gaussian")
  {
    check_keys(j, {"kind", "amplitude", "width"}, "gaussian damping");
    if (!j.contains("amplitude"))
      throw DomainError("missing 'amplitude' in gaussian damping");
    return DampingProfile::gaussian(complex_from_json(j.at("amplitude"), "gaussian amplitude"),
                                    get_number(j, "width", "gaussian damping"));
  }
  if (kind == "sampled")
  {
    check_keys(j, {"kind", "values", "vanishes_at_infinity"}, "sampled damping");
    if (!j.contains("values") || !j.at("values").is_array())
      throw DomainError("sampled damping needs a 'values' array");
    std::vector<cplx> values;
    for (const auto &v : j.at("values"))
      values.push_back(complex_from_json(v, "sampled value"));
    const bool vanishes = j.value("vanishes_at_infinity", true);
    return DampingProfile::sampled(g, std::move(values), vanishes);
  }
  throw DomainError("unknown damping kind '" + kind + "'");
}

json damping_json_from_string(const std::string &text)
{
  if (text == "zero")
    return {{"kind", "zero"}};
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw DomainError("damping must be zero, step:A,B or gaussian:A,W");
  const std::string kind = text.substr(0, colon);
  std::vector<double> args;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ','))
  {
    try
    {
      std::size_t used = 0;
      args.push_back(std::stod(item, &used));
      if (used != item.size())
        throw std::invalid_argument(item);
    }
    catch (const std::exception &)
    {
      throw DomainError("bad number '" + item + "' in damping '" + text + "'");
    }
  }
  if (args.size() != 2)
    throw DomainError("damping '" + text + "' needs two numbers");
  if (kind == "step")
    return {{"kind", "step"}, {"a", args[0]}, {"b", args[1]}};
  if (kind == "gaussian")
    return {{"kind", "gaussian"}, {"amplitude", args[0]}, {"width", args[1]}};
  throw DomainError("unknown damping kind '" + kind + "'");
}

SweepTable sweep_alpha(const DampingProfile &a, const std::vector<double> &alphas, const Grid &g,
                       const QuadratureSpec &q, const SolveOptions &solve,
                       const ClassifyOptions &classify_opts, double real_tol)
{
  SweepTable table;
  if (!a.is_zero())
    table.interval = coupling_interval(a, q);
  const bool applicable = table.interval.applicable();
  const double slack = 1e-12 * std::max(1.0, table.interval.hi);
  const bool positive_side = table.interval.scope == RegionScope::positive_real;

  for (double alpha : alphas)
  {
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
      throw DomainError("sweep alphas must be nonnegative");
    const DampingProfile scaled = alpha == 0.0 ? DampingProfile::zero() : a.scaled(alpha);
    const Spectrum s = classify(solve_spectrum(assemble_companion(scaled, g), solve), g, classify_opts);
    SweepRow row;
    row.alpha = alpha;
    row.in_interval = applicable && alpha >= table.interval.lo - slack && alpha <= table.interval.hi + slack;
    for (const cplx mu : s.genuine_eigenvalues())
      if (is_real_value(mu, real_tol))
        row.genuine_real.push_back(mu.real());
    row.genuine_count = s.genuine_count();
    const bool hit = std::any_of(row.genuine_real.begin(), row.genuine_real.end(),
                                 [&](double mu) { return positive_side ? mu > 0.0 : mu < 0.0; });
    if (row.in_interval && hit)
      table.found_in_interval = true;
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace
{

enum Severity
{
  kCheck = 1,
  kConfig = 2,
  kNumerical = 3
};

class Runner
{
public:
  explicit Runner(const ScenarioConfig &c) : config_(c) {}

  RunReport execute();

private:
  void fail(int code, const std::string &msg)
  {
    report_.failures.push_back(msg);
    report_.exit_code = std::max(report_.exit_code, code);
  }

  // Runs one stage; module errors become failures with the matching code.
  bool stage(const std::string &name, const std::function<void()> &body)
  {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    try
    {
      body();
    }
    catch (const NumericalError &e)
    {
      fail(kNumerical, name + ": " + e.what());
      ok = false;
    }
    catch (const DomainError &e)
    {
      fail(kConfig, name + ": " + e.what());
      ok = false;
    }
    catch (const std::exception &e)
    {
      fail(kNumerical, name + ": " + e.what());
      ok = false;
    }
    report_.timings[name] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return ok;
  }

  void record_checks(const VerificationReport &r, const std::string &prefix)
  {
    for (const auto &f : r.failures())
      fail(kCheck, prefix + ": " + f);
  }

  bool wants(Analysis a) const { return config_.analyses.count(a) > 0; }
  std::filesystem::path out(const char *name) const { return config_.out_dir / name; }

  void norms();
  void enclose();
  void solve();
  void membership();
  void verify_lt();
  void similarity();
  void step_secular();
  void sweep();

  const ScenarioConfig &config_;
  RunReport report_;
  json results_ = json::object();
  std::optional<Grid> grid_;
  std::optional<DampingProfile> damping_;
  std::optional<std::vector<EnclosureRegion>> regions_;
  std::optional<Spectrum> spectrum_;
};

void Runner::norms()
{
  const DampingProfile &a = *damping_;
  const QuadratureSpec &q = config_.quadrature;
  json d = {{"description", a.describe()}, {"sup_norm", a.sup_norm()}, {"real", a.is_real()}};
  if (a.vanishes_at_infinity())
  {
    const IntegralEstimate l1 = l1_norm(a, q);
    d["l1_norm"] = l1.value;
    d["l1_error"] = l1.error;
    d["weighted_l1_norm"] = weighted_l1_norm(a, q).value;
    if (a.is_real())
      d["integral"] = signed_integral(a, q).value;
  }
  results_["damping"] = d;
}

void Runner::enclose()
{
  const DampingProfile &a = *damping_;
  const QuadratureSpec &q = config_.quadrature;
  std::vector<EnclosureRegion> regions;
  regions.push_back(davies_verdict(a, q));
  if (a.is_real())
  {
    for (double gamma : config_.lt_gammas)
    {
      auto [pos, neg] = lieb_thirring_bounds(a, gamma, q, config_.lt_constant);
      regions.push_back(pos);
      regions.push_back(neg);
    }
    if (!a.is_zero())
    {
      regions.push_back(bargmann_lower_bound(a, q));
      regions.push_back(coupling_interval(a, q));
    }
  }
  if (config_.frank)
  {
    const FrankConstant D = frank_constant(config_.frank->gamma, config_.frank->d, config_.frank->value);
    EnclosureRegion r = frank_region(a, D, q);
    // Radial profile in R^d: a statement about the d-dimensional operator.
    r.applicability.push_back({"d = 1 pencil", false});
    regions.push_back(r);
  }

  json arr = json::array();
  std::ostringstream csv;
  csv << kCsvHeader << "\nregion,source,kind,scope,re,im\n";
  for (std::size_t k = 0; k < regions.size(); ++k)
  {
    const EnclosureRegion &r = regions[k];
    arr.push_back(to_json(r));
    if (!r.applicable())
      continue;
    auto row = [&](double re, double im) {
      csv << k << ',' << r.source << ',' << to_string(r.kind) << ',' << to_string(r.scope) << ','
          << csv_number(re) << ',' << csv_number(im) << '\n';
    };
    const double sign = r.scope == RegionScope::negative_real ? -1.0 : 1.0;
    switch (r.kind)
    {
    case RegionKind::real_upper_bound:
      row(0.0, 0.0);
      row(sign * r.bound, 0.0);
      break;
    case RegionKind::real_lower_bound:
      row(sign * r.bound, 0.0);
      break;
    case RegionKind::annulus_lower:
      for (int t = 0; t <= 360; ++t)
      {
        const double phi = t * std::numbers::pi / 180.0;
        row(r.bound * std::cos(phi), r.bound * std::sin(phi));
      }
      break;
    default:
      break;
    }
  }
  write_text(out("regions.json"), arr.dump(2) + "\n");
  write_text(out("regions_boundary.csv"), csv.str());
  results_["enclose"] = {{"regions", arr}};
  regions_ = std::move(regions);
}

void Runner::solve()
{
  const Grid &g = *grid_;
  const ClassifyOptions copts = config_.classify_options();
  Spectrum s = classify(solve_spectrum(assemble_companion(*damping_, g), config_.solve_options()), g, copts);

  std::ostringstream csv;
  csv << kCsvHeader << "\nindex,re,im,abs,residual,lift_defect,outer_mass,classification\n";
  std::map<std::string, int> counts;
  json genuine = json::array();
  for (std::size_t k = 0; k < s.pairs.size(); ++k)
  {
    const Eigenpair &p = s.pairs[k];
    csv << k << ',' << csv_number(p.mu.real()) << ',' << csv_number(p.mu.imag()) << ','
        << csv_number(std::abs(p.mu)) << ',' << csv_number(p.residual) << ','
        << csv_number(p.lift_defect) << ',' << csv_number(p.outer_mass) << ','
        << to_string(p.classification) << '\n';
    ++counts[to_string(p.classification)];
    if (p.classification == Classification::genuine)
      genuine.push_back({{"re", p.mu.real()},
                         {"im", p.mu.imag()},
                         {"residual", p.residual},
                         {"outer_mass", p.outer_mass}});
  }
  write_text(out("spectrum.csv"), csv.str());
  results_["solve"] = {{"method", to_string(s.method)},
                       {"grid", {{"L", g.half_length()}, {"N", g.interior_count()}, {"h", g.spacing()}}},
                       {"classifier",
                        {{"tau_re", copts.tau_re},
                         {"loc_threshold", copts.loc_threshold},
                         {"resolution", copts.resolution},
                         {"outer_fraction", copts.outer_fraction}}},
                       {"counts", counts},
                       {"genuine_count", s.genuine_count()},
                       {"genuine", genuine}};
  spectrum_ = std::move(s);
}

void Runner::membership()
{
  MembershipOptions m;
  m.abs_tol = config_.thresholds.abs_tol;
  m.rel_tol = config_.thresholds.rel_tol;
  m.real_tol = kRealTol;
  const VerificationReport r = membership_report(*regions_, *spectrum_, m);
  results_["membership"] = to_json(r);
  record_checks(r, "membership");
}

void Runner::verify_lt()
{
  const Grid &g = *grid_;
  const DampingProfile V = config_.potential ? damping_from_json(*config_.potential, g) : *damping_;
  InequalityOptions opts;
  opts.abs_tol = config_.thresholds.abs_tol;
  opts.rel_tol = config_.thresholds.rel_tol;
  opts.user_constant = config_.lt_constant;
  opts.epsilon = config_.thresholds.epsilon;
  const NegativeSpectrum neg = negative_eigenvalues(V, g, opts.epsilon);
  json reports = json::array();
  for (double gamma : config_.lt_gammas)
  {
    const VerificationReport r = verify_inequalities(V, gamma, g, config_.quadrature, opts);
    reports.push_back(to_json(r));
    record_checks(r, "verify-lt gamma=" + csv_number(gamma));
  }
  results_["verify_lt"] = {{"potential", V.describe()},
                           {"epsilon", neg.epsilon},
                           {"negative_eigenvalues", neg.eigenvalues},
                           {"reports", reports}};
}

void Runner::similarity()
{
  const XiGrid xg = XiGrid::log_spaced(config_.xi.count, config_.xi.r_min, config_.xi.r_max, config_.xi.phases);
  const SimilarityResult r = kato_similarity_verdict(*damping_, xg, config_.quadrature);

  std::ostringstream csv;
  csv << kCsvHeader << "\nmodulus,phase,xi_re,xi_im,hs_norm,error\n";
  for (const HsSample &s : r.sup.samples)
    csv << csv_number(std::abs(s.xi)) << ',' << csv_number(std::arg(s.xi) < 0 ? std::arg(s.xi) + 2 * std::numbers::pi
                                                                              : std::arg(s.xi))
        << ',' << csv_number(s.xi.real()) << ',' << csv_number(s.xi.imag()) << ','
        << csv_number(s.value) << ',' << csv_number(s.error) << '\n';
  write_text(out("hs_grid.csv"), csv.str());

  json j = {{"l1_norm", r.l1.value},
            {"l1_error", r.l1.error},
            {"analytic_bound", r.analytic_bound},
            {"sup_hs", r.sup.value},
            {"sup_hs_error", r.sup.error},
            {"attaining_xi", complex_to_json(r.sup.attaining_xi)},
            {"corroborated", r.corroborated},
            {"verdict", to_string(r.verdict)}};

  // Similar to the undamped operator leaves no room for point spectrum.
  if (spectrum_ && r.verdict == SimilarityVerdict::similar_to_undamped)
  {
    const std::size_t n = spectrum_->genuine_count();
    j["solve_consistent"] = n == 0;
    if (n != 0)
      fail(kCheck, "similarity: verdict similar_to_undamped but solve reports " + std::to_string(n) +
                     " genuine eigenvalues");
  }
  results_["similarity"] = j;
}

void Runner::step_secular()
{
  const StepDamping w = StepDamping::from_profile(*damping_);
  const std::vector<SecularRoot> roots = find_real_eigenvalues(w, config_.secular_points, config_.thresholds.tol);
  const auto [s0, s1] = endpoint_slopes(w);

  std::ostringstream csv;
  csv << kCsvHeader << "\nmu,G\n";
  for (const auto &[mu, G] : secular_sweep(w, config_.secular_points))
    csv << csv_number(mu) << ',' << csv_number(G) << '\n';
  write_text(out("step_secular.csv"), csv.str());

  json arr = json::array();
  for (const SecularRoot &r : roots)
    arr.push_back({{"mu", r.mu_star}, {"residual", r.residual}, {"bracket", {r.lo, r.hi}},
                   {"bisection_steps", r.bisection_steps}});
  json j = {{"a", w.depth()},
            {"b", w.half_width()},
            {"c", w.c()},
            {"endpoint_slopes", {s0, s1}},
            {"roots", arr},
            {"mu_star", roots.empty() ? json(nullptr) : json(roots.back().mu_star)}};

  if (spectrum_ && !roots.empty())
  {
    const double target = roots.back().mu_star;
    double best = std::numeric_limits<double>::infinity();
    cplx nearest{};
    for (const cplx mu : spectrum_->genuine_eigenvalues())
    {
      const double d = std::abs(mu - target);
      if (d < best)
      {
        best = d;
        nearest = mu;
      }
    }
    const double rel = best / target;
    Check c = check_at_most("secular_vs_pencil", rel, config_.thresholds.rel_tol, 0.0, 0.0);
    c.note = "relative distance of the nearest genuine pencil eigenvalue to mu*";
    j["pencil_match"] = {{"nearest", complex_to_json(nearest)}, {"relative_distance", finite_or_null(rel)},
                         {"pass", c.pass}};
    if (!c.pass)
      fail(kCheck, "step-secular: no genuine pencil eigenvalue within " +
                     csv_number(config_.thresholds.rel_tol) + " relative of mu*");
  }
  results_["step_secular"] = j;
}

void Runner::sweep()
{
  const DampingProfile &a = *damping_;
  if (!a.is_real())
    throw DomainError("sweep-alpha needs a real damping");
  std::vector<double> alphas = config_.sweep.alphas;
  if (alphas.empty())
  {
    const EnclosureRegion interval = a.is_zero() ? EnclosureRegion{} : coupling_interval(a, config_.quadrature);
    if (!interval.applicable())
      throw DomainError("no predicted alpha interval for this damping; give explicit sweep alphas");
    const int n = config_.sweep.count;
    for (int k = 0; k < n; ++k)
      alphas.push_back(n == 1 ? 0.5 * (interval.lo + interval.hi)
                              : interval.lo + (interval.hi - interval.lo) * k / (n - 1));
  }
  const SweepTable t = sweep_alpha(a, alphas, *grid_, config_.quadrature, config_.solve_options(),
                                   config_.classify_options(), kRealTol);

  std::ostringstream csv;
  csv << kCsvHeader << "\nalpha,in_interval,genuine_count,genuine_real_count,max_genuine_real\n";
  json rows = json::array();
  for (const SweepRow &r : t.rows)
  {
    const double top = r.genuine_real.empty()
                         ? std::numeric_limits<double>::quiet_NaN()
                         : *std::max_element(r.genuine_real.begin(), r.genuine_real.end());
    csv << csv_number(r.alpha) << ',' << (r.in_interval ? 1 : 0) << ',' << r.genuine_count << ','
        << r.genuine_real.size() << ',' << (r.genuine_real.empty() ? "" : csv_number(top)) << '\n';
    rows.push_back({{"alpha", r.alpha},
                    {"in_interval", r.in_interval},
                    {"genuine_count", r.genuine_count},
                    {"genuine_real", r.genuine_real}});
  }
  write_text(out("sweep_alpha.csv"), csv.str());
  results_["sweep_alpha"] = {{"interval", to_json(t.interval)},
                             {"rows", rows},
                             {"found_in_interval", t.found_in_interval}};
}

RunReport Runner::execute()
{
  bool ready = stage("setup", [&] {
    config_.validate();
    std::error_code ec;
    std::filesystem::create_directories(config_.out_dir, ec);
    if (ec || !std::filesystem::is_directory(config_.out_dir))
      throw DomainError("output directory " + config_.out_dir.string() + " is not a directory");
    grid_ = config_.grid();
    damping_ = damping_from_json(config_.damping, *grid_);
  });
  if (ready)
  {
    stage("norms", [&] { norms(); });
    if (wants(Analysis::enclose))
      stage("enclose", [&] { enclose(); });
    if (wants(Analysis::solve))
      stage("solve", [&] { solve(); });
    if (regions_ && spectrum_)
      stage("membership", [&] { membership(); });
    if (wants(Analysis::verify_lt))
      stage("verify-lt", [&] { verify_lt(); });
    if (wants(Analysis::similarity))
      stage("similarity", [&] { similarity(); });
    if (wants(Analysis::step_secular))
      stage("step-secular", [&] { step_secular(); });
    if (wants(Analysis::sweep_alpha))
      stage("sweep-alpha", [&] { sweep(); });
  }

  report_.body = {{"tool", "specwave"},
                  {"version", kVersion},
                  {"config", to_json(config_)},
                  {"results", results_},
                  {"failures", report_.failures},
                  {"pass", report_.failures.empty()},
                  {"exit_code", report_.exit_code}};
  if (ready)
  {
    try
    {
      write_text(out("report.json"), report_.body.dump(2) + "\n");
      write_text(out("timings.json"), json(report_.timings).dump(2) + "\n");
    }
    catch (const DomainError &e)
    {
      report_.failures.push_back(e.what());
      report_.exit_code = std::max(report_.exit_code, static_cast<int>(kConfig));
    }
  }
  return report_;
}

}  // namespace

RunReport run(const ScenarioConfig &config)
{
  return Runner(config).execute();
}

}  // namespace specwave
