// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#include "specwave/enclosure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <variant>

#include "specwave/errors.hpp"
#include "specwave/schrodinger.hpp"

namespace specwave
{

namespace
{

EnclosureRegion make_region(RegionKind kind, RegionScope scope, std::string source)
{
  EnclosureRegion r;
  r.kind = kind;
  r.scope = scope;
  r.source = std::move(source);
  return r;
}

std::string fmt(double v)
{
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

void require_real(const DampingProfile &a, const char *what)
{
  if (!a.is_real())
    throw DomainError(std::string(what) + " needs a real-valued damping");
}

bool is_real_eigenvalue(cplx mu, double tol)
{
  return std::abs(mu.imag()) <= tol * std::max(1.0, std::abs(mu));
}

bool in_scope(cplx mu, RegionScope scope, double tol)
{
  switch (scope)
  {
  case RegionScope::all:
    return true;
  case RegionScope::positive_real:
    return is_real_eigenvalue(mu, tol) && mu.real() > 0.0;
  case RegionScope::negative_real:
    return is_real_eigenvalue(mu, tol) && mu.real() < 0.0;
  }
  return false;
}

std::string mu_label(cplx mu)
{
  std::ostringstream os;
  os.precision(8);
  os << "mu=" << mu.real() << (mu.imag() < 0 ? "-" : "+") << std::abs(mu.imag()) << "i";
  return os.str();
}

}  // namespace

std::string to_string(RegionKind k)
{
  switch (k)
  {
  case RegionKind::empty_point_spectrum:
    return "empty_point_spectrum";
  case RegionKind::real_upper_bound:
    return "real_upper_bound";
  case RegionKind::real_lower_bound:
    return "real_lower_bound";
  case RegionKind::annulus_lower:
    return "annulus_lower";
  case RegionKind::alpha_interval:
    return "alpha_interval";
  case RegionKind::no_conclusion:
    return "no_conclusion";
  }
  return "unknown";
}

std::string to_string(RegionScope s)
{
  switch (s)
  {
  case RegionScope::all:
    return "all";
  case RegionScope::positive_real:
    return "positive_real";
  case RegionScope::negative_real:
    return "negative_real";
  }
  return "unknown";
}

bool EnclosureRegion::applicable() const
{
  if (kind == RegionKind::no_conclusion)
    return false;
  return std::all_of(applicability.begin(), applicability.end(),
                     [](const Condition &c) { return c.holds; });
}

nlohmann::json to_json(const EnclosureRegion &r)
{
  nlohmann::json params = nlohmann::json::object();
  switch (r.kind)
  {
  case RegionKind::real_upper_bound:
  case RegionKind::real_lower_bound:
  case RegionKind::annulus_lower:
    params["bound"] = std::isfinite(r.bound) ? nlohmann::json(r.bound) : nlohmann::json("inf");
    break;
  case RegionKind::alpha_interval:
    params["lo"] = r.lo;
    params["hi"] = r.hi;
    params["mu_window"] = std::isfinite(r.window) ? nlohmann::json(r.window) : nlohmann::json("inf");
    break;
  default:
    break;
  }
  params["scope"] = to_string(r.scope);
  nlohmann::json cond = nlohmann::json::array();
  for (const auto &c : r.applicability)
    cond.push_back({{"name", c.name}, {"holds", c.holds}});
  nlohmann::json j = {{"source", r.source},
                      {"kind", to_string(r.kind)},
                      {"params", params},
                      {"applicability", cond},
                      {"applicable", r.applicable()}};
  if (!r.note.empty())
    j["note"] = r.note;
  return j;
}

FrankConstant frank_constant(double gamma, int d, double value)
{
  if (d == 1)
    throw DomainError("d = 1 has no Frank-type annulus; use davies_verdict");
  const bool positive_gamma = d >= 2 && gamma > 0.0 && gamma <= 0.5;
  const bool zero_gamma = d >= 3 && gamma == 0.0;
  if (!positive_gamma && !zero_gamma)
    throw DomainError("Frank constant needs 0 < gamma <= 1/2 with d >= 2, or gamma = 0 with d >= 3");
  if (!(value > 0.0) || !std::isfinite(value))
    throw DomainError("Frank constant D must be a user-supplied positive number");
  return {gamma, d, value};
}

std::pair<EnclosureRegion, EnclosureRegion>
lieb_thirring_bounds(const DampingProfile &a, double gamma, const QuadratureSpec &q,
                     std::optional<double> user_constant)
{
  require_real(a, "Lieb-Thirring enclosure");
  const LTConstant L = lt_constant(gamma, 1, user_constant);
  const auto [plus, minus] = signed_parts(a);
  const double p = gamma + 0.5;

  auto half_line = [&](const DampingProfile &part, RegionScope scope, const char *label) {
    const IntegralEstimate moment = lp_power_integral(part, p, q);
    std::string part_name = std::string("int a_") + label + "^" + fmt(p);
    if (gamma == 0.5)
    {
      const double threshold = 1.0 / L.value;
      const bool holds = moment.value + moment.error < threshold;
      EnclosureRegion r = make_region(holds ? RegionKind::empty_point_spectrum : RegionKind::no_conclusion,
                                      scope, "lieb_thirring");
      r.applicability.push_back({"a real-valued", true});
      r.applicability.push_back({part_name + " = " + fmt(moment.value) + " < 1/L = " + fmt(threshold), holds});
      return r;
    }
    const double rhs = L.value * moment.value;
    if (rhs == 0.0)
    {
      EnclosureRegion r = make_region(RegionKind::empty_point_spectrum, scope, "lieb_thirring");
      r.applicability.push_back({"a real-valued", true});
      r.applicability.push_back({part_name + " = 0", true});
      return r;
    }
    EnclosureRegion r = make_region(RegionKind::real_upper_bound, scope, "lieb_thirring");
    r.bound = std::pow(rhs, 1.0 / (gamma - 0.5));
    r.applicability.push_back({"a real-valued", true});
    r.applicability.push_back({part_name + " finite", std::isfinite(moment.value)});
    r.note = "L_{" + fmt(gamma) + ",1} = " + fmt(L.value) + " (" + to_string(L.provenance) + ")";
    return r;
  };

  return {half_line(minus, RegionScope::positive_real, "-"),
          half_line(plus, RegionScope::negative_real, "+")};
}

EnclosureRegion bargmann_lower_bound(const DampingProfile &a, const QuadratureSpec &q)
{
  require_real(a, "Bargmann lower bound");
  const double integral = signed_integral(a, q).value;
  const double weighted = weighted_l1_norm(a, q).value;
  if (!(weighted > 0.0))
    throw DomainError("int |a||x| = 0: the lower bound is unbounded");

  const bool positive = integral <= 0.0;
  EnclosureRegion r = make_region(RegionKind::real_lower_bound,
                                  positive ? RegionScope::positive_real : RegionScope::negative_real,
                                  "bfz_bargmann");
  r.bound = 1.0 / weighted;
  if (positive)
    r.applicability.push_back({"int a = " + fmt(integral) + " < -4", integral < -4.0});
  else
    r.applicability.push_back({"int a = " + fmt(integral) + " > 4", integral > 4.0});
  r.applicability.push_back({"a vanishes at infinity", a.vanishes_at_infinity()});
  return r;
}

EnclosureRegion coupling_interval(const DampingProfile &a, const QuadratureSpec &q)
{
  require_real(a, "coupling interval");
  const IntegralEstimate integral = signed_integral(a, q);
  const double weighted = weighted_l1_norm(a, q).value;
  const auto [plus, minus] = signed_parts(a);

  EnclosureRegion r = make_region(RegionKind::alpha_interval, RegionScope::positive_real,
                                  "coupling_interval");
  r.window = weighted > 0.0 ? 1.0 / weighted : std::numeric_limits<double>::infinity();
  r.applicability.push_back({"a vanishes at infinity", a.vanishes_at_infinity()});

  if (integral.value == 0.0 || std::abs(integral.value) <= integral.error)
  {
    r.applicability.push_back({"int a != 0", false});
    return r;
  }
  const bool negative_mass = integral.value < 0.0;
  r.scope = negative_mass ? RegionScope::positive_real : RegionScope::negative_real;
  const double part = l1_norm(negative_mass ? minus : plus, q).value;
  if (!(part > 0.0))
  {
    r.applicability.push_back({std::string("int a_") + (negative_mass ? "-" : "+") + " > 0", false});
    return r;
  }
  r.lo = 2.0 / part;
  r.hi = 4.0 / std::abs(integral.value);
  r.applicability.push_back({std::string("int a ") + (negative_mass ? "< 0" : "> 0"), true});
  r.note = "existence of alpha is checked numerically by an alpha sweep; uniqueness is not verified";
  return r;
}

EnclosureRegion davies_verdict(const DampingProfile &a, const QuadratureSpec &q)
{
  const IntegralEstimate n1 = l1_norm(a, q);
  const bool holds = n1.value + n1.error < 2.0;
  EnclosureRegion r = make_region(holds ? RegionKind::empty_point_spectrum : RegionKind::no_conclusion,
                                  RegionScope::all, "davies_l1");
  r.applicability.push_back({"||a||_1 + err = " + fmt(n1.value + n1.error) + " < 2", holds});
  return r;
}

EnclosureRegion frank_region(double integral, const FrankConstant &D)
{
  const FrankConstant checked = frank_constant(D.gamma, D.d, D.value);
  if (!(integral >= 0.0) || !std::isfinite(integral))
    throw DomainError("int |a|^{gamma+d/2} must be a finite nonnegative number");
  const double exponent = 0.5 * checked.d - checked.gamma;
  if (integral == 0.0)
  {
    EnclosureRegion r = make_region(RegionKind::empty_point_spectrum, RegionScope::all, "frank");
    r.applicability.push_back({"int |a|^p = 0 (r = inf)", true});
    return r;
  }
  EnclosureRegion r = make_region(RegionKind::annulus_lower, RegionScope::all, "frank");
  r.bound = std::pow(checked.value * integral, -1.0 / exponent);
  r.applicability.push_back({"D_{" + fmt(checked.gamma) + "," + std::to_string(checked.d) +
                               "} user-supplied = " + fmt(checked.value),
                             true});
  return r;
}

EnclosureRegion frank_region(const DampingProfile &a, const FrankConstant &D, const QuadratureSpec &q)
{
  const FrankConstant checked = frank_constant(D.gamma, D.d, D.value);
  const double p = checked.gamma + 0.5 * checked.d;
  return frank_region(radial_power_integral(a, p, checked.d, q).value, checked);
}

IntegralEstimate radial_power_integral(const DampingProfile &a, double p, int d, const QuadratureSpec &q)
{
  if (d < 1)
    throw DomainError("dimension must be positive");
  if (!(p > 0.0))
    throw DomainError("power must be positive");
  if (!a.vanishes_at_infinity())
    throw DomainError("norm undefined: profile does not vanish at infinity");
  q.validate();
  const double sphere = 2.0 * std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d);
  if (a.is_zero())
    return {};
  if (const auto *s = std::get_if<StepKind>(&a.kind()))
    return {sphere * std::pow(std::abs(s->a), p) * std::pow(s->b, d) / d, 0.0};
  const double r_max = support_window(a, q).second;
  auto f = [&](double r) { return std::pow(std::abs(a(r)), p) * std::pow(r, d - 1); };
  IntegralEstimate est = integrate(f, 0.0, r_max, q.rule, q.panels);
  est.value *= sphere;
  est.error *= sphere;
  return est;
}

VerificationReport membership_report(const std::vector<EnclosureRegion> &regions,
                                     const std::vector<cplx> &genuine, const MembershipOptions &opts)
{
  VerificationReport rep;
  rep.subject = "membership";
  for (const auto &r : regions)
  {
    if (!r.applicable())
      continue;
    if (r.kind == RegionKind::alpha_interval || r.kind == RegionKind::no_conclusion)
      continue;
    int in_scope_count = 0;
    for (const cplx mu : genuine)
    {
      if (!in_scope(mu, r.scope, opts.real_tol))
        continue;
      ++in_scope_count;
      const std::string name = r.source + "/" + to_string(r.kind) + "/" + to_string(r.scope) + ": " +
                               mu_label(mu);
      const double modulus = std::abs(mu);
      switch (r.kind)
      {
      case RegionKind::empty_point_spectrum: {
        Check c;
        c.name = name;
        c.relation = "absent";
        c.lhs = modulus;
        c.rhs = 0.0;
        c.margin = -modulus;
        c.pass = false;
        c.note = "genuine eigenvalue inside a region asserted empty";
        rep.checks.push_back(c);
        break;
      }
      case RegionKind::real_upper_bound:
        rep.checks.push_back(check_at_most(name, modulus, r.bound, opts.abs_tol, opts.rel_tol));
        break;
      case RegionKind::real_lower_bound:
      case RegionKind::annulus_lower:
        rep.checks.push_back(check_at_least(name, modulus, r.bound, opts.abs_tol, opts.rel_tol));
        break;
      default:
        break;
      }
    }
    if (in_scope_count == 0)
    {
      Check c;
      c.name = r.source + "/" + to_string(r.kind) + "/" + to_string(r.scope) + ": vacuous";
      c.relation = "vacuous";
      c.pass = true;
      c.note = "no genuine eigenvalue in scope";
      rep.checks.push_back(c);
    }
  }
  return rep;
}

VerificationReport membership_report(const std::vector<EnclosureRegion> &regions, const Spectrum &s,
                                     const MembershipOptions &opts)
{
  return membership_report(regions, s.genuine_eigenvalues(), opts);
}

}  // namespace specwave
