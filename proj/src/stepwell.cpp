// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#include "specwave/stepwell.hpp"

#include <algorithm>
#include <cmath>
#include <variant>

#include "specwave/errors.hpp"

namespace specwave
{

namespace
{

constexpr int kMaxBisection = 200;

double quad_arg(double mu, const StepDamping &w)
{
  return -(mu * w.depth() + mu * mu);
}

SecularRoot bisect(const StepDamping &w, double lo, double hi, double glo, double tol)
{
  SecularRoot r;
  for (int step = 1; step <= kMaxBisection; ++step)
  {
    const double mid = 0.5 * (lo + hi);
    const double gm = secular_G(mid, w);
    if (gm == 0.0 || (std::signbit(gm) == std::signbit(glo)))
    {
      if (gm == 0.0)
        lo = hi = mid;
      else
      {
        lo = mid;
        glo = gm;
      }
    }
    else
    {
      hi = mid;
    }
    const double centre = 0.5 * (lo + hi);
    const double gc = secular_G(centre, w);
    if (std::abs(gc) < tol && (hi - lo) < tol)
    {
      r.mu_star = centre;
      r.residual = std::abs(gc);
      r.lo = lo;
      r.hi = hi;
      r.bisection_steps = step;
      return r;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(centre))
      break;
  }
  throw NumericalError("secular bisection did not reach tolerance " + std::to_string(tol) +
                         " in " + std::to_string(kMaxBisection) + " steps",
                       kMaxBisection);
}

std::vector<double> scan_nodes(double top, int points, bool densify)
{
  std::vector<double> x;
  x.reserve(points + 64);
  for (int j = 1; j <= points; ++j)
    x.push_back(top * j / (points + 1));
  if (densify)
  {
    for (int k = 3; k <= 14; ++k)
    {
      const double d = top * std::pow(10.0, -k);
      x.push_back(d);
      x.push_back(top - d);
    }
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
  }
  return x;
}

std::vector<SecularRoot> roots_on(const StepDamping &w, const std::vector<double> &x, double tol)
{
  std::vector<SecularRoot> roots;
  double prev = secular_G(x[0], w);
  for (std::size_t j = 1; j < x.size(); ++j)
  {
    const double cur = secular_G(x[j], w);
    if (prev == 0.0)
    {
      roots.push_back({x[j - 1], 0.0, x[j - 1], x[j - 1], 0});
    }
    else if (cur != 0.0 && std::signbit(cur) != std::signbit(prev))
    {
      roots.push_back(bisect(w, x[j - 1], x[j], prev, tol));
    }
    prev = cur;
  }
  return roots;
}

}  // namespace

StepDamping::StepDamping(double a, double b) : a_(a), b_(b)
{
  if (!(a < 0.0) || !std::isfinite(a))
    throw DomainError("step depth a must be negative");
  if (!(b > 0.0) || !std::isfinite(b))
    throw DomainError("step half-width b must be positive");
}

StepDamping StepDamping::from_profile(const DampingProfile &p)
{
  const auto *s = std::get_if<StepKind>(&p.kind());
  if (!s)
    throw DomainError("secular analysis needs a step damping, got " + p.describe());
  if (std::abs(s->a.imag()) > 1e-12)
    throw DomainError("secular analysis needs a real step depth");
  return StepDamping(s->a.real(), s->b);
}

double secular_F(double mu, const StepDamping &w)
{
  const double arg = quad_arg(mu, w);
  if (!(mu > 0.0 && mu < -w.depth()) || !(arg > 0.0))
    throw DomainError("secular_F is defined on (0, -a) only");
  const double s = std::sqrt(arg);
  const double phase = 2.0 * w.half_width() * s;
  return 2.0 * s * std::cos(phase) + (w.depth() + 2.0 * mu) * std::sin(phase);
}

double secular_G(double mu, const StepDamping &w)
{
  if (!(mu >= 0.0 && mu <= -w.depth()))
    throw DomainError("secular_G is defined on [0, -a] only");
  if (mu == 0.0 || mu == -w.depth())
    return 0.0;
  const double arg = quad_arg(mu, w);
  if (!(arg > 0.0))
    return 0.0;  // rounding at the very ends of the interval
  return std::sqrt(arg) * secular_F(mu, w);
}

std::pair<double, double> endpoint_slopes(const StepDamping &w)
{
  const double a = w.depth();
  const double c = w.c();
  return {2.0 * a * (-1.0 + c), 2.0 * a * (1.0 + c)};
}

std::vector<SecularRoot> find_real_eigenvalues(const StepDamping &w, int scan_points, double tol)
{
  if (scan_points < 100)
    throw DomainError("secular scan needs at least 100 points");
  if (!(tol > 0.0))
    throw DomainError("secular tolerance must be positive");
  const double top = -w.depth();
  std::vector<SecularRoot> roots = roots_on(w, scan_nodes(top, scan_points, false), tol);
  if (roots.empty() && w.c() > 1.0)
    roots = roots_on(w, scan_nodes(top, scan_points, true), tol);
  return roots;
}

std::optional<SecularRoot> find_real_eigenvalue(const StepDamping &w, int scan_points, double tol)
{
  auto roots = find_real_eigenvalues(w, scan_points, tol);
  if (roots.empty())
    return std::nullopt;
  return roots.back();
}

std::vector<std::pair<double, double>> secular_sweep(const StepDamping &w, int points)
{
  if (points < 2)
    throw DomainError("secular sweep needs at least 2 points");
  const double top = -w.depth();
  std::vector<std::pair<double, double>> out;
  out.reserve(points + 2);
  for (int j = 0; j <= points + 1; ++j)
  {
    const double mu = (j == points + 1) ? top : top * j / (points + 1);
    out.emplace_back(mu, secular_G(mu, w));
  }
  return out;
}

std::string to_string(DeltaPencilClass c)
{
  switch (c)
  {
  case DeltaPencilClass::no_solution:
    return "no_solution";
  case DeltaPencilClass::right_half_plane:
    return "right_half_plane";
  case DeltaPencilClass::left_half_plane:
    return "left_half_plane";
  }
  return "unknown";
}

DeltaPencilClass delta_pencil_classify(std::complex<double> alpha)
{
  if (alpha == std::complex<double>(-2.0, 0.0))
    return DeltaPencilClass::right_half_plane;
  if (alpha == std::complex<double>(2.0, 0.0))
    return DeltaPencilClass::left_half_plane;
  return DeltaPencilClass::no_solution;
}

}  // namespace specwave
