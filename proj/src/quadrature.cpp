// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#include "specwave/quadrature.hpp"

#include <cmath>
#include <limits>

#include "specwave/errors.hpp"

namespace specwave
{

void QuadratureSpec::validate() const
{
  if (panels < 2)
    throw DomainError("quadrature needs at least 2 panels");
  if (truncation_radius && !(*truncation_radius > 0.0))
    throw DomainError("truncation radius must be positive");
}

QuadratureNodes composite_nodes(QuadratureRule rule, int panels, double lo, double hi)
{
  if (panels < 1)
    throw DomainError("quadrature needs at least one panel");
  if (rule == QuadratureRule::simpson && panels % 2 != 0)
    ++panels;

  QuadratureNodes q;
  q.x.resize(panels + 1);
  q.w.resize(panels + 1);
  const double h = (hi - lo) / panels;
  for (int i = 0; i <= panels; ++i)
  {
    q.x[i] = (i == panels) ? hi : lo + i * h;
    if (rule == QuadratureRule::trapezoid)
      q.w[i] = (i == 0 || i == panels) ? 0.5 * h : h;
    else
      q.w[i] = (i == 0 || i == panels) ? h / 3.0 : (i % 2 ? 4.0 * h / 3.0 : 2.0 * h / 3.0);
  }
  return q;
}

namespace
{

double weighted_sum(const std::function<double(double)> &f, const QuadratureNodes &q)
{
  double s = 0.0;
  for (std::size_t i = 0; i < q.x.size(); ++i)
    s += q.w[i] * f(q.x[i]);
  return s;
}

}  // namespace

IntegralEstimate integrate(const std::function<double(double)> &f, double lo, double hi,
                           QuadratureRule rule, int panels)
{
  if (panels < 2)
    throw DomainError("quadrature needs at least 2 panels");
  if (rule == QuadratureRule::simpson && panels % 2 != 0)
    ++panels;
  const int coarse = (rule == QuadratureRule::simpson) ? std::max(2, (panels / 2) & ~1) : panels / 2;

  const double fine_value = weighted_sum(f, composite_nodes(rule, panels, lo, hi));
  const double coarse_value = weighted_sum(f, composite_nodes(rule, coarse, lo, hi));

  // Rounding floor so a converged rule never reports a zero error.
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(fine_value);
  return {fine_value, std::abs(fine_value - coarse_value) + floor};
}

}  // namespace specwave
