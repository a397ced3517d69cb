// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace specwave
{

enum class QuadratureRule
{
  trapezoid,
  simpson
};

struct QuadratureSpec
{
  QuadratureRule rule = QuadratureRule::simpson;
  int panels = 400;
  // Used for profiles without compact support; when unset each profile picks
  // its own default (10 widths for a gaussian).
  std::optional<double> truncation_radius;

  void validate() const;
};

/// A quadrature value with its error estimate. The estimate is the change
/// against the same rule on half the panels, plus any truncated tail bound.
struct IntegralEstimate
{
  double value = 0.0;
  double error = 0.0;
};

/// Nodes and weights of a composite rule on [lo, hi]. Simpson needs an even
/// panel count; an odd count is bumped by one.
struct QuadratureNodes
{
  std::vector<double> x;
  std::vector<double> w;
};

QuadratureNodes composite_nodes(QuadratureRule rule, int panels, double lo, double hi);

/// Composite rule applied to f with a Richardson-style error estimate.
IntegralEstimate integrate(const std::function<double(double)> &f, double lo, double hi,
                           QuadratureRule rule, int panels);

}  // namespace specwave
