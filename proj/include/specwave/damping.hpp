// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "specwave/grid.hpp"
#include "specwave/quadrature.hpp"

namespace specwave
{

using cplx = std::complex<double>;

/// a(x) = a on (-b, b), 0 outside. At the jump |x| = b the midpoint value
/// a/2 is used; grid sampling averages over cells instead (see sample()).
struct StepKind
{
  cplx a;
  double b;
};

/// a(x) = amplitude * exp(-(x/width)^2).
struct GaussianKind
{
  cplx amplitude;
  double width;
};

/// Values at the interior nodes of a grid, zero at +-L, linear in between.
struct SampledKind
{
  Grid grid;
  std::vector<cplx> values;
};

struct ZeroKind
{
};

/// A bounded complex damping a : R -> C. Immutable once built.
class DampingProfile
{
public:
  using Kind = std::variant<ZeroKind, StepKind, GaussianKind, SampledKind>;

  static DampingProfile zero();
  static DampingProfile step(cplx a, double b);
  static DampingProfile gaussian(cplx amplitude, double width);
  static DampingProfile sampled(const Grid &grid, std::vector<cplx> values,
                                bool vanishes_at_infinity = true);

  const Kind &kind() const { return kind_; }
  bool vanishes_at_infinity() const { return vanishes_at_infinity_; }
  double sup_norm() const { return sup_norm_; }

  cplx operator()(double x) const;

  bool is_zero() const { return sup_norm_ == 0.0; }
  bool is_real(double tol = 1e-12) const;
  bool is_purely_imaginary(double tol = 1e-12) const;

  /// Profile of t * a(x), same kind.
  DampingProfile scaled(cplx t) const;

  std::string describe() const;

private:
  DampingProfile(Kind kind, bool vanishes);

  Kind kind_;
  bool vanishes_at_infinity_ = true;
  double sup_norm_ = 0.0;
};

// Integral functionals. Step profiles are integrated in closed form; gaussian
// profiles by composite quadrature on [-R, R] with the erfc tail added to the
// error; sampled profiles by the trapezoid rule on their own grid (q ignored).
// All throw DomainError("norm undefined") for non-decaying sampled data.

/// int |a|
IntegralEstimate l1_norm(const DampingProfile &a, const QuadratureSpec &q);

/// int |a|^p, p >= 1
IntegralEstimate lp_power_integral(const DampingProfile &a, double p, const QuadratureSpec &q);

/// int |a(x)| |x| dx
IntegralEstimate weighted_l1_norm(const DampingProfile &a, const QuadratureSpec &q);

/// int a for real-valued a.
IntegralEstimate signed_integral(const DampingProfile &a, const QuadratureSpec &q);

/// (a_+, a_-) with a_+ - a_- = a and both nonnegative. Real input only.
std::pair<DampingProfile, DampingProfile> signed_parts(const DampingProfile &a);

/// Values at the interior nodes of g. A step is averaged over the cell
/// [x - h/2, x + h/2] of each node, which keeps the discretization second
/// order when the jumps fall between nodes; other kinds are point values.
Eigen::VectorXcd sample(const DampingProfile &a, const Grid &g);

/// Integration window [lo, hi] outside which a vanishes or is truncated.
std::pair<double, double> support_window(const DampingProfile &a, const QuadratureSpec &q);

}  // namespace specwave
