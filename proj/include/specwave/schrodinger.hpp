// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specwave/damping.hpp"
#include "specwave/grid.hpp"
#include "specwave/quadrature.hpp"
#include "specwave/report.hpp"

namespace specwave
{

enum class ConstantProvenance
{
  sharp_known,
  classical,
  user_supplied
};

std::string to_string(ConstantProvenance p);

/// Lieb-Thirring constant L_{gamma,d}.
struct LTConstant
{
  double gamma;
  int d;
  double value;
  ConstantProvenance provenance;
};

/// A finite constant exists iff gamma >= 1/2 (d = 1), gamma > 0 (d = 2),
/// gamma >= 0 (d >= 3).
bool lt_admissible(double gamma, int d);

/// Gamma(gamma+1) / (2^d pi^{d/2} Gamma(gamma + d/2 + 1)).
double classical_lt_constant(double gamma, int d);

/// Sharp value 1/2 for (1/2, 1), the classical value for gamma >= 3/2, and
/// otherwise the caller's value. Nothing in between is ever defaulted.
LTConstant lt_constant(double gamma, int d, std::optional<double> user_value = std::nullopt);

/// Negative eigenvalues of -Lap_h + diag(V) below -epsilon, sorted ascending.
struct NegativeSpectrum
{
  std::vector<double> eigenvalues;
  double epsilon = 0.0;
  Grid grid;
};

/// 2 (pi / (2L))^2, twice the lowest mode of the truncated continuum.
double default_negative_cutoff(const Grid &g);

NegativeSpectrum negative_eigenvalues(const DampingProfile &V, const Grid &g,
                                      std::optional<double> epsilon = std::nullopt);

/// sum |lambda_n|^gamma
double lt_sum(const NegativeSpectrum &s, double gamma);

/// -(1/4) int V.
double bfz_lower(const DampingProfile &V, const QuadratureSpec &q);

/// 1 + int |V(x)| |x| dx.
double bargmann_bound(const DampingProfile &V, const QuadratureSpec &q);

struct InequalityOptions
{
  double abs_tol = 1e-8;
  double rel_tol = 1e-2;
  std::optional<double> user_constant;
  std::optional<double> epsilon;
};

/// Lieb-Thirring upper bound, Bargmann count and (when int V < 0) the
/// Buslaev-Faddeev-Zakharov lower bound for one real potential.
VerificationReport verify_inequalities(const DampingProfile &V, double gamma, const Grid &g,
                                       const QuadratureSpec &q, const InequalityOptions &opts = {});

}  // namespace specwave
