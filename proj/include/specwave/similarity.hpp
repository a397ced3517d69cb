// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "specwave/damping.hpp"
#include "specwave/grid.hpp"
#include "specwave/quadrature.hpp"

namespace specwave
{

/// Free-space resolvent kernel of -d^2/dx^2 at z outside [0, inf):
/// e^{-sqrt(-z)|x-y|} / (2 sqrt(-z)), principal branch.
cplx green_kernel(cplx z, double x, double y);

/// Sample points xi = r e^{i phi} off the real axis.
struct XiGrid
{
  std::vector<double> moduli;
  std::vector<double> phases;

  /// `count` log-spaced moduli in [r_min, r_max] times phases (2k+1) pi / P,
  /// k = 0..P-1. P must be even so that no phase lands on the real axis.
  static XiGrid log_spaced(int count = 25, double r_min = 1e-3, double r_max = 1e3,
                           int phase_count = 8);

  std::vector<cplx> points() const;
  void validate() const;
};

/// HS norm of |a|^{1/2} xi R(xi^2, -Delta) |a|^{1/2}:
///   |xi| (int int |a(x)| |G_{xi^2}(x, y)|^2 |a(y)| dx dy)^{1/2}.
/// Tensor quadrature on the support window with the diagonal singularity of
/// the kernel subtracted and integrated exactly. The error is the change
/// against half the panels plus the truncated tail.
IntegralEstimate bs_hs_estimate(const DampingProfile &a, cplx xi, const QuadratureSpec &q);
double bs_hs_norm(const DampingProfile &a, cplx xi, const QuadratureSpec &q);

struct HsSample
{
  cplx xi;
  double value = 0.0;
  double error = 0.0;
};

struct HsSup
{
  double value = 0.0;
  double error = 0.0;  // error estimate at the attaining point
  cplx attaining_xi;
  std::vector<HsSample> samples;  // moduli outer, phases inner
};

HsSup sup_hs_norm(const DampingProfile &a, const XiGrid &grid, const QuadratureSpec &q);

enum class SimilarityVerdict
{
  similar_to_undamped,
  inconclusive
};

std::string to_string(SimilarityVerdict v);

struct SimilarityResult
{
  SimilarityVerdict verdict = SimilarityVerdict::inconclusive;
  IntegralEstimate l1;
  double analytic_bound = 0.0;  // ||a||_1 / 2
  HsSup sup;
  bool corroborated = false;  // sup < 1 on the sampled grid
};

/// Similar to the undamped operator when ||a||_1 plus its quadrature error is
/// below 2. The sampled HS supremum is reported alongside.
SimilarityResult kato_similarity_verdict(const DampingProfile &a, const XiGrid &grid,
                                         const QuadratureSpec &q);

using VectorPair = std::pair<Eigen::VectorXcd, Eigen::VectorXcd>;

/// Discrete R(xi, iA_0) f via R(xi^2, -Lap_h) (xi, i; i Lap_h, xi).
VectorPair resolvent_block_action(cplx xi, const VectorPair &f, const Grid &g);

/// (iA_{0,h} - xi) applied to (u, v): (i v - xi u, i Lap_h u - xi v).
VectorPair shifted_generator_action(cplx xi, const VectorPair &u, const Grid &g);

}  // namespace specwave
