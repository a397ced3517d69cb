// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specwave/damping.hpp"

namespace specwave
{

/// Real step damping W = a on (-b, b) with a < 0 < b. c = -ab is half its
/// L1 norm.
class StepDamping
{
public:
  StepDamping(double a, double b);
  static StepDamping from_profile(const DampingProfile &p);

  double depth() const { return a_; }
  double half_width() const { return b_; }
  double c() const { return -a_ * b_; }
  double l1_norm() const { return 2.0 * c(); }

  DampingProfile profile() const { return DampingProfile::step(a_, b_); }

private:
  double a_;
  double b_;
};

/// Secular function of the step, defined on the open interval (0, -a):
///   F(mu) = 2 s cos(2 b s) + (a + 2 mu) sin(2 b s),  s = sqrt(-(mu a + mu^2)).
double secular_F(double mu, const StepDamping &w);

/// G(mu) = s F(mu), extended by G(0) = G(-a) = 0 to the closed interval.
double secular_G(double mu, const StepDamping &w);

/// Limits of G' at 0+ and -a-: (2a(c - 1), 2a(1 + c)).
std::pair<double, double> endpoint_slopes(const StepDamping &w);

struct SecularRoot
{
  double mu_star = 0.0;
  double residual = 0.0;  // |G(mu_star)|
  double lo = 0.0;
  double hi = 0.0;
  int bisection_steps = 0;
};

/// Every sign change of G on a uniform scan of (0, -a) bisected down to
/// |G| < tol and bracket width < tol, ascending in mu.
///
/// The scan uses scan_points interior samples. When c > 1 the endpoint slopes
/// force a crossing; if the uniform scan misses it (roots crowd an endpoint
/// as c -> 1+) the scan is densified geometrically towards both endpoints.
std::vector<SecularRoot> find_real_eigenvalues(const StepDamping &w, int scan_points = 1000,
                                               double tol = 1e-10);

/// The largest root from find_real_eigenvalues, or nullopt when G has no sign
/// change.
std::optional<SecularRoot> find_real_eigenvalue(const StepDamping &w, int scan_points = 1000,
                                                double tol = 1e-10);

/// (mu, G(mu)) on `points` interior samples of (0, -a), endpoints included.
std::vector<std::pair<double, double>> secular_sweep(const StepDamping &w, int points);

enum class DeltaPencilClass
{
  no_solution,
  right_half_plane,
  left_half_plane
};

std::string to_string(DeltaPencilClass c);

/// Point-interaction limit of the step: psi'' = mu^2 psi off 0 with the jump
/// psi'(0+) - psi'(0-) = mu alpha psi(0). Admissible solutions exist only for
/// alpha = -2 (all Re mu > 0) or alpha = 2 (all Re mu < 0); compared exactly.
DeltaPencilClass delta_pencil_classify(std::complex<double> alpha);

}  // namespace specwave
