// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#include "specwave/schrodinger.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <lapacke.h>

#include "specwave/errors.hpp"

namespace specwave
{

std::string to_string(ConstantProvenance p)
{
  switch (p)
  {
  case ConstantProvenance::sharp_known:
    return "sharp_known";
  case ConstantProvenance::classical:
    return "classical";
  case ConstantProvenance::user_supplied:
    return "user_supplied";
  }
  return "unknown";
}

bool lt_admissible(double gamma, int d)
{
  if (d < 1 || !std::isfinite(gamma))
    return false;
  if (d == 1)
    return gamma >= 0.5;
  if (d == 2)
    return gamma > 0.0;
  return gamma >= 0.0;
}

double classical_lt_constant(double gamma, int d)
{
  const double half_d = 0.5 * d;
  return std::tgamma(gamma + 1.0) /
         (std::pow(2.0, d) * std::pow(std::numbers::pi, half_d) * std::tgamma(gamma + half_d + 1.0));
}

LTConstant lt_constant(double gamma, int d, std::optional<double> user_value)
{
  if (!lt_admissible(gamma, d))
    throw DomainError("no finite Lieb-Thirring constant exists for gamma=" + std::to_string(gamma) +
                      ", d=" + std::to_string(d));
  if (d == 1 && gamma == 0.5)
    return {gamma, d, 0.5, ConstantProvenance::sharp_known};
  if (gamma >= 1.5)
    return {gamma, d, classical_lt_constant(gamma, d), ConstantProvenance::classical};
  if (!user_value)
    throw DomainError("the Lieb-Thirring constant for gamma=" + std::to_string(gamma) +
                      ", d=" + std::to_string(d) + " is not known in closed form; supply a value");
  if (!(*user_value > 0.0) || !std::isfinite(*user_value))
    throw DomainError("user-supplied Lieb-Thirring constant must be positive");
  return {gamma, d, *user_value, ConstantProvenance::user_supplied};
}

double default_negative_cutoff(const Grid &g)
{
  const double k = std::numbers::pi / (2.0 * g.half_length());
  return 2.0 * k * k;
}

NegativeSpectrum negative_eigenvalues(const DampingProfile &V, const Grid &g,
                                      std::optional<double> epsilon)
{
  if (!V.is_real())
    throw DomainError("Schrodinger potential must be real-valued");
  const double eps = epsilon.value_or(default_negative_cutoff(g));
  if (!(eps > 0.0))
    throw DomainError("negative-eigenvalue cutoff must be positive");

  NegativeSpectrum out{{}, eps, g};
  const int n = g.interior_count();
  const double inv_h2 = 1.0 / (g.spacing() * g.spacing());
  const Eigen::VectorXcd v = sample(V, g);

  std::vector<double> d(n), e(n - 1, -inv_h2);
  double vmin = 0.0;
  for (int k = 0; k < n; ++k)
  {
    d[k] = 2.0 * inv_h2 + v[k].real();
    vmin = std::min(vmin, v[k].real());
  }
  if (vmin >= 0.0)
    return out;  // -Lap_h + V >= 0

  std::vector<double> w(n);
  std::vector<lapack_int> isuppz(2 * n);
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'N', 'V', n, d.data(), e.data(),
                                         vmin - 1.0, -eps, 0, 0, 0.0, &found, w.data(), nullptr, 1,
                                         isuppz.data());
  if (info != 0)
    throw NumericalError("dstevr failed with info " + std::to_string(info),
                         0, static_cast<int>(info));
  for (lapack_int i = 0; i < found; ++i)
    if (w[i] < -eps)
      out.eigenvalues.push_back(w[i]);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

double lt_sum(const NegativeSpectrum &s, double gamma)
{
  if (!(gamma >= 0.0))
    throw DomainError("lt_sum needs gamma >= 0");
  double sum = 0.0;
  for (double l : s.eigenvalues)
    sum += std::pow(std::abs(l), gamma);
  return sum;
}

double bfz_lower(const DampingProfile &V, const QuadratureSpec &q)
{
  return -0.25 * signed_integral(V, q).value;
}

double bargmann_bound(const DampingProfile &V, const QuadratureSpec &q)
{
  if (!V.is_real())
    throw DomainError("Bargmann bound needs a real potential");
  return 1.0 + weighted_l1_norm(V, q).value;
}

VerificationReport verify_inequalities(const DampingProfile &V, double gamma, const Grid &g,
                                       const QuadratureSpec &q, const InequalityOptions &opts)
{
  if (!V.is_real())
    throw DomainError("inequality suite needs a real potential");
  const LTConstant L = lt_constant(gamma, 1, opts.user_constant);
  const NegativeSpectrum spec = negative_eigenvalues(V, g, opts.epsilon);

  VerificationReport report;
  report.subject = "inequalities " + V.describe();

  const double lhs = lt_sum(spec, gamma);
  const double moment = lp_power_integral(signed_parts(V).second, gamma + 0.5, q).value;
  Check lt = check_at_most("lieb_thirring", lhs, L.value * moment, opts.abs_tol, opts.rel_tol);
  lt.constants = ConstantInfo{gamma, L.value, to_string(L.provenance)};
  report.checks.push_back(lt);

  const double bargmann = bargmann_bound(V, q);
  Check count = check_at_most("bargmann_count", static_cast<double>(spec.eigenvalues.size()),
                              std::floor(bargmann), 0.0, 0.0);
  count.note = "bound 1 + int|V||x| = " + std::to_string(bargmann);
  report.checks.push_back(count);

  const double integral = signed_integral(V, q).value;
  if (integral < 0.0 && V.vanishes_at_infinity())
  {
    Check bfz = check_at_least("bfz_trace", lt_sum(spec, 0.5), bfz_lower(V, q), opts.abs_tol,
                               opts.rel_tol);
    bfz.constants = ConstantInfo{0.5, 0.25, "trace_formula"};
    report.checks.push_back(bfz);
  }
  return report;
}

}  // namespace specwave
