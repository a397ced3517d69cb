// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#include "specwave/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <variant>

#include "specwave/errors.hpp"
#include "specwave/tridiagonal.hpp"

namespace specwave
{

namespace
{

constexpr cplx kI{0.0, 1.0};

void require_off_axis(cplx xi)
{
  if (xi.imag() == 0.0)
    throw DomainError("xi must lie off the real axis");
}

// |a| on a uniform rule over [lo, hi], squared HS norm by tensor quadrature.
//   HS^2 = 1/4 sum_i w_i A_i [ sum_j w_j e^{-beta|x_i - x_j|} (A_j - A_i) + A_i E_i ]
// with E_i = int_lo^hi e^{-beta|x_i - y|} dy in closed form.
double hs_squared(const DampingProfile &a, double beta, QuadratureRule rule, int panels, double lo,
                  double hi)
{
  const QuadratureNodes nodes = composite_nodes(rule, panels, lo, hi);
  const std::size_t n = nodes.x.size();
  const double h = (hi - lo) / static_cast<double>(n - 1);
  std::vector<double> A(n), t(n);
  // The window of a step is its support; use the inside value at the jumps.
  const auto *step = std::get_if<StepKind>(&a.kind());
  for (std::size_t k = 0; k < n; ++k)
  {
    A[k] = step ? std::abs(step->a) : std::abs(a(nodes.x[k]));
    t[k] = std::exp(-beta * h * static_cast<double>(k));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
  {
    if (A[i] == 0.0)
      continue;
    double inner = 0.0;
    for (std::size_t j = 0; j < n; ++j)
    {
      const std::size_t k = i > j ? i - j : j - i;
      inner += nodes.w[j] * t[k] * (A[j] - A[i]);
    }
    const double xi = nodes.x[i];
    const double E = (-std::expm1(-beta * (xi - lo)) - std::expm1(-beta * (hi - xi))) / beta;
    total += nodes.w[i] * A[i] * (inner + A[i] * E);
  }
  return 0.25 * std::max(total, 0.0);
}

// Mass of |a| outside the support window.
double tail_mass(const DampingProfile &a, double radius)
{
  if (const auto *gk = std::get_if<GaussianKind>(&a.kind()))
    return std::abs(gk->amplitude) * gk->width * std::sqrt(std::numbers::pi) *
           std::erfc(radius / gk->width);
  return 0.0;
}

}  // namespace

cplx green_kernel(cplx z, double x, double y)
{
  if (z.imag() == 0.0 && z.real() >= 0.0)
    throw DomainError("branch error: z must lie off [0, inf)");
  const cplx k = std::sqrt(-z);
  return std::exp(-k * std::abs(x - y)) / (2.0 * k);
}

XiGrid XiGrid::log_spaced(int count, double r_min, double r_max, int phase_count)
{
  if (count < 1 || phase_count < 2 || phase_count % 2 != 0)
    throw DomainError("xi grid needs count >= 1 and an even phase count");
  if (!(r_min > 0.0) || !(r_max >= r_min))
    throw DomainError("xi grid needs 0 < r_min <= r_max");
  XiGrid g;
  for (int k = 0; k < count; ++k)
  {
    const double t = count == 1 ? 0.0 : static_cast<double>(k) / (count - 1);
    g.moduli.push_back(r_min * std::pow(r_max / r_min, t));
  }
  for (int k = 0; k < phase_count; ++k)
    g.phases.push_back((2.0 * k + 1.0) * std::numbers::pi / phase_count);
  return g;
}

std::vector<cplx> XiGrid::points() const
{
  validate();
  std::vector<cplx> out;
  out.reserve(moduli.size() * phases.size());
  for (double r : moduli)
    for (double p : phases)
      out.push_back(std::polar(r, p));
  return out;
}

void XiGrid::validate() const
{
  if (moduli.empty() || phases.empty())
    throw DomainError("xi grid is empty");
  for (double r : moduli)
    if (!(r > 0.0) || !std::isfinite(r))
      throw DomainError("xi grid moduli must be positive");
  for (double p : phases)
  {
    const double s = std::sin(p);
    if (!std::isfinite(p) || std::abs(s) < 1e-12)
      throw DomainError("xi grid phase lies on the real axis");
  }
}

IntegralEstimate bs_hs_estimate(const DampingProfile &a, cplx xi, const QuadratureSpec &q)
{
  require_off_axis(xi);
  if (!a.vanishes_at_infinity())
    throw DomainError("norm undefined: damping is not integrable");
  q.validate();
  if (a.is_zero())
    return {};

  const double beta = 2.0 * std::sqrt(-xi * xi).real();
  const auto [lo, hi] = support_window(a, q);

  QuadratureRule rule = q.rule;
  int panels = q.panels;
  if (const auto *s = std::get_if<SampledKind>(&a.kind()))
  {
    // Nodes on the sample grid, where |a| is piecewise linear.
    rule = QuadratureRule::trapezoid;
    panels = s->grid.interior_count() + 1;
  }
  const double fine = std::sqrt(hs_squared(a, beta, rule, panels, lo, hi));
  const double coarse = std::sqrt(hs_squared(a, beta, rule, std::max(2, panels / 2), lo, hi));

  // Dropped tail: HS^2 grows by at most 1/2 ||a||_1 * tail mass.
  const double tail = tail_mass(a, hi);
  double l1_bound = 0.0;
  if (tail > 0.0)
    l1_bound = l1_norm(a, q).value + tail;
  const double tail_hs = std::sqrt(0.5 * l1_bound * tail);

  return {fine, std::abs(fine - coarse) + tail_hs + 64.0 * std::numeric_limits<double>::epsilon() * fine};
}

double bs_hs_norm(const DampingProfile &a, cplx xi, const QuadratureSpec &q)
{
  return bs_hs_estimate(a, xi, q).value;
}

HsSup sup_hs_norm(const DampingProfile &a, const XiGrid &grid, const QuadratureSpec &q)
{
  const std::vector<cplx> pts = grid.points();
  HsSup out;
  out.samples.reserve(pts.size());
  bool first = true;
  for (const cplx xi : pts)
  {
    const IntegralEstimate e = bs_hs_estimate(a, xi, q);
    out.samples.push_back({xi, e.value, e.error});
    if (first || e.value > out.value)
    {
      out.value = e.value;
      out.error = e.error;
      out.attaining_xi = xi;
      first = false;
    }
  }
  return out;
}

std::string to_string(SimilarityVerdict v)
{
  return v == SimilarityVerdict::similar_to_undamped ? "similar_to_undamped" : "inconclusive";
}

SimilarityResult kato_similarity_verdict(const DampingProfile &a, const XiGrid &grid,
                                         const QuadratureSpec &q)
{
  SimilarityResult r;
  r.l1 = l1_norm(a, q);
  r.analytic_bound = 0.5 * r.l1.value;
  r.sup = sup_hs_norm(a, grid, q);
  r.corroborated = r.sup.value < 1.0;
  r.verdict = r.l1.value + r.l1.error < 2.0 ? SimilarityVerdict::similar_to_undamped
                                            : SimilarityVerdict::inconclusive;
  return r;
}

namespace
{

Eigen::VectorXcd laplacian(const Eigen::VectorXcd &f, double inv_h2)
{
  const Eigen::Index n = f.size();
  Eigen::VectorXcd out(n);
  for (Eigen::Index k = 0; k < n; ++k)
  {
    cplx v = -2.0 * f[k];
    if (k > 0)
      v += f[k - 1];
    if (k + 1 < n)
      v += f[k + 1];
    out[k] = v * inv_h2;
  }
  return out;
}

void require_pair_on(const VectorPair &f, const Grid &g)
{
  const Eigen::Index n = g.interior_count();
  if (f.first.size() != n || f.second.size() != n)
    throw DomainError("vector pair does not match the grid");
}

}  // namespace

VectorPair resolvent_block_action(cplx xi, const VectorPair &f, const Grid &g)
{
  require_off_axis(xi);
  require_pair_on(f, g);
  const int n = g.interior_count();
  const double h = g.spacing();
  const double inv_h2 = 1.0 / (h * h);
  const cplx shift = xi * xi;

  // Closed-form spectrum of -Lap_h: (4/h^2) sin^2(k pi / (2(N+1))).
  const double scale = std::max(1.0, std::abs(shift));
  for (int k = 1; k <= n; ++k)
  {
    const double s = std::sin(k * std::numbers::pi / (2.0 * (n + 1)));
    if (std::abs(4.0 * inv_h2 * s * s - shift) <= 1e-12 * scale)
      throw DomainError("singular shift: xi^2 is an eigenvalue of -Lap_h");
  }

  const std::vector<cplx> off(n - 1, cplx(-inv_h2));
  const std::vector<cplx> diag(n, cplx(2.0 * inv_h2) - shift);
  const Eigen::VectorXcd rhs_u = xi * f.first + kI * f.second;
  const Eigen::VectorXcd rhs_v = kI * laplacian(f.first, inv_h2) + xi * f.second;
  return {tridiag::solve(off, diag, off, rhs_u), tridiag::solve(off, diag, off, rhs_v)};
}

VectorPair shifted_generator_action(cplx xi, const VectorPair &u, const Grid &g)
{
  require_pair_on(u, g);
  const double inv_h2 = 1.0 / (g.spacing() * g.spacing());
  return {kI * u.second - xi * u.first, kI * laplacian(u.first, inv_h2) - xi * u.second};
}

}  // namespace specwave
