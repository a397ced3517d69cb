// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace oracle
{

std::pair<cplx, cplx> pencil_determinant(const std::vector<cplx> &a, double h, cplx mu)
{
  const double off2 = 1.0 / (h * h * h * h);
  cplx p_prev = 1.0, dp_prev = 0.0;  // p_{-1}
  cplx p = 2.0 / (h * h) + mu * a[0] + mu * mu;
  cplx dp = a[0] + 2.0 * mu;
  for (std::size_t k = 1; k < a.size(); ++k)
  {
    const cplx d = 2.0 / (h * h) + mu * a[k] + mu * mu;
    const cplx dd = a[k] + 2.0 * mu;
    const cplx p_next = d * p - off2 * p_prev;
    const cplx dp_next = dd * p + d * dp - off2 * dp_prev;
    p_prev = p;
    dp_prev = dp;
    p = p_next;
    dp = dp_next;
  }
  return {p, dp};
}

std::vector<cplx> pencil_determinant_roots(const std::vector<cplx> &a, double h)
{
  const std::size_t n = 2 * a.size();
  // Roots lie within |mu| <= max|a| + 2/h (Gershgorin on the companion form).
  double amax = 0.0;
  for (cplx v : a)
    amax = std::max(amax, std::abs(v));
  const double radius = amax + 2.0 / h;
  std::vector<cplx> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(0.7 * radius, 2.0 * std::numbers::pi * (k + 0.25) / n + 0.1);

  for (int it = 0; it < 500; ++it)
  {
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k)
    {
      const auto [p, dp] = pencil_determinant(a, h, z[k]);
      if (p == cplx(0.0))
        continue;
      const cplx ratio = p / dp;
      cplx sum = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k)
          sum += 1.0 / (z[k] - z[j]);
      const cplx step = ratio / (1.0 - ratio * sum);
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[k])));
    }
    if (worst < 1e-15)
      break;
  }
  // Polish each root with plain Newton.
  for (cplx &r : z)
    for (int it = 0; it < 5; ++it)
    {
      const auto [p, dp] = pencil_determinant(a, h, r);
      if (dp == cplx(0.0))
        break;
      r -= p / dp;
    }
  return z;
}

double multiset_distance(std::vector<cplx> x, std::vector<cplx> y)
{
  if (x.size() != y.size())
    return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  std::vector<bool> used(y.size(), false);
  for (cplx v : x)
  {
    double best = std::numeric_limits<double>::infinity();
    std::size_t at = 0;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!used[j] && std::abs(v - y[j]) < best)
      {
        best = std::abs(v - y[j]);
        at = j;
      }
    used[at] = true;
    worst = std::max(worst, best);
  }
  return worst;
}

namespace
{

template <class F> double bisect(F f, double lo, double hi)
{
  double flo = f(lo);
  for (int i = 0; i < 200; ++i)
  {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0))
    {
      lo = mid;
      flo = fm;
    }
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double square_well_ground_state(double depth, double half_width)
{
  const double kmax = std::min(std::sqrt(depth), std::numbers::pi / (2.0 * half_width));
  auto f = [&](double k) { return k * std::tan(k * half_width) - std::sqrt(depth - k * k); };
  const double k = bisect(f, 1e-14, kmax * (1.0 - 1e-14));
  return -(depth - k * k);
}

std::vector<double> square_well_bound_states(double depth, double half_width)
{
  std::vector<double> out;
  const double kmax = std::sqrt(depth);
  const double quarter = std::numbers::pi / (2.0 * half_width);
  // Even states: k tan(kb) = kappa on branches (j pi/b, j pi/b + pi/2b).
  // Odd states: -k cot(kb) = kappa on branches (pi/2b + j pi/b, (j+1) pi/b).
  for (int branch = 0;; ++branch)
  {
    const double lo = branch * quarter;
    if (lo >= kmax)
      break;
    const double hi = std::min((branch + 1) * quarter, kmax);
    auto f = [&](double k) {
      const double kappa = std::sqrt(std::max(depth - k * k, 0.0));
      return branch % 2 == 0 ? k * std::sin(k * half_width) - kappa * std::cos(k * half_width)
                             : -k * std::cos(k * half_width) - kappa * std::sin(k * half_width);
    };
    const double a = lo + 1e-13, b = hi - 1e-13;
    if (b <= a || (f(a) < 0) == (f(b) < 0))
      continue;
    const double k = bisect(f, a, b);
    out.push_back(-(depth - k * k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

cplx step_secular_G(cplx mu, double a, double b)
{
  const cplx s2 = -(mu * a + mu * mu);
  const cplx s = std::sqrt(s2);
  // s * (2 s cos 2bs + (a + 2mu) sin 2bs), written through even functions of s.
  const cplx phase = 2.0 * b * s;
  const cplx sinc = std::abs(phase) < 1e-8 ? cplx(1.0) : std::sin(phase) / phase;
  return 2.0 * s2 * std::cos(phase) + (a + 2.0 * mu) * s2 * 2.0 * b * sinc;
}

cplx refine_step_root(cplx start, double a, double b, int iterations)
{
  cplx z = start;
  for (int i = 0; i < iterations; ++i)
  {
    const double d = 1e-7 * std::max(1.0, std::abs(z));
    const cplx g = step_secular_G(z, a, b);
    const cplx dg = (step_secular_G(z + d, a, b) - step_secular_G(z - d, a, b)) / (2.0 * d);
    const cplx step = g / dg;
    z -= step;
    if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(z)))
      break;
  }
  return z;
}

double gaussian_lp_power(double A, double w, double p)
{
  return std::pow(A, p) * w * std::sqrt(std::numbers::pi / p);
}

double gaussian_weighted_l1(double A, double w)
{
  return A * w * w;
}

double gaussian_radial(double A, double w, double p, int d)
{
  return std::pow(A, p) * std::pow(std::numbers::pi, 0.5 * d) * std::pow(w / std::sqrt(p), d);
}

namespace
{

double kappa_of(cplx xi)
{
  return std::sqrt(-xi * xi).real();
}

}  // namespace

double step_hs_norm(double m, double b, cplx xi)
{
  const double beta = 2.0 * kappa_of(xi);
  const double l = 2.0 * b;
  // int int_{[0,l]^2} e^{-beta|x-y|} = 2 (l/beta - (1 - e^{-beta l}) / beta^2)
  const double dbl = 2.0 * (l / beta + std::expm1(-beta * l) / (beta * beta));
  return 0.5 * m * std::sqrt(dbl);
}

double gaussian_hs_norm(double A, double w, cplx xi)
{
  const double beta = 2.0 * kappa_of(xi);
  // Center/difference variables: int e^{-2v^2/w^2} dv = w sqrt(pi/2) and
  // int e^{-u^2/(2w^2) - beta|u|} du = 2 w sqrt(pi/2) e^{z^2} erfc(z), z = beta w / sqrt 2.
  const double z = beta * w / std::sqrt(2.0);
  const double scaled = std::exp(z * z) * std::erfc(z);
  const double dbl = w * std::sqrt(std::numbers::pi / 2.0) * 2.0 * w * std::sqrt(std::numbers::pi / 2.0) * scaled;
  return 0.5 * A * std::sqrt(dbl);
}

}  // namespace oracle
