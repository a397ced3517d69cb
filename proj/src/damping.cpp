// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#include "specwave/damping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "specwave/errors.hpp"

namespace specwave
{

namespace
{

template <class... Ts>
struct overloaded : Ts...
{
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr double kRealTol = 1e-12;
constexpr double kDefaultWidths = 10.0;

void require_finite(cplx v, const char *what)
{
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw DomainError(std::string(what) + " must be finite (bounded damping)");
}

double gaussian_radius(const GaussianKind &g, const QuadratureSpec &q)
{
  return q.truncation_radius.value_or(kDefaultWidths * g.width);
}

void require_integrable(const DampingProfile &a)
{
  if (!a.vanishes_at_infinity())
    throw DomainError("norm undefined: profile does not vanish at infinity");
}

// Trapezoid over the full sampled grid (the Dirichlet endpoints contribute 0)
// with the 2h rule as error estimate when the node count allows it.
IntegralEstimate grid_trapezoid(const SampledKind &s, const std::function<double(int)> &f)
{
  const int n = s.grid.interior_count();
  const double h = s.grid.spacing();
  double fine = 0.0;
  for (int k = 0; k < n; ++k)
    fine += f(k);
  fine *= h;

  double err = 64.0 * std::numeric_limits<double>::epsilon() * std::abs(fine);
  if ((n + 1) % 2 == 0)
  {
    // Coarse nodes are the odd one-based indices k+1 = 2, 4, ..., N-1.
    double coarse = 0.0;
    for (int k = 1; k < n; k += 2)
      coarse += f(k);
    coarse *= 2.0 * h;
    err += std::abs(fine - coarse);
  }
  return {fine, err};
}

}  // namespace

DampingProfile::DampingProfile(Kind kind, bool vanishes)
  : kind_(std::move(kind)), vanishes_at_infinity_(vanishes)
{
  sup_norm_ = std::visit(
    overloaded{
      [](const ZeroKind &) { return 0.0; },
      [](const StepKind &s) { return std::abs(s.a); },
      [](const GaussianKind &g) { return std::abs(g.amplitude); },
      [](const SampledKind &s) {
        double m = 0.0;
        for (const auto &v : s.values)
          m = std::max(m, std::abs(v));
        return m;
      },
    },
    kind_);
}

DampingProfile DampingProfile::zero() { return DampingProfile(ZeroKind{}, true); }

DampingProfile DampingProfile::step(cplx a, double b)
{
  require_finite(a, "step height");
  if (!(b > 0.0) || !std::isfinite(b))
    throw DomainError("step half-width b must be positive");
  return DampingProfile(StepKind{a, b}, true);
}

DampingProfile DampingProfile::gaussian(cplx amplitude, double width)
{
  require_finite(amplitude, "gaussian amplitude");
  if (!(width > 0.0) || !std::isfinite(width))
    throw DomainError("gaussian width must be positive");
  return DampingProfile(GaussianKind{amplitude, width}, true);
}

DampingProfile DampingProfile::sampled(const Grid &grid, std::vector<cplx> values,
                                       bool vanishes_at_infinity)
{
  if (static_cast<int>(values.size()) != grid.interior_count())
    throw DomainError("sampled damping has " + std::to_string(values.size()) +
                      " values for a grid of " + std::to_string(grid.interior_count()) +
                      " interior nodes");
  for (const auto &v : values)
    require_finite(v, "sampled damping value");
  return DampingProfile(SampledKind{grid, std::move(values)}, vanishes_at_infinity);
}

cplx DampingProfile::operator()(double x) const
{
  return std::visit(
    overloaded{
      [](const ZeroKind &) { return cplx{}; },
      [x](const StepKind &s) {
        const double ax = std::abs(x);
        if (ax < s.b)
          return s.a;
        if (ax == s.b)
          return 0.5 * s.a;
        return cplx{};
      },
      [x](const GaussianKind &g) {
        const double t = x / g.width;
        return g.amplitude * std::exp(-t * t);
      },
      [x](const SampledKind &s) {
        const double L = s.grid.half_length();
        if (!(std::abs(x) < L))
          return cplx{};
        const double h = s.grid.spacing();
        const double pos = (x + L) / h;  // 0 at -L, N+1 at L
        const int left = static_cast<int>(std::floor(pos));
        const double t = pos - left;
        auto at = [&](int j) {
          return (j >= 1 && j <= s.grid.interior_count()) ? s.values[j - 1] : cplx{};
        };
        if (t == 0.0)
          return at(left);
        return (1.0 - t) * at(left) + t * at(left + 1);
      },
    },
    kind_);
}

bool DampingProfile::is_real(double tol) const
{
  return std::visit(
    overloaded{
      [](const ZeroKind &) { return true; },
      [tol](const StepKind &s) { return std::abs(s.a.imag()) <= tol; },
      [tol](const GaussianKind &g) { return std::abs(g.amplitude.imag()) <= tol; },
      [tol](const SampledKind &s) {
        return std::all_of(s.values.begin(), s.values.end(),
                           [tol](cplx v) { return std::abs(v.imag()) <= tol; });
      },
    },
    kind_);
}

bool DampingProfile::is_purely_imaginary(double tol) const
{
  return std::visit(
    overloaded{
      [](const ZeroKind &) { return true; },
      [tol](const StepKind &s) { return std::abs(s.a.real()) <= tol; },
      [tol](const GaussianKind &g) { return std::abs(g.amplitude.real()) <= tol; },
      [tol](const SampledKind &s) {
        return std::all_of(s.values.begin(), s.values.end(),
                           [tol](cplx v) { return std::abs(v.real()) <= tol; });
      },
    },
    kind_);
}

DampingProfile DampingProfile::scaled(cplx t) const
{
  return std::visit(
    overloaded{
      [](const ZeroKind &) { return zero(); },
      [t](const StepKind &s) { return step(t * s.a, s.b); },
      [t](const GaussianKind &g) { return gaussian(t * g.amplitude, g.width); },
      [t, this](const SampledKind &s) {
        std::vector<cplx> v(s.values);
        for (auto &x : v)
          x *= t;
        return sampled(s.grid, std::move(v), vanishes_at_infinity_);
      },
    },
    kind_);
}

std::string DampingProfile::describe() const
{
  std::ostringstream os;
  os.precision(12);
  std::visit(overloaded{
               [&](const ZeroKind &) { os << "zero"; },
               [&](const StepKind &s) { os << "step(a=" << s.a << ", b=" << s.b << ")"; },
               [&](const GaussianKind &g) {
                 os << "gaussian(amplitude=" << g.amplitude << ", width=" << g.width << ")";
               },
               [&](const SampledKind &s) {
                 os << "sampled(L=" << s.grid.half_length() << ", N=" << s.grid.interior_count()
                    << ")";
               },
             },
             kind_);
  return os.str();
}

std::pair<double, double> support_window(const DampingProfile &a, const QuadratureSpec &q)
{
  return std::visit(overloaded{
                      [](const ZeroKind &) { return std::pair{0.0, 0.0}; },
                      [](const StepKind &s) { return std::pair{-s.b, s.b}; },
                      [&q](const GaussianKind &g) {
                        const double r = gaussian_radius(g, q);
                        return std::pair{-r, r};
                      },
                      [](const SampledKind &s) {
                        const double L = s.grid.half_length();
                        return std::pair{-L, L};
                      },
                    },
                    a.kind());
}

IntegralEstimate lp_power_integral(const DampingProfile &a, double p, const QuadratureSpec &q)
{
  if (!(p >= 1.0))
    throw DomainError("power p must be >= 1");
  require_integrable(a);
  q.validate();
  return std::visit(
    overloaded{
      [](const ZeroKind &) { return IntegralEstimate{}; },
      [p](const StepKind &s) { return IntegralEstimate{2.0 * s.b * std::pow(std::abs(s.a), p), 0.0}; },
      [p, &q](const GaussianKind &g) {
        const double amp = std::pow(std::abs(g.amplitude), p);
        if (amp == 0.0)
          return IntegralEstimate{};
        const double r = gaussian_radius(g, q);
        const double w = g.width;
        auto f = [&](double x) {
          const double t = x / w;
          return amp * std::exp(-p * t * t);
        };
        IntegralEstimate est = integrate(f, -r, r, q.rule, q.panels);
        // Both tails: |A|^p w sqrt(pi/p) erfc(sqrt(p) R / w).
        est.error += amp * w * std::sqrt(std::numbers::pi / p) * std::erfc(std::sqrt(p) * r / w);
        return est;
      },
      [p](const SampledKind &s) {
        return grid_trapezoid(s, [&](int k) { return std::pow(std::abs(s.values[k]), p); });
      },
    },
    a.kind());
}

IntegralEstimate l1_norm(const DampingProfile &a, const QuadratureSpec &q)
{
  return lp_power_integral(a, 1.0, q);
}

IntegralEstimate weighted_l1_norm(const DampingProfile &a, const QuadratureSpec &q)
{
  require_integrable(a);
  q.validate();
  return std::visit(
    overloaded{
      [](const ZeroKind &) { return IntegralEstimate{}; },
      [](const StepKind &s) { return IntegralEstimate{std::abs(s.a) * s.b * s.b, 0.0}; },
      [&q](const GaussianKind &g) {
        const double amp = std::abs(g.amplitude);
        if (amp == 0.0)
          return IntegralEstimate{};
        const double r = gaussian_radius(g, q);
        const double w = g.width;
        auto f = [&](double x) {
          const double t = x / w;
          return amp * std::exp(-t * t) * std::abs(x);
        };
        // The |x| kink sits on a node; integrate each half separately.
        IntegralEstimate left = integrate(f, -r, 0.0, q.rule, q.panels / 2 + 1);
        IntegralEstimate right = integrate(f, 0.0, r, q.rule, q.panels / 2 + 1);
        const double tail = amp * w * w * std::exp(-(r / w) * (r / w));
        return IntegralEstimate{left.value + right.value, left.error + right.error + tail};
      },
      [](const SampledKind &s) {
        return grid_trapezoid(
          s, [&](int k) { return std::abs(s.values[k]) * std::abs(s.grid.node(k)); });
      },
    },
    a.kind());
}

IntegralEstimate signed_integral(const DampingProfile &a, const QuadratureSpec &q)
{
  if (!a.is_real(kRealTol))
    throw DomainError("signed integral undefined for complex damping");
  require_integrable(a);
  q.validate();
  return std::visit(
    overloaded{
      [](const ZeroKind &) { return IntegralEstimate{}; },
      [](const StepKind &s) { return IntegralEstimate{2.0 * s.b * s.a.real(), 0.0}; },
      [&q](const GaussianKind &g) {
        const double amp = g.amplitude.real();
        if (amp == 0.0)
          return IntegralEstimate{};
        const double r = gaussian_radius(g, q);
        const double w = g.width;
        auto f = [&](double x) {
          const double t = x / w;
          return amp * std::exp(-t * t);
        };
        IntegralEstimate est = integrate(f, -r, r, q.rule, q.panels);
        est.error += std::abs(amp) * w * std::sqrt(std::numbers::pi) * std::erfc(r / w);
        return est;
      },
      [](const SampledKind &s) { return grid_trapezoid(s, [&](int k) { return s.values[k].real(); }); },
    },
    a.kind());
}

std::pair<DampingProfile, DampingProfile> signed_parts(const DampingProfile &a)
{
  if (!a.is_real(kRealTol))
    throw DomainError("signed parts undefined for complex damping");
  using P = std::pair<DampingProfile, DampingProfile>;
  return std::visit(
    overloaded{
      [](const ZeroKind &) { return P{DampingProfile::zero(), DampingProfile::zero()}; },
      [](const StepKind &s) {
        const double v = s.a.real();
        if (v > 0.0)
          return P{DampingProfile::step(v, s.b), DampingProfile::zero()};
        if (v < 0.0)
          return P{DampingProfile::zero(), DampingProfile::step(-v, s.b)};
        return P{DampingProfile::zero(), DampingProfile::zero()};
      },
      [](const GaussianKind &g) {
        const double v = g.amplitude.real();
        if (v > 0.0)
          return P{DampingProfile::gaussian(v, g.width), DampingProfile::zero()};
        if (v < 0.0)
          return P{DampingProfile::zero(), DampingProfile::gaussian(-v, g.width)};
        return P{DampingProfile::zero(), DampingProfile::zero()};
      },
      [&a](const SampledKind &s) {
        std::vector<cplx> plus(s.values.size()), minus(s.values.size());
        for (std::size_t k = 0; k < s.values.size(); ++k)
        {
          const double v = s.values[k].real();
          plus[k] = std::max(v, 0.0);
          minus[k] = std::max(-v, 0.0);
        }
        return P{DampingProfile::sampled(s.grid, std::move(plus), a.vanishes_at_infinity()),
                 DampingProfile::sampled(s.grid, std::move(minus), a.vanishes_at_infinity())};
      },
    },
    a.kind());
}

Eigen::VectorXcd sample(const DampingProfile &a, const Grid &g)
{
  const int n = g.interior_count();
  Eigen::VectorXcd v(n);
  if (const auto *s = std::get_if<SampledKind>(&a.kind()); s && s->grid == g)
  {
    for (int k = 0; k < n; ++k)
      v[k] = s->values[k];
    return v;
  }
  if (const auto *s = std::get_if<StepKind>(&a.kind()))
  {
    const double h = g.spacing();
    for (int k = 0; k < n; ++k)
    {
      const double x = g.node(k);
      const double overlap = std::min(x + 0.5 * h, s->b) - std::max(x - 0.5 * h, -s->b);
      v[k] = s->a * std::clamp(overlap / h, 0.0, 1.0);
    }
    return v;
  }
  for (int k = 0; k < n; ++k)
    v[k] = a(g.node(k));
  return v;
}

}  // namespace specwave
