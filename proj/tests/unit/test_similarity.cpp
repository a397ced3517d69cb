// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "specwave/errors.hpp"
#include "specwave/similarity.hpp"

using namespace specwave;

TEST_CASE("resolvent kernel values")
{
  CHECK(green_kernel(-1.0, 0.3, 0.3) == cplx(0.5));
  CHECK(std::abs(green_kernel(-1.0, 0.0, 1.0) - std::exp(-1.0) / 2.0) < 1e-16);
  CHECK(green_kernel(-4.0, 2.0, 2.0) == cplx(0.25));
  CHECK_THROWS_AS(green_kernel(2.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(green_kernel(0.0, 0.0, 1.0), DomainError);
  CHECK_NOTHROW(green_kernel(cplx(2.0, 1e-3), 0.0, 1.0));
  // Principal branch: the kernel decays.
  CHECK(std::abs(green_kernel(cplx(3.0, 0.5), 0.0, 20.0)) < std::abs(green_kernel(cplx(3.0, 0.5), 0.0, 1.0)));
}

TEST_CASE("kernel bound and symmetry on random points")
{
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> ux(-10.0, 10.0), ur(-3.0, 3.0), uphi(1e-6, 2 * std::numbers::pi - 1e-6);
  for (int k = 0; k < 100; ++k)
  {
    const cplx z = std::polar(std::pow(10.0, ur(rng)), uphi(rng));
    const double x = ux(rng), y = ux(rng);
    const cplx gxy = green_kernel(z, x, y);
    CHECK(std::abs(gxy) <= 1.0 / (2.0 * std::sqrt(std::abs(z))) + 1e-15);
    CHECK(gxy == green_kernel(z, y, x));
  }
}

TEST_CASE("xi grid")
{
  const XiGrid g = XiGrid::log_spaced();
  CHECK(g.moduli.size() == 25);
  CHECK(g.phases.size() == 8);
  CHECK(g.moduli.front() == doctest::Approx(1e-3));
  CHECK(g.moduli.back() == doctest::Approx(1e3));
  CHECK(g.phases[0] == doctest::Approx(std::numbers::pi / 8));
  const auto pts = g.points();
  CHECK(pts.size() == 200);
  for (cplx p : pts)
  {
    CHECK(p.imag() != 0.0);
    CHECK(std::abs(p) > 0.0);
  }
  CHECK_THROWS_AS(XiGrid::log_spaced(25, 1e-3, 1e3, 7), DomainError);
  XiGrid bad{{1.0}, {std::numbers::pi}};
  CHECK_THROWS_AS(bad.validate(), DomainError);
  CHECK_THROWS_AS((XiGrid{{}, {1.0}}).points(), DomainError);
}

TEST_CASE("HS norm of a step against its closed form")
{
  const auto a = DampingProfile::step(-1.0, 0.5);
  const QuadratureSpec q;
  for (cplx xi : {cplx(0.0, 1.0), cplx(1.0, 1.0), cplx(-3.0, 0.2), cplx(0.01, -0.02), cplx(200.0, 300.0)})
  {
    const IntegralEstimate e = bs_hs_estimate(a, xi, q);
    const double exact = oracle::step_hs_norm(1.0, 0.5, xi);
    CHECK(e.value == doctest::Approx(exact).epsilon(1e-6));
    CHECK(std::abs(e.value - exact) <= e.error + 1e-12);
  }
  const double v = bs_hs_norm(a, cplx(0.0, 1.0), q);
  CHECK(v > 0.0);
  CHECK(v <= 0.5);
  QuadratureSpec fine = q;
  fine.panels *= 2;
  CHECK(std::abs(bs_hs_norm(a, cplx(0.0, 1.0), fine) - v) < 1e-6);
}

TEST_CASE("HS norm of a gaussian against its closed form")
{
  const QuadratureSpec q;
  for (cplx xi : {cplx(0.0, 1.0), cplx(0.3, 0.1), cplx(2.0, -1.0), cplx(1e-3, 1e-3)})
  {
    const double exact = oracle::gaussian_hs_norm(1.0, 1.0, xi);
    const IntegralEstimate e = bs_hs_estimate(DampingProfile::gaussian(1.0, 1.0), xi, q);
    CHECK(e.value == doctest::Approx(exact).epsilon(1e-6));
    CHECK(std::abs(e.value - exact) <= e.error);
  }
}

TEST_CASE("HS norm edge cases")
{
  const QuadratureSpec q;
  CHECK(bs_hs_norm(DampingProfile::zero(), cplx(0.0, 1.0), q) == 0.0);
  CHECK_THROWS_AS(bs_hs_norm(DampingProfile::gaussian(1.0, 1.0), cplx(1.0, 0.0), q), DomainError);
  const Grid g(2.0, 3);
  CHECK_THROWS_AS(bs_hs_norm(DampingProfile::sampled(g, {1.0, 1.0, 1.0}, false), cplx(0.0, 1.0), q),
                  DomainError);
  // Sampled data is integrated on its own grid.
  const Grid fine(4.0, 799);
  std::vector<cplx> v(799);
  for (int k = 0; k < 799; ++k)
    v[k] = std::abs(fine.node(k)) < 0.5 ? 1.0 : (std::abs(fine.node(k)) == 0.5 ? 0.5 : 0.0);
  CHECK(bs_hs_norm(DampingProfile::sampled(fine, v), cplx(0.0, 1.0), q) ==
        doctest::Approx(oracle::step_hs_norm(1.0, 0.5, cplx(0.0, 1.0))).epsilon(1e-2));
}

TEST_CASE("supremum over the default grid")
{
  const QuadratureSpec q;
  const XiGrid g = XiGrid::log_spaced();
  const HsSup s = sup_hs_norm(DampingProfile::gaussian(1.0, 1.0), g, q);
  CHECK(s.samples.size() == 200);
  CHECK(s.value <= std::sqrt(std::numbers::pi) / 2.0 + 1e-6);
  CHECK(std::abs(s.attaining_xi) == doctest::Approx(1e-3));
  CHECK(sup_hs_norm(DampingProfile::zero(), g, q).value == 0.0);
  const HsSup st = sup_hs_norm(DampingProfile::step(-3.0, 1.0), g, q);
  CHECK(st.value <= 3.0 + 1e-6);
  CHECK(st.value > 2.9);
}

TEST_CASE("similarity verdicts")
{
  const QuadratureSpec q;
  const XiGrid g = XiGrid::log_spaced(7, 1e-2, 1e2, 4);
  const SimilarityResult gauss = kato_similarity_verdict(DampingProfile::gaussian(1.0, 1.0), g, q);
  CHECK(gauss.verdict == SimilarityVerdict::similar_to_undamped);
  CHECK(gauss.corroborated);
  CHECK(gauss.analytic_bound == doctest::Approx(std::sqrt(std::numbers::pi) / 2.0));
  CHECK(kato_similarity_verdict(DampingProfile::step(-1.1, 1.0), g, q).verdict == SimilarityVerdict::inconclusive);
  CHECK(kato_similarity_verdict(DampingProfile::zero(), g, q).verdict == SimilarityVerdict::similar_to_undamped);
  const SimilarityResult big = kato_similarity_verdict(DampingProfile::step(-3.0, 1.0), g, q);
  CHECK(big.verdict == SimilarityVerdict::inconclusive);
  CHECK_FALSE(big.corroborated);
  CHECK(to_string(SimilarityVerdict::inconclusive) == "inconclusive");
}

TEST_CASE("discrete resolvent block identity")
{
  const Grid g(5.0, 99);
  std::mt19937_64 rng(42);
  std::normal_distribution<double> nd;
  for (cplx xi : {cplx(1.0, 1.0), cplx(-0.3, 2.0), cplx(4.0, -0.01)})
  {
    VectorPair f{Eigen::VectorXcd(99), Eigen::VectorXcd(99)};
    for (int k = 0; k < 99; ++k)
    {
      f.first[k] = cplx(nd(rng), nd(rng));
      f.second[k] = cplx(nd(rng), nd(rng));
    }
    const VectorPair u = resolvent_block_action(xi, f, g);
    const VectorPair back = shifted_generator_action(xi, u, g);
    const double fnorm = std::sqrt(f.first.squaredNorm() + f.second.squaredNorm());
    const double res = std::sqrt((back.first - f.first).squaredNorm() + (back.second - f.second).squaredNorm());
    CHECK(res / fnorm < 1e-10);
  }
}

TEST_CASE("block action decays like 1/|xi| and vanishes on zero data")
{
  const Grid g(5.0, 49);
  VectorPair f{Eigen::VectorXcd::Ones(49), Eigen::VectorXcd::LinSpaced(49, -1.0, 1.0)};
  auto norm = [](const VectorPair &p) { return std::sqrt(p.first.squaredNorm() + p.second.squaredNorm()); };
  const double r1 = norm(resolvent_block_action(cplx(0.0, 1e3), f, g));
  const double r2 = norm(resolvent_block_action(cplx(0.0, 2e3), f, g));
  CHECK(r1 / r2 == doctest::Approx(2.0).epsilon(1e-3));
  const VectorPair zero{Eigen::VectorXcd::Zero(49), Eigen::VectorXcd::Zero(49)};
  CHECK(norm(resolvent_block_action(cplx(1.0, 1.0), zero, g)) == 0.0);
  CHECK_THROWS_AS(resolvent_block_action(cplx(1.0, 0.0), f, g), DomainError);
  CHECK_THROWS_AS(resolvent_block_action(cplx(1.0, 1.0), f, Grid(5.0, 50)), DomainError);
}
