// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include <doctest.h>

#include "oracles.hpp"
#include "specwave/errors.hpp"
#include "specwave/stepwell.hpp"

using namespace specwave;

TEST_CASE("step parameters")
{
  const StepDamping w(-3.0, 1.0);
  CHECK(w.c() == 3.0);
  CHECK(w.l1_norm() == 6.0);
  CHECK_THROWS_AS(StepDamping(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(StepDamping(-1.0, 0.0), DomainError);
  CHECK(StepDamping::from_profile(DampingProfile::step(-2.0, 0.5)).c() == 1.0);
  CHECK_THROWS_AS(StepDamping::from_profile(DampingProfile::gaussian(1.0, 1.0)), DomainError);
  CHECK_THROWS_AS(StepDamping::from_profile(DampingProfile::step(cplx(-1, 1), 1.0)), DomainError);
}

TEST_CASE("secular functions and their domains")
{
  const StepDamping w(-3.0, 1.0);
  CHECK(secular_G(0.0, w) == 0.0);
  CHECK(secular_G(3.0, w) == 0.0);
  CHECK_THROWS_AS(secular_F(0.0, w), DomainError);
  CHECK_THROWS_AS(secular_F(3.0, w), DomainError);
  CHECK_THROWS_AS(secular_G(-0.1, w), DomainError);
  CHECK_THROWS_AS(secular_G(3.1, w), DomainError);
  for (double mu : {0.1, 0.7, 1.5, 2.9})
  {
    const double s = std::sqrt(-(mu * -3.0 + mu * mu));
    CHECK(secular_G(mu, w) == doctest::Approx(s * secular_F(mu, w)));
    CHECK(secular_G(mu, w) == doctest::Approx(oracle::step_secular_G(mu, -3.0, 1.0).real()).epsilon(1e-12));
  }
}

TEST_CASE("endpoint slopes")
{
  const auto [s0, s1] = endpoint_slopes(StepDamping(-1.1, 1.0));
  CHECK(s0 == doctest::Approx(-0.22));
  CHECK(s1 == doctest::Approx(-4.62));
  for (double c : {0.5, 1.5, 3.0})
  {
    const StepDamping w(-c, 1.0);
    const auto [d0, d1] = endpoint_slopes(w);
    const double delta = 1e-6 * c;
    const double fd0 = secular_G(delta, w) / delta;
    const double fd1 = (secular_G(c, w) - secular_G(c - delta, w)) / delta;
    CHECK(std::abs(fd0 - d0) <= 1e-3 * std::abs(d0));
    CHECK(std::abs(fd1 - d1) <= 1e-3 * std::abs(d1));
  }
}

TEST_CASE("root of step(-3, 1)")
{
  const auto r = find_real_eigenvalue(StepDamping(-3.0, 1.0));
  REQUIRE(r.has_value());
  CHECK(r->mu_star == doctest::Approx(2.4755492012851166).epsilon(1e-9));
  CHECK(r->residual < 1e-10);
  CHECK(r->hi - r->lo < 1e-10);
  CHECK(r->mu_star > 0.0);
  CHECK(r->mu_star < 3.0);
  CHECK(r->mu_star >= 1.0 / 3.0);
}

TEST_CASE("root just above the threshold")
{
  const auto r = find_real_eigenvalue(StepDamping(-1.1, 1.0));
  REQUIRE(r.has_value());
  CHECK(r->mu_star == doctest::Approx(0.14719).epsilon(1e-4));
  CHECK(r->residual < 1e-10);
}

TEST_CASE("no root below the threshold")
{
  CHECK_FALSE(find_real_eigenvalue(StepDamping(-1.0, 0.5)).has_value());
  for (double c : {0.1, 0.5, 0.9, 1.0})
    CHECK_FALSE(find_real_eigenvalue(StepDamping(-c, 1.0)).has_value());
  for (double c : {1.01, 1.1, 2.0, 3.0, 10.0})
  {
    const auto r = find_real_eigenvalue(StepDamping(-c, 1.0));
    REQUIRE(r.has_value());
    CHECK(r->residual < 1e-10);
  }
}

TEST_CASE("roots satisfy the unscaled secular equation")
{
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> ua(-6.0, -0.5), ub(0.3, 3.0);
  for (int trial = 0; trial < 30; ++trial)
  {
    const StepDamping w(ua(rng), ub(rng));
    for (const SecularRoot &r : find_real_eigenvalues(w))
    {
      const double denom = std::sqrt(-(r.mu_star * w.depth() + r.mu_star * r.mu_star));
      if (denom > 1e-10)
        CHECK(std::abs(secular_F(r.mu_star, w)) < 1e-10 / denom);
      // Davies disk at the Schrodinger level: mu^2 <= (mu ||W||_1 / 2)^2.
      CHECK(r.mu_star * r.mu_star <= std::pow(0.5 * r.mu_star * w.l1_norm(), 2));
    }
  }
}

TEST_CASE("scan arguments")
{
  CHECK_THROWS_AS(find_real_eigenvalues(StepDamping(-3.0, 1.0), 50), DomainError);
  CHECK_THROWS_AS(find_real_eigenvalues(StepDamping(-3.0, 1.0), 1000, 0.0), DomainError);
  const auto sweep = secular_sweep(StepDamping(-3.0, 1.0), 10);
  REQUIRE(sweep.size() == 12);
  CHECK(sweep.front() == std::pair{0.0, 0.0});
  CHECK(sweep.back() == std::pair{3.0, 0.0});
}

TEST_CASE("point interaction classification")
{
  CHECK(delta_pencil_classify(-2.0) == DeltaPencilClass::right_half_plane);
  CHECK(delta_pencil_classify(2.0) == DeltaPencilClass::left_half_plane);
  CHECK(delta_pencil_classify(0.0) == DeltaPencilClass::no_solution);
  CHECK(delta_pencil_classify(std::nextafter(2.0, 3.0)) == DeltaPencilClass::no_solution);
  CHECK(delta_pencil_classify(cplx(-2.0, 1e-300)) == DeltaPencilClass::no_solution);
  CHECK(to_string(DeltaPencilClass::right_half_plane) == "right_half_plane");
}
