// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "oracles.hpp"
#include "random_profiles.hpp"
#include "specwave/enclosure.hpp"
#include "specwave/pencil.hpp"
#include "specwave/scenario.hpp"
#include "specwave/schrodinger.hpp"
#include "specwave/similarity.hpp"
#include "specwave/stepwell.hpp"

using namespace specwave;
using nlohmann::json;

namespace
{

constexpr std::uint64_t kSeed = 42;
const QuadratureSpec kQ{};

struct Outcome
{
  bool pass = false;
  std::string detail;
};

std::filesystem::path scratch(const std::string &name)
{
  return std::filesystem::temp_directory_path() / ("specwave-acceptance-" + name);
}

json run_scenario(json damping, const std::vector<std::string> &analyses, double L, int N,
                  const std::string &tag)
{
  json cfg = {{"damping", std::move(damping)},
              {"grid", {{"L", L}, {"N", N}}},
              {"analyses", analyses},
              {"out_dir", scratch(tag).string()}};
  return run(config_from_json(cfg)).body;
}

std::string fmt(const char *f, double a)
{
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome step_optimality()
{
  const auto t0 = std::chrono::steady_clock::now();
  const json body = run_scenario({{"kind", "step"}, {"a", -3.0}, {"b", 1.0}}, {"step-secular", "solve"}, 40.0,
                                 4000, "c1");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const json &sec = body["results"]["step_secular"];
  if (sec["mu_star"].is_null())
    return {false, "no secular root"};
  const double mu = sec["mu_star"].get<double>();
  const double g = std::abs(secular_G(mu, StepDamping(-3.0, 1.0)));
  double best = INFINITY;
  for (const auto &e : body["results"]["solve"]["genuine"])
    best = std::min(best, std::abs(cplx(e["re"].get<double>(), e["im"].get<double>()) - mu) / mu);
  const bool ok = mu > 0.0 && mu < 3.0 && g < 1e-10 && best <= 1e-2 && secs < 120.0;
  return {ok, "mu*=" + fmt("%.10f", mu) + " |G|=" + fmt("%.1e", g) + " rel=" + fmt("%.1e", best) +
                " t=" + fmt("%.1fs", secs)};
}

Outcome davies_emptiness()
{
  bool ok = true;
  std::string detail;
  const json profiles[] = {{{"kind", "step"}, {"a", -1.0}, {"b", 0.5}},
                           {{"kind", "gaussian"}, {"amplitude", 1.0}, {"width", 1.0}}};
  for (const auto &p : profiles)
    for (double L : {20.0, 40.0})
    {
      const json body = run_scenario(p, {"enclose", "solve"}, L, 4000, "c2");
      const std::size_t n = body["results"]["solve"]["genuine_count"];
      bool empty = false;
      for (const auto &r : body["results"]["enclose"]["regions"])
        if (r["source"] == "davies_l1")
          empty = r["kind"] == "empty_point_spectrum" && r["applicable"].get<bool>();
      ok = ok && n == 0 && empty;
      detail += p["kind"].get<std::string>() + "@L" + fmt("%.0f", L) + ":" + std::to_string(n) +
                (empty ? "/empty " : "/nonempty ");
    }
  return {ok, detail};
}

Outcome sharpness()
{
  const StepDamping w(-1.1, 1.0);
  const auto [s0, s1] = endpoint_slopes(w);
  const auto root = find_real_eigenvalue(w);
  const auto v = kato_similarity_verdict(w.profile(), XiGrid::log_spaced(), kQ);
  const bool ok = root && std::abs(s0 + 0.22) < 1e-12 && std::abs(s1 + 4.62) < 1e-12 &&
                  v.verdict == SimilarityVerdict::inconclusive;
  return {ok, "root=" + (root ? fmt("%.6f", root->mu_star) : std::string("none")) + " slopes=" +
                fmt("%.3f", s0) + "," + fmt("%.3f", s1) + " verdict=" + to_string(v.verdict)};
}

Outcome inequality_suite()
{
  const Grid g(30.0, 4000);
  const auto well = DampingProfile::step(-1.0, 1.0);
  const auto neg = negative_eigenvalues(well, g, 1e-4);
  const double oracle = oracle::square_well_ground_state(1.0, 1.0);
  InequalityOptions opts;
  opts.rel_tol = 1e-2;
  bool ok = neg.eigenvalues.size() == 1 && std::abs(neg.eigenvalues[0] - oracle) < 1e-3 &&
            std::abs(neg.eigenvalues[0] + 0.4539) < 1e-3;
  const double half_sum = lt_sum(neg, 0.5);
  ok = ok && std::abs(half_sum - 0.6737) < 1e-3 && verify_inequalities(well, 0.5, g, kQ, opts).all_pass();
  std::mt19937_64 rng(kSeed);
  const Grid wide(32.0, 4095);
  int violations = 0;
  for (int trial = 0; trial < 20; ++trial)
  {
    const auto V = randprof::attractive_potential(rng);
    for (double gamma : {0.5, 1.5})
      violations += static_cast<int>(verify_inequalities(V, gamma, wide, kQ, opts).failures().size());
  }
  ok = ok && violations == 0;
  return {ok, "lambda1=" + fmt("%.5f", neg.eigenvalues.empty() ? NAN : neg.eigenvalues[0]) + " sum=" +
                fmt("%.4f", half_sum) + " violations=" + std::to_string(violations)};
}

Outcome birman_schwinger()
{
  const auto a = DampingProfile::gaussian(1.0, 1.0);
  const XiGrid xg = XiGrid::log_spaced();
  const double sup = sup_hs_norm(a, xg, kQ).value;
  QuadratureSpec fine = kQ;
  fine.panels *= 2;
  const double sup_fine = sup_hs_norm(a, xg, fine).value;

  const Grid g(10.0, 300);
  std::mt19937_64 rng(kSeed);
  std::normal_distribution<double> n01;
  double worst = 0.0;
  for (cplx xi : {cplx(1.0, 1.0), cplx(-0.5, 2.0), cplx(3.0, -0.1)})
  {
    VectorPair f{Eigen::VectorXcd(g.interior_count()), Eigen::VectorXcd(g.interior_count())};
    for (int k = 0; k < g.interior_count(); ++k)
    {
      f.first[k] = cplx(n01(rng), n01(rng));
      f.second[k] = cplx(n01(rng), n01(rng));
    }
    const VectorPair back = shifted_generator_action(xi, resolvent_block_action(xi, f, g), g);
    const double num = std::hypot((back.first - f.first).norm(), (back.second - f.second).norm());
    worst = std::max(worst, num / std::hypot(f.first.norm(), f.second.norm()));
  }
  const double ceiling = std::sqrt(std::numbers::pi) / 2.0;
  const bool ok = sup <= ceiling + 1e-6 && std::abs(sup_fine - sup) < 1e-6 && worst < 1e-10;
  return {ok, "sup=" + fmt("%.8f", sup) + " ceiling=" + fmt("%.8f", ceiling) + " dsup=" +
                fmt("%.1e", std::abs(sup_fine - sup)) + " resid=" + fmt("%.1e", worst)};
}

Outcome determinant_oracle()
{
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const Grid g(3.5, 6);  // h = 1
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial)
  {
    std::vector<cplx> a(6);
    for (auto &v : a)
      v = cplx(u(rng), u(rng));
    const Eigen::VectorXcd samples = Eigen::Map<Eigen::VectorXcd>(a.data(), 6);
    const Spectrum s = solve_spectrum(CompanionMatrix(g, samples), {SolverMethod::dense});
    worst = std::max(worst, oracle::multiset_distance(s.eigenvalues(),
                                                      oracle::pencil_determinant_roots(a, g.spacing())));
  }
  return {worst < 1e-8, "max distance=" + fmt("%.1e", worst)};
}

Outcome structural_invariants()
{
  std::mt19937_64 rng(kSeed);
  const Grid g(10.0, 400);
  double conj_gap = 0.0, real_part = 0.0, abscissa = -INFINITY;
  for (int trial = 0; trial < 10; ++trial)
  {
    auto ev = solve_spectrum(assemble_companion(randprof::real_profile(g, rng), g)).eigenvalues();
    std::vector<cplx> c = ev;
    for (auto &z : c)
      z = std::conj(z);
    conj_gap = std::max(conj_gap, oracle::multiset_distance(ev, c));
    for (const cplx z : solve_spectrum(assemble_companion(randprof::imaginary_profile(g, rng), g)).eigenvalues())
      real_part = std::max(real_part, std::abs(z.real()));
    for (const cplx z :
         solve_spectrum(assemble_companion(randprof::nonnegative_profile(g, rng), g)).eigenvalues())
      abscissa = std::max(abscissa, z.real());
  }
  const bool ok = conj_gap < 1e-8 && real_part < 1e-8 && abscissa <= 1e-10;
  return {ok, "conj=" + fmt("%.1e", conj_gap) + " |Re|=" + fmt("%.1e", real_part) + " maxRe=" +
                fmt("%.1e", abscissa)};
}

Outcome coupling_arithmetic()
{
  const auto a = DampingProfile::step(-3.0, 1.0);
  const EnclosureRegion lower = bargmann_lower_bound(a, kQ);
  const EnclosureRegion iv = coupling_interval(a, kQ);
  const json body = run_scenario({{"kind", "step"}, {"a", -3.0}, {"b", 1.0}}, {"sweep-alpha"}, 20.0, 1000, "c8");
  const bool found = body["results"]["sweep_alpha"]["found_in_interval"].get<bool>();
  const bool ok = lower.bound == 1.0 / 3.0 && iv.lo == 1.0 / 3.0 && iv.hi == 2.0 / 3.0 && found;
  return {ok, "lower=" + fmt("%.17g", lower.bound) + " interval=[" + fmt("%.17g", iv.lo) + "," +
                fmt("%.17g", iv.hi) + "] found=" + (found ? "yes" : "no")};
}

Outcome delta_pencil()
{
  bool ok = delta_pencil_classify({-2.0, 0.0}) == DeltaPencilClass::right_half_plane &&
            delta_pencil_classify({2.0, 0.0}) == DeltaPencilClass::left_half_plane;
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  int wrong = 0;
  for (int trial = 0; trial < 100; ++trial)
  {
    const cplx alpha(u(rng), trial % 2 == 0 ? 0.0 : u(rng));
    if (delta_pencil_classify(alpha) != DeltaPencilClass::no_solution)
      ++wrong;
  }
  ok = ok && wrong == 0;
  return {ok, "misclassified=" + std::to_string(wrong)};
}

}  // namespace

int main()
{
  const std::pair<const char *, std::function<Outcome()>> criteria[] = {
    {"step optimality", step_optimality},
    {"empty point spectrum below norm 2", davies_emptiness},
    {"sharpness of the constant 2", sharpness},
    {"Schrodinger inequality suite", inequality_suite},
    {"Birman-Schwinger HS bound", birman_schwinger},
    {"companion vs determinant roots", determinant_oracle},
    {"structural invariants", structural_invariants},
    {"lower bound and coupling interval", coupling_arithmetic},
    {"point-interaction classification", delta_pencil},
  };
  int failed = 0;
  int index = 0;
  for (const auto &[name, check] : criteria)
  {
    ++index;
    Outcome o;
    try
    {
      o = check();
    }
    catch (const std::exception &e)
    {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("[%s] %d. %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
