// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "specwave/damping.hpp"
#include "specwave/pencil.hpp"
#include "specwave/quadrature.hpp"
#include "specwave/report.hpp"

namespace specwave
{

enum class RegionKind
{
  empty_point_spectrum,
  real_upper_bound,
  real_lower_bound,
  annulus_lower,
  alpha_interval,
  no_conclusion
};

/// Which eigenvalues a region speaks about.
enum class RegionScope
{
  all,            // every eigenvalue in C
  positive_real,  // real eigenvalues mu > 0
  negative_real   // real eigenvalues mu < 0
};

std::string to_string(RegionKind k);
std::string to_string(RegionScope s);

struct Condition
{
  std::string name;
  bool holds = false;
};

/// A region of C known to contain the point spectrum, or a verdict about it.
/// For bounds `bound` is a positive real: |mu| <= bound (real_upper_bound),
/// |mu| >= bound (real_lower_bound, annulus_lower). alpha_interval uses
/// [lo, hi] and `window`, the admissible |mu| range (0, window).
struct EnclosureRegion
{
  RegionKind kind = RegionKind::no_conclusion;
  RegionScope scope = RegionScope::all;
  std::string source;
  double bound = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  double window = 0.0;
  std::vector<Condition> applicability;
  std::string note;

  bool applicable() const;
};

nlohmann::json to_json(const EnclosureRegion &r);

/// User-supplied constant D_{gamma,d} for the d >= 2 bounds; 0 < gamma <= 1/2
/// with d >= 2, or gamma = 0 with d >= 3.
struct FrankConstant
{
  double gamma;
  int d;
  double value;
};

FrankConstant frank_constant(double gamma, int d, double value);

/// Lieb-Thirring enclosure of the real eigenvalues of a real damping
/// (d = 1). For gamma > 1/2: mu <= (L int a_-^{gamma+1/2})^{1/(gamma-1/2)}
/// for positive mu, mirrored through a_+ for negative mu. For gamma = 1/2:
/// no positive (negative) eigenvalues when int a_- (int a_+) < 1/L = 2.
/// Returns (positive half-line region, negative half-line region).
std::pair<EnclosureRegion, EnclosureRegion>
lieb_thirring_bounds(const DampingProfile &a, double gamma, const QuadratureSpec &q,
                     std::optional<double> user_constant = std::nullopt);

/// |mu| >= 1 / int |a||x| for real mu > 0 when int a < -4 (mirrored for mu < 0
/// when int a > 4). Throws when the weighted norm vanishes.
EnclosureRegion bargmann_lower_bound(const DampingProfile &a, const QuadratureSpec &q);

/// Coupling interval 2/int a_- <= alpha <= -4/int a (mirror 2/int a_+ <=
/// alpha <= 4/int a) together with the window |mu| < 1/int |a||x|.
EnclosureRegion coupling_interval(const DampingProfile &a, const QuadratureSpec &q);

/// Empty point spectrum when ||a||_1 plus its quadrature error is below 2.
EnclosureRegion davies_verdict(const DampingProfile &a, const QuadratureSpec &q);

/// Annulus |mu| >= (D * integral)^{-1/(d/2 - gamma)} from a precomputed
/// int_{R^d} |a|^{gamma+d/2}. A zero integral gives an empty point spectrum.
EnclosureRegion frank_region(double integral, const FrankConstant &D);

/// Same, with the integral computed from a radially symmetric profile
/// a(|x|) given by a 1-D profile.
EnclosureRegion frank_region(const DampingProfile &a, const FrankConstant &D,
                             const QuadratureSpec &q);

/// int_{R^d} |a(|x|)|^p dx = |S^{d-1}| int_0^inf |a(r)|^p r^{d-1} dr.
IntegralEstimate radial_power_integral(const DampingProfile &a, double p, int d,
                                       const QuadratureSpec &q);

struct MembershipOptions
{
  double abs_tol = 1e-8;
  double rel_tol = 1e-2;
  // |Im mu| <= real_tol * max(1, |mu|) counts as real.
  double real_tol = 1e-6;
};

/// Checks every genuine eigenvalue against every applicable region.
VerificationReport membership_report(const std::vector<EnclosureRegion> &regions,
                                     const std::vector<cplx> &genuine,
                                     const MembershipOptions &opts = {});
VerificationReport membership_report(const std::vector<EnclosureRegion> &regions,
                                     const Spectrum &s, const MembershipOptions &opts = {});

}  // namespace specwave
