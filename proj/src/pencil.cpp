// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#include "specwave/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <lapacke.h>

#include "specwave/errors.hpp"
#include "specwave/tridiagonal.hpp"

namespace specwave
{

namespace
{

constexpr cplx I{0.0, 1.0};

// y = Lap_h x with homogeneous Dirichlet ends.
Eigen::VectorXcd apply_laplacian(const Eigen::VectorXcd &x, double h)
{
  const Eigen::Index n = x.size();
  const double inv_h2 = 1.0 / (h * h);
  Eigen::VectorXcd y(n);
  for (Eigen::Index k = 0; k < n; ++k)
  {
    cplx s = -2.0 * x[k];
    if (k > 0)
      s += x[k - 1];
    if (k + 1 < n)
      s += x[k + 1];
    y[k] = s * inv_h2;
  }
  return y;
}

void normalize_phase(Eigen::VectorXcd &psi)
{
  const double nrm = psi.norm();
  if (nrm == 0.0)
    return;
  Eigen::Index imax = 0;
  psi.cwiseAbs().maxCoeff(&imax);
  const cplx pivot = psi[imax];
  psi *= std::conj(pivot) / (std::abs(pivot) * nrm);
  psi[imax] = std::abs(psi[imax]);
}

Eigen::VectorXcd random_unit(int n, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXcd v(n);
  for (int k = 0; k < n; ++k)
    v[k] = cplx(u(rng), u(rng));
  return v / v.norm();
}

// Null vector of the tridiagonal pencil at an (approximate) eigenvalue.
Eigen::VectorXcd pencil_null_vector(cplx mu, const Eigen::VectorXcd &a, const Grid &g,
                                    std::uint64_t seed)
{
  const int n = g.interior_count();
  const double h = g.spacing();
  const double inv_h2 = 1.0 / (h * h);
  std::vector<cplx> off(n - 1, cplx(-inv_h2));
  Eigen::VectorXcd x = random_unit(n, seed);

  cplx shift = mu;
  double best = std::numeric_limits<double>::infinity();
  Eigen::VectorXcd best_x = x;
  for (int it = 0; it < 4; ++it)
  {
    std::vector<cplx> diag(n);
    for (int k = 0; k < n; ++k)
      diag[k] = 2.0 * inv_h2 + shift * a[k] + shift * shift;
    try
    {
      x = tridiag::solve(off, diag, off, x);
    }
    catch (const NumericalError &)
    {
      // Exactly singular: nudge the shift off the eigenvalue.
      shift = mu + cplx(1.0, 1.0) * 1e-14 * (1.0 + std::abs(mu));
      continue;
    }
    x /= x.norm();
    const double res = pencil_residual(mu, x, a, g);
    if (res < best)
    {
      best = res;
      best_x = x;
    }
    else
    {
      break;
    }
  }
  return best_x;
}

std::vector<cplx> structured_eigenvalues(const CompanionMatrix &m)
{
  const Grid &g = m.grid();
  const int n = g.interior_count();
  const double h = g.spacing();
  const double inv_h2 = 1.0 / (h * h);

  // -Lap_h = L L^T with L lower bidiagonal; R = L^T.
  std::vector<double> rd(n), ro(n - 1);
  for (int k = 0; k < n; ++k)
  {
    const double dk = 2.0 * inv_h2 - (k > 0 ? ro[k - 1] * ro[k - 1] : 0.0);
    rd[k] = std::sqrt(dk);
    if (k + 1 < n)
      ro[k] = -inv_h2 / rd[k];
  }

  // Interleaved order (v_1, w_1, v_2, w_2, ...), scaled to symmetric form.
  std::vector<cplx> diag(2 * n, cplx{}), off(2 * n - 1);
  for (int k = 0; k < n; ++k)
  {
    diag[2 * k] = I * m.damping()[k];
    off[2 * k] = rd[k];
    if (k + 1 < n)
      off[2 * k + 1] = ro[k];
  }
  std::vector<cplx> nu = tridiag::complex_symmetric_eigenvalues(std::move(diag), std::move(off));
  for (auto &v : nu)
    v *= I;
  return nu;
}

void check_geev(const char *name, lapack_int info, int dim)
{
  if (info > 0)
    throw NumericalError(std::string(name) + ": QR iteration failed; eigenvalues " +
                           std::to_string(info) + ".." + std::to_string(dim) + " converged",
                         0, static_cast<int>(info) - 1);
  if (info < 0)
    throw DomainError(std::string(name) + ": invalid argument " + std::to_string(-info));
}

// Real damping gives a real matrix; dgeev then returns exact conjugate pairs.
void real_eigensystem(const CompanionMatrix &m, Eigen::VectorXcd &w, Eigen::MatrixXcd &vr)
{
  const int dim = m.dimension();
  Eigen::MatrixXd A = m.to_dense().real();
  Eigen::VectorXd wr(dim), wi(dim);
  Eigen::MatrixXd v(dim, dim);
  check_geev("dgeev",
             LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', 'V', dim, A.data(), dim, wr.data(), wi.data(), nullptr, 1,
                           v.data(), dim),
             dim);
  for (int j = 0; j < dim; ++j)
  {
    w[j] = cplx(wr[j], wi[j]);
    if (wi[j] == 0.0)
    {
      vr.col(j) = v.col(j).cast<cplx>();
    }
    else
    {
      w[j + 1] = std::conj(w[j]);
      vr.col(j) = v.col(j).cast<cplx>() + I * v.col(j + 1).cast<cplx>();
      vr.col(j + 1) = vr.col(j).conjugate();
      ++j;
    }
  }
}

Spectrum solve_dense(const CompanionMatrix &m)
{
  const int n = m.grid().interior_count();
  const int dim = 2 * n;
  Eigen::VectorXcd w(dim);
  Eigen::MatrixXcd vr(dim, dim);
  if (m.damping().imag().cwiseAbs().maxCoeff() == 0.0)
  {
    real_eigensystem(m, w, vr);
  }
  else
  {
    Eigen::MatrixXcd A = m.to_dense();
    auto lc = [](cplx *p) { return reinterpret_cast<lapack_complex_double *>(p); };
    check_geev("zgeev",
               LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'V', dim, lc(A.data()), dim, lc(w.data()), nullptr, 1,
                             lc(vr.data()), dim),
               dim);
  }

  Spectrum s;
  s.method = SolverMethod::dense;
  s.pairs.reserve(dim);
  for (int j = 0; j < dim; ++j)
  {
    Eigenpair p;
    p.mu = w[j];
    Eigen::VectorXcd top = vr.col(j).head(n);
    Eigen::VectorXcd bottom = vr.col(j).tail(n);
    const double scale = std::abs(p.mu) * top.norm();
    p.lift_defect = scale > 0.0 ? (bottom - p.mu * top).norm() / scale : 0.0;
    p.psi = std::move(top);
    s.pairs.push_back(std::move(p));
  }
  return s;
}

Spectrum solve_structured(const CompanionMatrix &m, std::uint64_t seed)
{
  const std::vector<cplx> mu = structured_eigenvalues(m);
  Spectrum s;
  s.method = SolverMethod::structured;
  s.pairs.reserve(mu.size());
  for (std::size_t j = 0; j < mu.size(); ++j)
  {
    Eigenpair p;
    p.mu = mu[j];
    p.psi = pencil_null_vector(mu[j], m.damping(), m.grid(), seed + 0x9E3779B97F4A7C15ULL * (j + 1));
    p.lift_defect = 0.0;  // the companion eigenvector is the lift itself
    s.pairs.push_back(std::move(p));
  }
  return s;
}

}  // namespace

CompanionMatrix::CompanionMatrix(const Grid &grid, Eigen::VectorXcd damping_samples)
  : grid_(grid), damping_(std::move(damping_samples))
{
  if (damping_.size() != grid_.interior_count())
    throw DomainError("damping samples do not match the grid");
  for (Eigen::Index k = 0; k < damping_.size(); ++k)
    if (!std::isfinite(std::abs(damping_[k])))
      throw DomainError("damping samples must be finite");
}

Eigen::MatrixXcd CompanionMatrix::to_dense() const
{
  const int n = grid_.interior_count();
  const double inv_h2 = 1.0 / (grid_.spacing() * grid_.spacing());
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k)
  {
    A(k, n + k) = 1.0;
    A(n + k, k) = -2.0 * inv_h2;
    if (k > 0)
      A(n + k, k - 1) = inv_h2;
    if (k + 1 < n)
      A(n + k, k + 1) = inv_h2;
    A(n + k, n + k) = -damping_[k];
  }
  return A;
}

Eigen::VectorXcd CompanionMatrix::apply(const Eigen::VectorXcd &v) const
{
  const int n = grid_.interior_count();
  if (v.size() != 2 * n)
    throw DomainError("companion apply: vector has wrong length");
  Eigen::VectorXcd out(2 * n);
  out.head(n) = v.tail(n);
  out.tail(n) = apply_laplacian(v.head(n), grid_.spacing()) - damping_.cwiseProduct(v.tail(n));
  return out;
}

std::string to_string(Classification c)
{
  switch (c)
  {
  case Classification::genuine:
    return "genuine";
  case Classification::continuum_artifact:
    return "continuum_artifact";
  case Classification::boundary_artifact:
    return "boundary_artifact";
  case Classification::grid_artifact:
    return "grid_artifact";
  }
  return "unknown";
}

std::string to_string(SolverMethod m)
{
  switch (m)
  {
  case SolverMethod::automatic:
    return "automatic";
  case SolverMethod::dense:
    return "dense";
  case SolverMethod::structured:
    return "structured";
  }
  return "unknown";
}

std::size_t Spectrum::genuine_count() const
{
  return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](const Eigenpair &p) {
    return p.classification == Classification::genuine;
  }));
}

std::vector<cplx> Spectrum::eigenvalues() const
{
  std::vector<cplx> out;
  out.reserve(pairs.size());
  for (const auto &p : pairs)
    out.push_back(p.mu);
  return out;
}

std::vector<cplx> Spectrum::genuine_eigenvalues() const
{
  std::vector<cplx> out;
  for (const auto &p : pairs)
    if (p.classification == Classification::genuine)
      out.push_back(p.mu);
  return out;
}

CompanionMatrix assemble_companion(const DampingProfile &a, const Grid &g)
{
  return CompanionMatrix(g, sample(a, g));
}

Spectrum solve_spectrum(const CompanionMatrix &m, const SolveOptions &opts)
{
  const int n = m.grid().interior_count();
  SolverMethod method = opts.method;
  if (method == SolverMethod::automatic)
    method = (n <= opts.dense_max_nodes) ? SolverMethod::dense : SolverMethod::structured;

  Spectrum s;
  if (method == SolverMethod::structured)
  {
    try
    {
      s = solve_structured(m, opts.seed);
    }
    catch (const NumericalError &)
    {
      if (opts.method == SolverMethod::structured)
        throw;
      s = solve_dense(m);
    }
  }
  else
  {
    s = solve_dense(m);
  }

  for (auto &p : s.pairs)
  {
    normalize_phase(p.psi);
    p.residual = pencil_residual(p.mu, p.psi, m.damping(), m.grid());
  }
  std::sort(s.pairs.begin(), s.pairs.end(), [](const Eigenpair &x, const Eigenpair &y) {
    if (x.mu.real() != y.mu.real())
      return x.mu.real() > y.mu.real();
    return x.mu.imag() > y.mu.imag();
  });
  return s;
}

ClassifyOptions default_classify_options(const Grid &g)
{
  ClassifyOptions o;
  o.tau_re = std::max(5.0 * g.spacing(), 10.0 / g.half_length());
  return o;
}

Spectrum classify(Spectrum s, const Grid &g, const ClassifyOptions &opts)
{
  if (!(opts.tau_re > 0.0))
    throw DomainError("tau_re must be positive");
  if (!(opts.loc_threshold > 0.0 && opts.loc_threshold < 1.0))
    throw DomainError("loc_threshold must lie in (0, 1)");
  if (!(opts.resolution > 0.0))
    throw DomainError("resolution limit must be positive");
  for (auto &p : s.pairs)
  {
    p.outer_mass = outer_mass_fraction(p.psi, g, opts.outer_fraction);
    if (p.outer_mass >= opts.loc_threshold)
      p.classification = Classification::boundary_artifact;
    else if (!(std::abs(p.mu.real()) > opts.tau_re))
      p.classification = Classification::continuum_artifact;
    else if (std::abs(p.mu) * g.spacing() > opts.resolution)
      p.classification = Classification::grid_artifact;
    else
      p.classification = Classification::genuine;
  }
  return s;
}

double pencil_residual(cplx mu, const Eigen::VectorXcd &psi, const Eigen::VectorXcd &a_samples,
                       const Grid &g)
{
  if (psi.size() != g.interior_count() || a_samples.size() != g.interior_count())
    throw DomainError("pencil residual: vector length does not match the grid");
  const double nrm = psi.norm();
  if (nrm == 0.0)
    throw DomainError("pencil residual of the zero vector is undefined");
  Eigen::VectorXcd r = -apply_laplacian(psi, g.spacing());
  r += mu * a_samples.cwiseProduct(psi) + (mu * mu) * psi;
  return r.norm() / nrm;
}

double pencil_residual(cplx mu, const Eigen::VectorXcd &psi, const DampingProfile &a, const Grid &g)
{
  return pencil_residual(mu, psi, sample(a, g), g);
}

Eigen::VectorXcd lift_eigenvector(const Eigen::VectorXcd &psi, cplx mu)
{
  Eigen::VectorXcd v(2 * psi.size());
  v.head(psi.size()) = psi;
  v.tail(psi.size()) = mu * psi;
  return v;
}

double companion_residual(const CompanionMatrix &m, cplx mu, const Eigen::VectorXcd &v)
{
  const double nrm = v.norm();
  if (nrm == 0.0)
    throw DomainError("companion residual of the zero vector is undefined");
  return (m.apply(v) - mu * v).norm() / nrm;
}

double outer_mass_fraction(const Eigen::VectorXcd &psi, const Grid &g, double fraction)
{
  const double cut = (1.0 - fraction) * g.half_length();
  double outer = 0.0, total = 0.0;
  for (int k = 0; k < g.interior_count(); ++k)
  {
    const double m2 = std::norm(psi[k]);
    total += m2;
    if (std::abs(g.node(k)) > cut)
      outer += m2;
  }
  return total > 0.0 ? outer / total : 0.0;
}

}  // namespace specwave
