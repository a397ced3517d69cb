// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "specwave/damping.hpp"
#include "specwave/grid.hpp"

namespace specwave
{

/// Discrete damped wave operator on a truncated grid,
///
///     [   0       I    ]
///     [ Lap_h  -diag(a) ]
///
/// where Lap_h is the 3-point Dirichlet Laplacian (1, -2, 1)/h^2. It is the
/// companion linearization of the pencil -Lap_h + mu diag(a) + mu^2. Stored
/// by its blocks; to_dense() materializes the 2N x 2N matrix.
class CompanionMatrix
{
public:
  CompanionMatrix(const Grid &grid, Eigen::VectorXcd damping_samples);

  const Grid &grid() const { return grid_; }
  const Eigen::VectorXcd &damping() const { return damping_; }
  int dimension() const { return 2 * grid_.interior_count(); }

  Eigen::MatrixXcd to_dense() const;
  Eigen::VectorXcd apply(const Eigen::VectorXcd &v) const;

private:
  Grid grid_;
  Eigen::VectorXcd damping_;
};

enum class Classification
{
  genuine,
  continuum_artifact,
  boundary_artifact,
  // Real part and localization pass, but the mode is not resolved by the
  // grid (|mu| h above the resolution limit).
  grid_artifact
};

std::string to_string(Classification c);

enum class SolverMethod
{
  automatic,
  dense,
  structured
};

std::string to_string(SolverMethod m);

struct Eigenpair
{
  cplx mu;
  Eigen::VectorXcd psi;  // unit norm, largest-modulus entry real positive
  double residual = 0.0;
  // ||second half - mu * psi|| / (|mu| ||psi||) of the companion eigenvector.
  double lift_defect = 0.0;
  double outer_mass = 0.0;
  Classification classification = Classification::continuum_artifact;
};

struct Spectrum
{
  std::vector<Eigenpair> pairs;
  SolverMethod method = SolverMethod::automatic;

  std::size_t genuine_count() const;
  std::vector<cplx> eigenvalues() const;
  std::vector<cplx> genuine_eigenvalues() const;
};

struct SolveOptions
{
  SolverMethod method = SolverMethod::automatic;
  // automatic uses the dense solver up to this many interior nodes.
  int dense_max_nodes = 500;
  std::uint64_t seed = 42;
};

CompanionMatrix assemble_companion(const DampingProfile &a, const Grid &g);

/// All 2N eigenpairs of the companion matrix.
///
/// The dense route runs LAPACK zgeev (dgeev for real damping) on the materialized matrix and reads psi
/// from the first block of each eigenvector. The structured route uses the
/// similarity
///
///     diag(R, I) A diag(R, I)^{-1} = [[0, R], [-R^T, -diag(a)]],  -Lap_h = R^T R,
///
/// whose interleaved form is tridiagonal; after a diagonal unitary scaling it
/// becomes i-times a complex symmetric tridiagonal matrix, solved by
/// tridiag::complex_symmetric_eigenvalues in O(N^2). psi then comes from
/// inverse iteration on the tridiagonal pencil. A QL breakdown falls back to
/// the dense route.
Spectrum solve_spectrum(const CompanionMatrix &m, const SolveOptions &opts = {});

struct ClassifyOptions
{
  double tau_re = 0.0;
  double loc_threshold = 0.5;
  double resolution = 0.5;
  double outer_fraction = 0.2;
};

/// tau_re = max(5h, 10/L), loc_threshold = 0.5, resolution = 0.5.
ClassifyOptions default_classify_options(const Grid &g);

/// Marks each pair. Boundary artifact when the psi mass in the outer 20% of
/// the grid reaches loc_threshold; continuum artifact when |Re mu| <= tau_re;
/// grid artifact when |mu| h exceeds the resolution limit; genuine otherwise.
Spectrum classify(Spectrum s, const Grid &g, const ClassifyOptions &opts);

/// ||(-Lap_h + mu diag(a) + mu^2) psi|| / ||psi||.
double pencil_residual(cplx mu, const Eigen::VectorXcd &psi, const Eigen::VectorXcd &a_samples,
                       const Grid &g);
double pencil_residual(cplx mu, const Eigen::VectorXcd &psi, const DampingProfile &a, const Grid &g);

/// (psi, mu psi).
Eigen::VectorXcd lift_eigenvector(const Eigen::VectorXcd &psi, cplx mu);

/// ||M v - mu v|| / ||v||.
double companion_residual(const CompanionMatrix &m, cplx mu, const Eigen::VectorXcd &v);

/// Fraction of sum |psi_k|^2 carried by nodes with |x_k| > (1 - fraction) L.
double outer_mass_fraction(const Eigen::VectorXcd &psi, const Grid &g, double fraction = 0.2);

}  // namespace specwave
