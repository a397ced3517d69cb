// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Core>

namespace specwave::tridiag
{

using cplx = std::complex<double>;

/// Eigenvalues of the complex symmetric tridiagonal matrix with diagonal
/// `diag` and off-diagonal `offdiag` (size n-1).
///
/// Implicit QL with Wilkinson shifts and complex orthogonal rotations
/// (c^2 + s^2 = 1). The rotations are not unitary, so a rotation whose norm
/// sqrt(f^2 + g^2) nearly cancels is treated as a breakdown and reported as a
/// NumericalError; callers fall back to a dense unitary method. The work is
/// O(n^2) with O(n) memory.
std::vector<cplx> complex_symmetric_eigenvalues(std::vector<cplx> diag, std::vector<cplx> offdiag,
                                                int max_sweeps_per_value = 200);

/// Solves the tridiagonal system with sub-diagonal `lower`, diagonal `diag`
/// and super-diagonal `upper` by LU with partial pivoting. Throws
/// NumericalError when the matrix is exactly singular.
Eigen::VectorXcd solve(std::vector<cplx> lower, std::vector<cplx> diag, std::vector<cplx> upper,
                       const Eigen::VectorXcd &rhs);

}  // namespace specwave::tridiag
