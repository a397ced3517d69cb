// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#include "specwave/tridiagonal.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <lapacke.h>

#include "specwave/errors.hpp"

namespace specwave::tridiag
{

std::vector<cplx> complex_symmetric_eigenvalues(std::vector<cplx> d, std::vector<cplx> offdiag,
                                                int max_sweeps_per_value)
{
  const int n = static_cast<int>(d.size());
  if (n == 0)
    return d;
  if (static_cast<int>(offdiag.size()) != n - 1)
    throw DomainError("off-diagonal must have n-1 entries");

  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr double tiny = std::numeric_limits<double>::min();
  // A rotation radius smaller than this fraction of its inputs loses every
  // significant digit of s = f/r and c = g/r.
  constexpr double breakdown = 1e-8;

  std::vector<cplx> e(offdiag);
  e.push_back(0.0);

  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    scale = std::max(scale, std::abs(d[i]) + std::abs(e[i]));

  for (int l = 0; l < n; ++l)
  {
    int sweeps = 0;
    int m = l;
    do
    {
      for (m = l; m < n - 1; ++m)
      {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd || std::abs(e[m]) <= eps * eps * scale)
          break;
      }
      if (m == l)
        break;
      if (sweeps++ == max_sweeps_per_value)
        throw NumericalError("complex symmetric QL did not converge for eigenvalue " +
                               std::to_string(l) + " after " + std::to_string(sweeps - 1) +
                               " sweeps",
                             sweeps - 1, l);

      // Wilkinson shift from the leading 2x2 block, root closer to d[l].
      cplx g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      cplx r = std::sqrt(g * g + 1.0);
      const cplx denom = (std::abs(g + r) >= std::abs(g - r)) ? g + r : g - r;
      g = d[m] - d[l] + e[l] / denom;

      cplx s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      int i = m - 1;
      for (; i >= l; --i)
      {
        const cplx f = s * e[i];
        const cplx b = c * e[i];
        r = std::sqrt(f * f + g * g);
        e[i + 1] = r;
        if (std::abs(r) <= tiny)
        {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        if (std::abs(r) < breakdown * (std::abs(f) + std::abs(g)))
          throw NumericalError("complex symmetric QL breakdown (isotropic rotation) at index " +
                                 std::to_string(i),
                               sweeps, i);
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow)
        continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
  return d;
}

Eigen::VectorXcd solve(std::vector<cplx> lower, std::vector<cplx> diag, std::vector<cplx> upper,
                       const Eigen::VectorXcd &rhs)
{
  const auto n = static_cast<lapack_int>(diag.size());
  if (rhs.size() != n || static_cast<lapack_int>(lower.size()) != n - 1 ||
      static_cast<lapack_int>(upper.size()) != n - 1)
    throw DomainError("tridiagonal solve: inconsistent sizes");
  Eigen::VectorXcd x = rhs;
  auto as_lapack = [](std::vector<cplx> &v) { return reinterpret_cast<lapack_complex_double *>(v.data()); };
  const lapack_int info =
    LAPACKE_zgtsv(LAPACK_COL_MAJOR, n, 1, as_lapack(lower), as_lapack(diag), as_lapack(upper),
                  reinterpret_cast<lapack_complex_double *>(x.data()), n);
  if (info > 0)
    throw NumericalError("tridiagonal matrix is exactly singular at pivot " + std::to_string(info),
                         0, static_cast<int>(info) - 1);
  if (info < 0)
    throw DomainError("zgtsv: invalid argument " + std::to_string(-info));
  return x;
}

}  // namespace specwave::tridiag
