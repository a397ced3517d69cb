// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#include "specwave/grid.hpp"

#include <cmath>
#include <string>

#include "specwave/errors.hpp"

namespace specwave
{

Grid::Grid(double half_length, int interior_count)
  : half_length_(half_length), interior_count_(interior_count), spacing_(0.0)
{
  if (!(half_length > 0.0) || !std::isfinite(half_length))
    throw DomainError("grid half-length must be a positive finite number");
  if (interior_count < 3)
    throw DomainError("grid needs at least 3 interior nodes, got " +
                      std::to_string(interior_count));
  spacing_ = 2.0 * half_length / (interior_count + 1);
}

std::vector<double> Grid::nodes() const
{
  std::vector<double> x(interior_count_);
  for (int k = 0; k < interior_count_; ++k)
    x[k] = node(k);
  return x;
}

}  // namespace specwave
