// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace specwave
{

/// Uniform grid on [-L, L] with homogeneous Dirichlet endpoints. Only the N
/// interior nodes x_k = -L + k h, k = 1..N, carry unknowns; h = 2L/(N+1).
class Grid
{
public:
  Grid(double half_length, int interior_count);

  double half_length() const { return half_length_; }
  int interior_count() const { return interior_count_; }
  double spacing() const { return spacing_; }

  /// k is zero-based: node(0) = -L + h.
  double node(int k) const { return -half_length_ + (k + 1) * spacing_; }
  std::vector<double> nodes() const;

  bool operator==(const Grid &) const = default;

private:
  double half_length_;
  int interior_count_;
  double spacing_;
};

}  // namespace specwave
