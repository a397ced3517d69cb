// Copyright The specwave Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace specwave
{

// Base for every error raised by the library. The CLI maps the subclasses
// onto process exit codes.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Input outside an operation's domain (bad parameters, violated preconditions).
class DomainError : public Error
{
public:
  using Error::Error;
};

// Iterative numerics that did not converge or broke down.
class NumericalError : public Error
{
public:
  NumericalError(const std::string &what, int iterations = 0, int index = -1)
    : Error(what), iterations_(iterations), index_(index)
  {
  }

  int iterations() const { return iterations_; }
  int index() const { return index_; }

private:
  int iterations_;
  int index_;
};

}  // namespace specwave
