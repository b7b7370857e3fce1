// Copyright 2026 The aoibound Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace aoi {

/// Root of every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Input / model errors (CLI exit code 2).

class InvalidArgument : public Error
{
  public:
    using Error::Error;
};

/// Utilization too high for the requested operation.
class UnstableModel : public Error
{
  public:
    using Error::Error;
};

/// A density was requested from a distribution with an atom.
class NotAbsolutelyContinuous : public Error
{
  public:
    using Error::Error;
};

class SingularTheta : public Error
{
  public:
    using Error::Error;
};

/// θ violates E[e^{θZ}]·E[e^{-θY}] ≤ 1 beyond tolerance.
class InfeasibleTheta : public Error
{
  public:
    using Error::Error;
};

// Numerical errors (CLI exit code 3).

class NumericalError : public Error
{
  public:
    using Error::Error;
};

class QuadratureFailure : public NumericalError
{
  public:
    using NumericalError::NumericalError;
};

class NoPositiveTheta : public NumericalError
{
  public:
    using NumericalError::NumericalError;
};

}  // namespace aoi
