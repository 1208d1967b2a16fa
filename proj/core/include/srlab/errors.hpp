// Copyright 2026 The srlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace srlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A value left (or would leave) the normal range of the target format.
class RangeError : public Error {
  public:
    using Error::Error;
};

/// Subnormal, infinite or NaN input where a normal value is required.
class SubnormalOrSpecial : public Error {
  public:
    using Error::Error;
};

/// A value that has more significand bits than the target format holds.
class NotRepresentable : public RangeError {
  public:
    using RangeError::RangeError;
};

class DivisionByZero : public Error {
  public:
    using Error::Error;
};

class EmptyPolynomial : public Error {
  public:
    using Error::Error;
};

/// P(x) == 0, so a relative quantity is undefined.
class ZeroDenominator : public Error {
  public:
    using Error::Error;
};

class InvalidLambda : public Error {
  public:
    using Error::Error;
};

/// The martingale constants involve |x|^-j and are undefined at x == 0.
class ZeroX : public Error {
  public:
    using Error::Error;
};

class OddDegree : public Error {
  public:
    using Error::Error;
};

class EmptySampleSet : public Error {
  public:
    using Error::Error;
};

/// Invalid experiment configuration (bad flag value, bad N, ...).
class ConfigError : public Error {
  public:
    using Error::Error;
};

}  // namespace srlab
