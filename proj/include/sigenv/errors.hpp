// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 sigenv Project Contributors

#pragma once

#include <stdexcept>
#include <string>

namespace sigenv {

/// Base class for all sigenv errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested bandwidth needs more coefficients than there are samples.
class BandwidthExceedsSamples : public Error {
 public:
  using Error::Error;
};

/// Complex coefficient array violates c[-k] == conj(c[k]) beyond tolerance.
class NonHermitianCoefficients : public Error {
 public:
  using Error::Error;
};

/// Coefficient decay exponent r <= 1: the tail sum diverges.
class InvalidDecay : public Error {
 public:
  using Error::Error;
};

/// Constraint system has no feasible point.
class Infeasible : public Error {
 public:
  using Error::Error;
};

/// Objective is unbounded below on the feasible region.
class Unbounded : public Error {
 public:
  using Error::Error;
};

/// Aggregation inputs disagree on bandwidth L.
class MixedBandwidths : public Error {
 public:
  using Error::Error;
};

/// Aggregation inputs mix upper and lower envelopes.
class MixedSides : public Error {
 public:
  using Error::Error;
};

/// CSV ingestion failure, annotated with the 1-based row number.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t row)
      : Error("row " + std::to_string(row) + ": " + what), row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

/// Fewer than two usable samples.
class TooFewSamples : public Error {
 public:
  using Error::Error;
};

}  // namespace sigenv
