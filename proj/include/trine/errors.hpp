// Copyright 2026 The Trine Discrimination Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace trine {

/// Root of every error raised by the library.
class TrineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed operator, state or measurement (non-Hermitian, bad trace, not PSD).
class InvalidInputError : public TrineError {
 public:
  using TrineError::TrineError;
};

/// Parameters outside the admissible prior triangle.
class DomainError : public TrineError {
 public:
  using TrineError::TrineError;
};

/// The ensemble average state is pure, so it has no inverse.
class PureStateError : public TrineError {
 public:
  using TrineError::TrineError;
};

class DegenerateError : public TrineError {
 public:
  using TrineError::TrineError;
};

/// A closed form needs 1/p for a prior that is zero.
class DivisionError : public TrineError {
 public:
  using TrineError::TrineError;
};

/// Three-element construction requested where the determinant test says it
/// does not yield a valid POVM.
class RegionError : public TrineError {
 public:
  using TrineError::TrineError;
};

/// Gamma - p_j rho_j is not numerically rank one.
class RankError : public TrineError {
 public:
  using TrineError::TrineError;
};

/// An internal self-check (Helstrom conditions, dual-route agreement) failed.
class VerificationError : public TrineError {
 public:
  using TrineError::TrineError;
};

/// Outcome has (numerically) zero probability, so its confidence is 0/0.
class ZeroOutcomeError : public TrineError {
 public:
  using TrineError::TrineError;
};

class UndefinedError : public TrineError {
 public:
  using TrineError::TrineError;
};

/// Too few Monte Carlo shots landed on the conditioning outcome.
class InsufficientDataError : public TrineError {
 public:
  using TrineError::TrineError;
};

}  // namespace trine
