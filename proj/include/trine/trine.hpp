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

/**
 * @file
 * The trine ensemble: three equator states at azimuths 0, 2pi/3, 4pi/3,
 * their orthogonal complements, and prior probabilities.
 *
 * Two index spaces appear throughout. The *caller* index i names the state
 * |psi_i> at azimuth 2 pi i / 3 and carries the prior the caller supplied for
 * it. The *canonical* index k orders priors descending (p0 >= p1 >= p2),
 * which is the frame the closed forms are written in. Because the trine is
 * invariant under every permutation of its states (rotations by 2pi/3 and a
 * reflection), a canonical-frame measurement is carried to the caller frame
 * by the matching symmetry operation, not only by relabeling.
 */

#pragma once

#include <array>

#include "trine/measurement.hpp"
#include "trine/qubit.hpp"

namespace trine {

inline constexpr int kNumStates = 3;
inline constexpr double kPriorSumTolerance = 1e-9;
inline constexpr double kPriorTolerance = 1e-12;

std::array<PureState, 3> trine_states();
/// |psi_j^perp>, the equator point opposite |psi_j>.
std::array<PureState, 3> trine_perps();
/// |psi_j><psi_j|
HermitianMatrix2 trine_projector(int j);

/// Unitary or antiunitary map of the trine onto itself realizing a
/// permutation k -> perm[k] of the states.
class TrineSymmetry {
 public:
  TrineSymmetry() = default;
  /// Every permutation of {0,1,2} is k -> sign*k + shift (mod 3).
  explicit TrineSymmetry(const std::array<int, 3>& perm);

  [[nodiscard]] int map_index(int k) const;
  /// Image of an operator: U A U^dagger, with A conjugated first for the
  /// reflection.
  [[nodiscard]] HermitianMatrix2 apply(const HermitianMatrix2& op) const;
  [[nodiscard]] bool is_reflection() const { return reflect_; }

 private:
  bool reflect_ = false;
  int shift_ = 0;
};

/// Prior triple in canonical (descending) order plus the permutation back to
/// the caller's indices: canonical index k belongs to caller index
/// permutation()[k].
class Priors {
 public:
  Priors() = default;

  [[nodiscard]] double canonical(int k) const { return sorted_[k]; }
  [[nodiscard]] double p0() const { return sorted_[0]; }
  [[nodiscard]] double p1() const { return sorted_[1]; }
  [[nodiscard]] double p2() const { return sorted_[2]; }
  /// (p0 + p1) / 2
  [[nodiscard]] double p() const { return 0.5 * (sorted_[0] + sorted_[1]); }
  /// (p0 - p1) / 2
  [[nodiscard]] double delta() const { return 0.5 * (sorted_[0] - sorted_[1]); }
  [[nodiscard]] const std::array<int, 3>& permutation() const { return perm_; }
  [[nodiscard]] const std::array<double, 3>& sorted() const { return sorted_; }
  /// Prior of caller index i.
  [[nodiscard]] double caller(int i) const { return caller_[i]; }
  [[nodiscard]] const std::array<double, 3>& caller_order() const { return caller_; }
  [[nodiscard]] TrineSymmetry to_caller() const { return TrineSymmetry(perm_); }
  [[nodiscard]] bool all_positive() const { return sorted_[2] > 0.0; }
  /// sum_i p_i |psi_i><psi_i|
  [[nodiscard]] HermitianMatrix2 average_state() const;

  /// Rebuilds priors from canonical values and their permutation, e.g. when
  /// reading a serialized report. Throws DomainError if inconsistent.
  static Priors from_canonical(const std::array<double, 3>& sorted, const std::array<int, 3>& permutation);

  friend Priors canonicalize_priors(double q0, double q1, double q2);
  friend Priors priors_from_p_delta(double p, double delta);

 private:
  std::array<double, 3> sorted_{1.0 / 3, 1.0 / 3, 1.0 / 3};
  std::array<double, 3> caller_{1.0 / 3, 1.0 / 3, 1.0 / 3};
  std::array<int, 3> perm_{0, 1, 2};
};

/// Sorts descending (stable among ties). Sums within kPriorSumTolerance of
/// one are renormalized; negative entries or larger deviations throw
/// DomainError.
Priors canonicalize_priors(double q0, double q1, double q2);

/// p0 = p + delta, p1 = p - delta, p2 = 1 - 2p. Throws DomainError outside
/// 1/3 <= p <= 1/2, 0 <= delta <= min(p, 3p - 1).
Priors priors_from_p_delta(double p, double delta);

/// Upper end of the admissible delta range at p: min(p, 3p - 1).
double max_delta(double p);

struct TrineEnsemble {
  std::array<PureState, 3> states;
  std::array<PureState, 3> perps;
  Priors priors;
};

TrineEnsemble make_ensemble(const Priors& priors);

/// {(2/3)|psi_j><psi_j|}, labeled Identify(j).
Measurement trine_measurement();

/// {(2/3)|psi_j^perp><psi_j^perp|}, labeled Eliminate(j).
Measurement antitrine_measurement();

/// Carries a canonical-frame measurement (labels are canonical indices) to
/// the caller frame.
Measurement to_caller_frame(const Priors& priors, const Measurement& canonical);

}  // namespace trine
