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
 * Brute-force reference optimizer. It searches parameterized families of
 * equatorial measurements using only the Born rule, so its answers are
 * independent of every closed form in min_error and max_confidence.
 *
 * The search is a deterministic grid scan followed by pattern-search
 * refinement: at each level all 3^d - 1 neighbours at the current step are
 * tried, the incumbent moves while it strictly improves, then the step halves.
 * Ties keep the lexicographically first parameter vector of the scan.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "trine/measurement.hpp"
#include "trine/trine.hpp"

namespace trine {

inline constexpr int kOracleMinResolution = 16;
inline constexpr int kOracleDefaultResolution = 360;
inline constexpr int kOracleDefaultRefinements = 20;

struct OracleResult {
  double best_value = 0.0;
  /// One angle (projective pair theta, theta + pi) or three outcome angles
  /// whose weights follow from completeness. Radians.
  std::vector<double> best_parameters;
  int grid_resolution = 0;
  int refinement_depth = 0;
};

/// Best success probability over projective equatorial measurements and
/// three-outcome equatorial POVMs, each outcome assigned to the state that
/// maximizes its contribution. Caller frame.
OracleResult brute_force_min_error(const Priors& priors, int resolution = kOracleDefaultResolution,
                                   int refinements = kOracleDefaultRefinements);

/// Best confidence for `state` over single rank-1 equatorial elements.
/// Throws PureStateError when the average state is pure.
OracleResult brute_force_max_confidence(const Priors& priors, int state, int resolution = kOracleDefaultResolution,
                                        int refinements = kOracleDefaultRefinements);

/// POVM described by a min-error oracle result, with the same label
/// assignment the oracle scored it with. Outcomes assigned to the same state
/// are merged.
Measurement oracle_measurement(const Priors& priors, const OracleResult& result);

/// Best success probability among `samples` random rank-1 three-outcome
/// POVMs lying in randomly tilted great circles (not only the equator).
double off_equator_spot_check(const Priors& priors, int samples, std::uint64_t seed);

}  // namespace trine
