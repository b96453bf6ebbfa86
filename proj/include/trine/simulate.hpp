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
 * Monte Carlo check of success probabilities and confidences.
 *
 * Random streams: shots are cut into fixed partitions of kShotsPerPartition.
 * Partition j draws from std::mt19937_64 seeded with
 * splitmix64(seed ^ splitmix64(j)), where splitmix64 is the finalizer of
 * Steele, Lea and Flood's SplitMix64. Uniform doubles are (x >> 11) * 2^-53.
 * Each shot consumes two draws: one picks the state by inverse CDF over the
 * priors, one picks the outcome by inverse CDF over Tr(rho_i pi_j) in
 * measurement order. Partition counts are summed, so the result depends only
 * on (priors, measurement, shots, seed) and not on the thread count.
 */

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "trine/measurement.hpp"
#include "trine/trine.hpp"

namespace trine {

inline constexpr const char* kRngAlgorithm = "mt19937_64+splitmix64-partitions";
inline constexpr std::uint64_t kShotsPerPartition = 1ULL << 16;
inline constexpr std::uint64_t kMinConditionedShots = 100;

struct EmpiricalResult {
  /// Trials behind `estimate`: all shots for success, conditioned shots for
  /// confidence.
  std::uint64_t shots = 0;
  std::uint64_t successes = 0;
  double estimate = 0.0;
  double standard_error = 0.0;
  /// Outcome label -> count over all `total_shots`.
  std::map<std::string, std::uint64_t> per_outcome_counts;
  std::uint64_t seed = 0;
  std::uint64_t total_shots = 0;
  std::string rng_algorithm = kRngAlgorithm;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t partition_seed(std::uint64_t seed, std::uint64_t partition);

/// Fraction of shots whose outcome identifies the prepared state. Throws
/// InvalidInputError for an invalid POVM or zero shots. `threads` = 0 uses
/// the hardware concurrency.
EmpiricalResult estimate_success(const Priors& priors, const Measurement& m, std::uint64_t shots,
                                 std::uint64_t seed, unsigned threads = 0);

/// Among shots that produced `outcome`, the fraction where the prepared
/// state is the one it identifies. Throws InsufficientDataError when fewer
/// than kMinConditionedShots land on the outcome.
EmpiricalResult estimate_confidence(const Priors& priors, const Measurement& m, const Label& outcome,
                                    std::uint64_t shots, std::uint64_t seed, unsigned threads = 0);

}  // namespace trine
