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
 * Maximum-confidence measurement for the trine.
 *
 * Outcome i is taken proportional to rho^{-1} rho_i rho^{-1}, where rho is the
 * prior-weighted average state. The confidence P(rho_i | pi_i) does not
 * depend on that proportionality constant. This module uses the largest
 * common scale that keeps the inconclusive element 1 - sum_i pi_i positive,
 * which makes the inconclusive rate as small as that family allows.
 *
 * All indices are caller indices.
 */

#pragma once

#include <array>
#include <optional>

#include "trine/measurement.hpp"
#include "trine/trine.hpp"

namespace trine {

/// P(pi_i) at or below this makes the confidence 0/0.
inline constexpr double kZeroOutcomeThreshold = 1e-14;

struct ConfidenceReport {
  std::array<double, 3> per_state_confidence{};
  /// Probability of the inconclusive outcome under the maximal common scale.
  double inconclusive_probability = 0.0;
  Measurement measurement;
};

/// Unnormalized element rho^{-1} rho_i rho^{-1}.
HermitianMatrix2 mc_unnormalized_element(const Priors& priors, int state);

/// Throws PureStateError when the average state is pure.
Measurement mc_povm(const Priors& priors);

/// p_i Tr(rho_i E) / sum_j p_j Tr(rho_j E): confidence that state i was sent
/// given a click on E. Throws ZeroOutcomeError when Tr(rho E) is negligible.
double confidence(const Priors& priors, const HermitianMatrix2& element, int state);

/// Confidence of an Identify(i) outcome of `m`.
double confidence(const Priors& priors, const Measurement& m, const Label& outcome);

/// (1 + prod_{j!=i} p_j / (p_i sum_{j!=i} p_j))^{-1}, with the limits 0 when
/// p_i = 0 and 1 when another prior is zero. Throws UndefinedError at p_i = 1.
double mc_confidence_closed_form(const Priors& priors, int state);

ConfidenceReport confidence_report(const Priors& priors);

/// Confidence of each outcome of the minimum-error measurement; nullopt for
/// states it never names (or names with zero probability).
std::array<std::optional<double>, 3> min_error_confidence(const Priors& priors);

}  // namespace trine
