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
 * Minimum-error discrimination of the trine with arbitrary priors.
 *
 * For most priors the optimum is a two-outcome projective measurement that
 * never names the least likely state. A small region near p1 = p2 needs a
 * three-outcome POVM, built here from the operator Gamma = sum_i p_i rho_i pi_i
 * by solving <psi_j|Gamma^{-1}|psi_j> = 1/p_j in the Bloch basis. The sign of
 * a quartic in (p0, p1) separates the two regimes.
 *
 * Functions taking Priors return measurements in the caller frame (labels
 * and operators refer to the caller's state indices). Quantities that only
 * make sense in descending order (the angle theta, the matrix M, the Gamma
 * Bloch coefficients) are reported in the canonical frame.
 */

#pragma once

#include <array>
#include <optional>

#include "trine/measurement.hpp"
#include "trine/qubit.hpp"
#include "trine/trine.hpp"

namespace trine {

/// Tolerance for the Helstrom conditions on dispatched results.
inline constexpr double kHelstromTolerance = 1e-9;
/// |det| below this counts as the boundary and dispatches to two elements.
inline constexpr double kBoundaryTieTolerance = 1e-12;
/// Smaller |eigenvalue| of Gamma - p_j rho_j allowed for a rank-1 operator.
inline constexpr double kRankTolerance = 1e-9;

enum class Strategy { TwoElement, ThreeElement };

const char* to_string(Strategy s);

struct GammaSolution {
  /// Gamma^{-1} = (a*1 + b_x sigma_x + b_y sigma_y) / 2
  double a = 0.0;
  double b_x = 0.0;
  double b_y = 0.0;
  HermitianMatrix2 gamma;
  /// 4a / (a^2 - |b|^2), equal to Tr(gamma)
  double p_corr = 0.0;
};

struct HelstromReport {
  /// max_{i,j} || pi_i (p_i rho_i - p_j rho_j) pi_j ||
  double max_offdiag_residual = 0.0;
  /// min_j lambda_min(sum_i p_i rho_i pi_i - p_j rho_j)
  double min_global_eigenvalue = 0.0;
  /// sum_i p_i Tr(rho_i pi_i)
  double p_success = 0.0;
  bool passes = false;
};

struct OptimalResult {
  Priors priors;
  Strategy strategy = Strategy::TwoElement;
  Measurement measurement;
  double p_correct = 0.0;
  double boundary_determinant = 0.0;
  HelstromReport helstrom;
  /// Two-element angle (canonical frame).
  std::optional<double> theta;
  /// Three-element Gamma (canonical frame).
  std::optional<GammaSolution> gamma;
};

/// P_3el as a formula value plus whether it is a realizable success
/// probability (determinant strictly negative).
struct ThreeElementValue {
  double value = 0.0;
  bool valid = false;
};

/// Output of the three-element construction before any region check. In the
/// region where it is not optimal some weight comes out negative.
struct ThreeElementConstruction {
  GammaSolution gamma;
  /// k_j in canonical order
  std::array<double, 3> weights{};
  /// |phi_j> in canonical order
  std::array<PureState, 3> directions;
  /// Eigenvalue of Gamma - p_j rho_j closest to zero
  std::array<double, 3> null_eigenvalues{};
  Measurement canonical_measurement;
  Measurement measurement;
};

/// theta = atan2(-sqrt(3) p1, 2 p0 + p1), in (-pi/2, 0].
double two_element_angle(const Priors& priors);

/// {|Theta_0><Theta_0|, |Theta_1><Theta_1|}, the first identifying the most
/// probable state. The least probable state gets no element.
Measurement two_element_measurement(const Priors& priors);

double p_correct_two_element(const Priors& priors);

/// M = sum_i p_i rho_i pi_i - p2 rho2 for the two-element measurement
/// (canonical frame).
HermitianMatrix2 boundary_matrix(const Priors& priors);

/// The quartic in (p0, p1) whose sign matches det(M). Positive: two
/// elements are optimal; negative: three.
double boundary_determinant(const Priors& priors);

/// delta_c-(p), or nullopt when the three-element POVM is optimal for every
/// admissible delta at this p. Throws DomainError for p outside [1/3, 1/2].
std::optional<double> critical_delta(double p);

/// Throws DivisionError when a prior is zero.
GammaSolution gamma_three_element(const Priors& priors);

/// Unchecked three-element construction (any strictly positive priors).
ThreeElementConstruction construct_three_element(const Priors& priors);

/// Throws RegionError outside the det < 0 region and RankError when
/// Gamma - p_j rho_j is not rank one.
Measurement three_element_measurement(const Priors& priors);

ThreeElementValue p_correct_three_element(const Priors& priors);

/// Throws VerificationError if the returned measurement fails the Helstrom
/// conditions at kHelstromTolerance.
OptimalResult optimal_measurement(const Priors& priors);

/// Helstrom conditions for `m` read in the caller frame: Identify(i) is pi_i,
/// states the measurement never names have pi_i = 0.
HelstromReport check_helstrom(const Priors& priors, const Measurement& m, double tol = kHelstromTolerance);

}  // namespace trine
