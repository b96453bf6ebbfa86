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

#include "trine/min_error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "trine/errors.hpp"

namespace trine {

namespace {

const double kSqrt3 = std::sqrt(3.0);

Measurement canonical_two_element(const Priors& priors) {
  const double theta = two_element_angle(priors);
  Measurement m;
  m.add(Label::identify(0), pure_state_from_equator_angle(theta).projector());
  m.add(Label::identify(1), pure_state_from_equator_angle(theta + std::numbers::pi).projector());
  return m;
}

HermitianMatrix2 inverse_of(const HermitianMatrix2& m) {
  const double det = m.determinant();
  if (det == 0.0) throw VerificationError("singular operator");
  return HermitianMatrix2(m(1, 1).real(), -m(0, 1), m(0, 0).real()) * (1.0 / det);
}

double rel_scale(double v) { return std::max(1.0, std::abs(v)); }

// Solves sum_j k_j (1, m_jx, m_jy) = (2, 0, 0) by Cramer's rule; the three
// rows are the trace and in-plane Bloch components of k_j |phi_j><phi_j|.
std::array<double, 3> completeness_weights(const std::array<PureState, 3>& dirs) {
  std::array<std::array<double, 3>, 3> a{};
  for (int j = 0; j < 3; ++j) {
    const BlochVector b = dirs[j].bloch();
    a[0][j] = 1.0;
    a[1][j] = b.x;
    a[2][j] = b.y;
  }
  auto det3 = [](const std::array<std::array<double, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const double det = det3(a);
  if (std::abs(det) < 1e-14) throw RankError("POVM directions are linearly dependent");
  std::array<double, 3> k{};
  for (int j = 0; j < 3; ++j) {
    auto aj = a;
    aj[0][j] = 2.0;
    aj[1][j] = 0.0;
    aj[2][j] = 0.0;
    k[j] = det3(aj) / det;
  }
  return k;
}

}  // namespace

const char* to_string(Strategy s) { return s == Strategy::TwoElement ? "TwoElement" : "ThreeElement"; }

// ------------------------------------------------------------ two element

double two_element_angle(const Priors& priors) {
  const double p0 = priors.p0();
  const double p1 = priors.p1();
  if (p0 + p1 <= 0.0) throw DegenerateError("two-element measurement needs p0 + p1 > 0");
  return std::atan2(-kSqrt3 * p1, 2.0 * p0 + p1);
}

Measurement two_element_measurement(const Priors& priors) {
  return to_caller_frame(priors, canonical_two_element(priors));
}

double p_correct_two_element(const Priors& priors) {
  const double p0 = priors.p0();
  const double p1 = priors.p1();
  const double value = 0.5 * (p0 + p1 + std::sqrt(p0 * p0 + p0 * p1 + p1 * p1));
  const double p = priors.p();
  const double d = priors.delta();
  const double alt = p + 0.5 * std::sqrt(3.0 * p * p + d * d);
  if (!(std::abs(value - alt) <= 1e-12)) throw VerificationError("two-element success forms disagree");
  return value;
}

HermitianMatrix2 boundary_matrix(const Priors& priors) {
  const Measurement m = canonical_two_element(priors);
  Matrix2 gamma;
  for (int k = 0; k < 2; ++k) {
    gamma += (trine_projector(k) * m.identifying(k)) * priors.canonical(k);
  }
  return HermitianMatrix2(gamma, 1e-10) - trine_projector(2) * priors.p2();
}

double boundary_determinant(const Priors& priors) {
  const double a = priors.p0();
  const double b = priors.p1();
  const double a2 = a * a;
  const double b2 = b * b;
  return -3.0 * a2 * a2 - 3.0 * b2 * b2 - 10.0 * a2 * a * b - 10.0 * a * b2 * b + 6.0 * a2 * a + 6.0 * b2 * b -
         13.0 * a2 * b2 + 12.0 * a2 * b + 12.0 * a * b2 - 3.0 * a2 - 3.0 * b2 - 2.0 * a * b;
}

std::optional<double> critical_delta(double p) {
  if (!std::isfinite(p) || p < 1.0 / 3.0 - kPriorTolerance || p > 0.5 + kPriorTolerance) {
    throw DomainError("critical_delta needs p in [1/3, 1/2] (got " + std::to_string(p) + ")");
  }
  const double p2 = p * p;
  const double inner = std::max(0.0, 1.0 - 6.0 * p + 16.0 * p2 - 24.0 * p2 * p + 16.0 * p2 * p2);
  const double radicand = 2.0 - 6.0 * p + 5.0 * p2 - 2.0 * std::sqrt(inner);
  if (radicand < 0.0) return std::nullopt;
  return std::sqrt(radicand);
}

// ---------------------------------------------------------- three element

GammaSolution gamma_three_element(const Priors& priors) {
  if (!priors.all_positive()) throw DivisionError("three-element construction needs every prior > 0");
  const double i0 = 1.0 / priors.p0();
  const double i1 = 1.0 / priors.p1();
  const double i2 = 1.0 / priors.p2();

  GammaSolution g;
  g.a = (2.0 / 3.0) * (i0 + i1 + i2);
  g.b_x = (2.0 / 3.0) * (2.0 * i0 - i1 - i2);
  g.b_y = (2.0 / kSqrt3) * (i1 - i2);
  const HermitianMatrix2 gamma_inv = HermitianMatrix2::from_bloch(g.a, {g.b_x, g.b_y, 0.0});
  g.gamma = inverse_of(gamma_inv);
  g.p_corr = 4.0 * g.a / (g.a * g.a - g.b_x * g.b_x - g.b_y * g.b_y);

  const auto states = trine_states();
  for (int k = 0; k < kNumStates; ++k) {
    const double lhs = gamma_inv.expectation(states[k]);
    const double rhs = 1.0 / priors.canonical(k);
    if (!(std::abs(lhs - rhs) <= 1e-10 * rhs)) {
      throw VerificationError("<psi_j|Gamma^-1|psi_j> != 1/p_j for j = " + std::to_string(k));
    }
  }
  if (!(std::abs(g.p_corr - g.gamma.trace()) <= 1e-10 * rel_scale(g.p_corr))) {
    throw VerificationError("Tr(Gamma) disagrees with 4a/(a^2 - |b|^2)");
  }
  return g;
}

ThreeElementConstruction construct_three_element(const Priors& priors) {
  ThreeElementConstruction out;
  out.gamma = gamma_three_element(priors);

  for (int k = 0; k < kNumStates; ++k) {
    const HermitianMatrix2 n = out.gamma.gamma - trine_projector(k) * priors.canonical(k);
    const EigenPair2 eig = eigensystem(n);
    // Gamma - p_k rho_k = c_k |phi_k^perp><phi_k^perp|: |phi_k> spans the
    // null space, whichever sign c_k has.
    const bool lower_is_null = std::abs(eig.lower) <= std::abs(eig.upper);
    const double null_value = lower_is_null ? eig.lower : eig.upper;
    const double other_value = lower_is_null ? eig.upper : eig.lower;
    if (!(std::abs(null_value) <= kRankTolerance) || !(std::abs(other_value) > kRankTolerance)) {
      throw RankError("Gamma - p_j rho_j is not rank one for j = " + std::to_string(k) +
                      " (eigenvalues " + std::to_string(eig.lower) + ", " + std::to_string(eig.upper) + ")");
    }
    out.null_eigenvalues[k] = null_value;
    out.directions[k] = lower_is_null ? eig.lower_vector : eig.upper_vector;
  }

  out.weights = completeness_weights(out.directions);
  HermitianMatrix2 sum = HermitianMatrix2::zero();
  for (int k = 0; k < kNumStates; ++k) {
    const HermitianMatrix2 element = out.directions[k].projector() * out.weights[k];
    sum += element;
    out.canonical_measurement.add(Label::identify(k), element);
  }
  // Residual relative to the weight scale: outside the valid region the
  // directions can be nearly dependent and the weights large.
  const double scale = std::max({1.0, std::abs(out.weights[0]), std::abs(out.weights[1]), std::abs(out.weights[2])});
  if (!(sum.matrix().max_abs_diff(Matrix2::identity()) < 1e-10 * scale)) {
    throw VerificationError("three-element weights do not resolve the identity");
  }
  out.measurement = to_caller_frame(priors, out.canonical_measurement);
  return out;
}

Measurement three_element_measurement(const Priors& priors) {
  if (!priors.all_positive()) throw DivisionError("three-element construction needs every prior > 0");
  const double det = boundary_determinant(priors);
  if (det >= -kBoundaryTieTolerance) {
    throw RegionError("three-element POVM is not valid where det(M) >= 0 (det = " + std::to_string(det) + ")");
  }
  const ThreeElementConstruction c = construct_three_element(priors);
  for (double k : c.weights) {
    if (k < -kPsdTolerance) throw RegionError("three-element construction produced a negative weight");
  }
  return c.measurement;
}

ThreeElementValue p_correct_three_element(const Priors& priors) {
  if (!priors.all_positive()) throw DivisionError("P_3el needs every prior > 0");
  const double p0 = priors.p0();
  const double p1 = priors.p1();
  const double p2 = priors.p2();
  const double inner = p0 * p1 / p2 + p0 * p2 / p1 + p1 * p2 / p0;
  const double value = 2.0 * (p0 * p1 + p0 * p2 + p1 * p2) / (2.0 - inner);

  const double p = priors.p();
  const double d = priors.delta();
  const double p_2 = p * p;
  const double d_2 = d * d;
  const std::array<double, 6> den_terms{9.0 * p_2 * p_2, -4.0 * p_2 * p, 6.0 * p_2 * d_2,
                                        -12.0 * p * d_2, 4.0 * d_2,      d_2 * d_2};
  double den = 0.0;
  double den_abs = 0.0;
  for (double t : den_terms) {
    den += t;
    den_abs += std::abs(t);
  }
  const double alt = 2.0 * (1.0 - 2.0 * p) * (p_2 - d_2) * (3.0 * p_2 + d_2 - 2.0 * p) / den;

  // Both denominators cancel near p1 = p2 -> 0; allow for the rounding that
  // cancellation amplifies.
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  const double amplification = den_abs / std::abs(den) + (2.0 + inner) / std::abs(2.0 - inner);
  const double tol = (1e-10 + 64.0 * kEps * amplification) * rel_scale(value);
  if (!(std::abs(value - alt) <= tol)) {
    throw VerificationError("three-element success forms disagree");
  }
  return {value, boundary_determinant(priors) < -kBoundaryTieTolerance};
}

// --------------------------------------------------------------- dispatch

OptimalResult optimal_measurement(const Priors& priors) {
  OptimalResult out;
  out.priors = priors;
  out.boundary_determinant = boundary_determinant(priors);

  if (priors.p2() == 0.0 || out.boundary_determinant >= -kBoundaryTieTolerance) {
    out.strategy = Strategy::TwoElement;
    out.theta = two_element_angle(priors);
    out.measurement = two_element_measurement(priors);
    out.p_correct = p_correct_two_element(priors);
  } else {
    out.strategy = Strategy::ThreeElement;
    out.measurement = three_element_measurement(priors);
    out.gamma = gamma_three_element(priors);
    out.p_correct = p_correct_three_element(priors).value;
  }

  const PovmValidity validity = out.measurement.validity();
  if (!validity.is_valid) throw VerificationError("dispatched measurement is not a valid POVM");
  out.helstrom = check_helstrom(priors, out.measurement);
  if (!out.helstrom.passes) {
    throw VerificationError("dispatched measurement fails the Helstrom conditions (residual " +
                            std::to_string(out.helstrom.max_offdiag_residual) + ", eigenvalue " +
                            std::to_string(out.helstrom.min_global_eigenvalue) + ")");
  }
  if (!(std::abs(out.helstrom.p_success - out.p_correct) <= kHelstromTolerance)) {
    throw VerificationError("closed-form success probability disagrees with the Born rule");
  }
  return out;
}

HelstromReport check_helstrom(const Priors& priors, const Measurement& m, double tol) {
  std::array<HermitianMatrix2, 3> weighted{};
  std::array<HermitianMatrix2, 3> pis{};
  for (int i = 0; i < kNumStates; ++i) {
    weighted[i] = trine_projector(i) * priors.caller(i);
    pis[i] = m.identifying(i);
  }

  HelstromReport r;
  Matrix2 gamma;
  for (int i = 0; i < kNumStates; ++i) {
    gamma += weighted[i] * pis[i];
    r.p_success += weighted[i].trace_product(pis[i]);
  }
  for (int i = 0; i < kNumStates; ++i) {
    for (int j = 0; j < kNumStates; ++j) {
      const Matrix2 term = pis[i].matrix() * (weighted[i] - weighted[j]).matrix() * pis[j].matrix();
      r.max_offdiag_residual = std::max(r.max_offdiag_residual, term.operator_norm());
    }
  }
  const HermitianMatrix2 gamma_h = HermitianMatrix2::hermitian_part(gamma);
  r.min_global_eigenvalue = (gamma_h - weighted[0]).min_eigenvalue();
  for (int j = 1; j < kNumStates; ++j) {
    r.min_global_eigenvalue = std::min(r.min_global_eigenvalue, (gamma_h - weighted[j]).min_eigenvalue());
  }
  r.passes = r.max_offdiag_residual <= tol && r.min_global_eigenvalue >= -tol;
  return r;
}

}  // namespace trine
