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

#include "trine/max_confidence.hpp"

#include <cmath>
#include <string>

#include "trine/errors.hpp"
#include "trine/min_error.hpp"

namespace trine {

namespace {

void check_state_index(int state) {
  if (state < 0 || state >= kNumStates) throw InvalidInputError("state index must be 0, 1 or 2");
}

}  // namespace

HermitianMatrix2 mc_unnormalized_element(const Priors& priors, int state) {
  check_state_index(state);
  const HermitianMatrix2 inv = invert_qubit_density(priors.average_state());
  const PureState psi = trine_states()[state];
  // rho^{-1} |psi><psi| rho^{-1} = |v><v| with v = rho^{-1}|psi>
  const Complex v0 = inv(0, 0) * psi[0] + inv(0, 1) * psi[1];
  const Complex v1 = inv(1, 0) * psi[0] + inv(1, 1) * psi[1];
  return {std::norm(v0), v0 * std::conj(v1), std::norm(v1)};
}

Measurement mc_povm(const Priors& priors) {
  std::array<HermitianMatrix2, 3> raw;
  HermitianMatrix2 sum = HermitianMatrix2::zero();
  for (int i = 0; i < kNumStates; ++i) {
    raw[i] = mc_unnormalized_element(priors, i);
    sum += raw[i];
  }
  const double scale = 1.0 / sum.max_eigenvalue();

  Measurement m;
  HermitianMatrix2 rest = HermitianMatrix2::identity();
  for (int i = 0; i < kNumStates; ++i) {
    const HermitianMatrix2 element = raw[i] * scale;
    rest -= element;
    m.add(Label::identify(i), element);
  }
  if (rest.max_eigenvalue() > kPsdTolerance) m.add(Label::inconclusive(), rest);
  return m;
}

double confidence(const Priors& priors, const HermitianMatrix2& element, int state) {
  check_state_index(state);
  double total = 0.0;
  double joint = 0.0;
  for (int j = 0; j < kNumStates; ++j) {
    const double pj = priors.caller(j) * trine_projector(j).trace_product(element);
    total += pj;
    if (j == state) joint = pj;
  }
  if (!(total > kZeroOutcomeThreshold)) {
    throw ZeroOutcomeError("outcome has zero probability (P = " + std::to_string(total) + ")");
  }
  return joint / total;
}

double confidence(const Priors& priors, const Measurement& m, const Label& outcome) {
  if (outcome.kind != OutcomeKind::Identify) {
    throw InvalidInputError("confidence is defined for outcomes that identify a state");
  }
  const HermitianMatrix2* element = m.find(outcome);
  if (element == nullptr) throw InvalidInputError("measurement has no outcome " + outcome.to_string());
  return confidence(priors, *element, outcome.state);
}

double mc_confidence_closed_form(const Priors& priors, int state) {
  check_state_index(state);
  const double pi = priors.caller(state);
  if (pi >= 1.0) throw UndefinedError("confidence is undefined when the average state is pure");
  if (pi == 0.0) return 0.0;
  const double a = priors.caller((state + 1) % 3);
  const double b = priors.caller((state + 2) % 3);
  if (a == 0.0 || b == 0.0) return 1.0;
  return 1.0 / (1.0 + (a * b) / (pi * (a + b)));
}

ConfidenceReport confidence_report(const Priors& priors) {
  ConfidenceReport r;
  r.measurement = mc_povm(priors);
  for (int i = 0; i < kNumStates; ++i) {
    const double bayes = confidence(priors, r.measurement.identifying(i), i);
    const double closed = mc_confidence_closed_form(priors, i);
    if (!(std::abs(bayes - closed) <= 1e-10)) {
      throw VerificationError("Bayes confidence disagrees with the closed form for state " + std::to_string(i));
    }
    r.per_state_confidence[i] = bayes;
  }
  if (const auto* rest = r.measurement.find(Label::inconclusive())) {
    r.inconclusive_probability = priors.average_state().trace_product(*rest);
  }
  return r;
}

std::array<std::optional<double>, 3> min_error_confidence(const Priors& priors) {
  const OptimalResult opt = optimal_measurement(priors);
  std::array<std::optional<double>, 3> out;
  for (int i = 0; i < kNumStates; ++i) {
    const HermitianMatrix2* element = opt.measurement.find(Label::identify(i));
    if (element == nullptr) continue;
    try {
      out[i] = confidence(priors, *element, i);
    } catch (const ZeroOutcomeError&) {
    }
  }
  return out;
}

}  // namespace trine
