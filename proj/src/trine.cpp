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

#include "trine/trine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "trine/errors.hpp"

namespace trine {

namespace {

constexpr double kTwoPiOverThree = 2.0 * std::numbers::pi / 3.0;

int mod3(int k) { return ((k % 3) + 3) % 3; }

}  // namespace

std::array<PureState, 3> trine_states() {
  return {pure_state_from_equator_angle(0.0), pure_state_from_equator_angle(kTwoPiOverThree),
          pure_state_from_equator_angle(2.0 * kTwoPiOverThree)};
}

std::array<PureState, 3> trine_perps() {
  return {pure_state_from_equator_angle(std::numbers::pi),
          pure_state_from_equator_angle(kTwoPiOverThree + std::numbers::pi),
          pure_state_from_equator_angle(2.0 * kTwoPiOverThree + std::numbers::pi)};
}

HermitianMatrix2 trine_projector(int j) { return trine_states().at(static_cast<std::size_t>(j)).projector(); }

// ---------------------------------------------------------- TrineSymmetry

TrineSymmetry::TrineSymmetry(const std::array<int, 3>& perm) : shift_(perm[0]) {
  std::array<int, 3> seen{};
  for (int v : perm) {
    if (v < 0 || v > 2 || seen[v]++ != 0) throw InvalidInputError("not a permutation of {0,1,2}");
  }
  reflect_ = mod3(perm[1] - shift_) != 1;
}

int TrineSymmetry::map_index(int k) const { return reflect_ ? mod3(shift_ - k) : mod3(k + shift_); }

HermitianMatrix2 TrineSymmetry::apply(const HermitianMatrix2& op) const {
  const HermitianMatrix2 base = reflect_ ? op.conjugate() : op;
  const Complex phase = std::polar(1.0, -kTwoPiOverThree * shift_);
  return {base(0, 0).real(), base(0, 1) * phase, base(1, 1).real()};
}

// ----------------------------------------------------------------- Priors

HermitianMatrix2 Priors::average_state() const {
  HermitianMatrix2 rho = HermitianMatrix2::zero();
  for (int i = 0; i < kNumStates; ++i) rho += trine_projector(i) * caller_[i];
  return rho;
}

Priors Priors::from_canonical(const std::array<double, 3>& sorted, const std::array<int, 3>& permutation) {
  (void)TrineSymmetry(permutation);
  if (!(sorted[0] >= sorted[1] && sorted[1] >= sorted[2] && sorted[2] >= 0.0)) {
    throw DomainError("canonical priors must be nonnegative and descending");
  }
  if (!(std::abs(sorted[0] + sorted[1] + sorted[2] - 1.0) <= kPriorSumTolerance)) {
    throw DomainError("priors must sum to 1");
  }
  Priors out;
  out.sorted_ = sorted;
  out.perm_ = permutation;
  for (int k = 0; k < kNumStates; ++k) out.caller_[permutation[k]] = sorted[k];
  return out;
}

Priors canonicalize_priors(double q0, double q1, double q2) {
  const std::array<double, 3> raw{q0, q1, q2};
  for (double q : raw) {
    if (!std::isfinite(q) || q < 0.0) throw DomainError("priors must be finite and nonnegative");
  }
  const double sum = q0 + q1 + q2;
  if (!(std::abs(sum - 1.0) <= kPriorSumTolerance)) {
    throw DomainError("priors must sum to 1 (sum = " + std::to_string(sum) + ")");
  }
  Priors out;
  for (int i = 0; i < kNumStates; ++i) out.caller_[i] = raw[i] / sum;
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return out.caller_[a] > out.caller_[b]; });
  for (int k = 0; k < kNumStates; ++k) {
    out.perm_[k] = order[k];
    out.sorted_[k] = out.caller_[order[k]];
  }
  return out;
}

double max_delta(double p) { return std::min(p, 3.0 * p - 1.0); }

Priors priors_from_p_delta(double p, double delta) {
  if (!std::isfinite(p) || !std::isfinite(delta)) throw DomainError("p and delta must be finite");
  if (p < 1.0 / 3.0 - kPriorTolerance || p > 0.5 + kPriorTolerance) {
    throw DomainError("p must lie in [1/3, 1/2] (got " + std::to_string(p) + ")");
  }
  if (delta < -kPriorTolerance) throw DomainError("delta must be nonnegative");
  if (delta > 3.0 * p - 1.0 + kPriorTolerance) {
    throw DomainError("delta exceeds 3p - 1, which would make p1 < p2");
  }
  if (delta > p + kPriorTolerance) throw DomainError("delta exceeds p, which would make p1 negative");
  p = std::clamp(p, 1.0 / 3.0, 0.5);
  delta = std::clamp(delta, 0.0, std::max(0.0, max_delta(p)));

  Priors out;
  const double p0 = p + delta;
  const double p2 = std::max(0.0, 1.0 - 2.0 * p);
  const double p1 = std::max(p2, p - delta);
  out.sorted_ = {p0, p1, p2};
  out.caller_ = out.sorted_;
  return out;
}

TrineEnsemble make_ensemble(const Priors& priors) { return {trine_states(), trine_perps(), priors}; }

Measurement trine_measurement() {
  Measurement m;
  const auto states = trine_states();
  for (int j = 0; j < kNumStates; ++j) m.add(Label::identify(j), states[j].projector() * (2.0 / 3.0));
  return m;
}

Measurement antitrine_measurement() {
  Measurement m;
  const auto perps = trine_perps();
  for (int j = 0; j < kNumStates; ++j) m.add(Label::eliminate(j), perps[j].projector() * (2.0 / 3.0));
  return m;
}

Measurement to_caller_frame(const Priors& priors, const Measurement& canonical) {
  const TrineSymmetry sym = priors.to_caller();
  std::vector<LabeledElement> mapped;
  for (const auto& e : canonical.elements()) {
    Label l = e.label;
    if (l.kind != OutcomeKind::Inconclusive) l.state = sym.map_index(l.state);
    mapped.push_back({l, sym.apply(e.element)});
  }
  // Report outcomes in caller order.
  std::stable_sort(mapped.begin(), mapped.end(), [](const LabeledElement& a, const LabeledElement& b) {
    return std::pair(static_cast<int>(a.label.kind), a.label.state) <
           std::pair(static_cast<int>(b.label.kind), b.label.state);
  });
  Measurement out;
  for (const auto& e : mapped) out.add(e.label, e.element);
  return out;
}

}  // namespace trine
