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

#include "trine/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include "trine/errors.hpp"

namespace trine {

namespace {

using Params = std::vector<double>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Scores POVM elements against the weighted trine states.
class Scorer {
 public:
  explicit Scorer(const Priors& priors) {
    for (int i = 0; i < kNumStates; ++i) weighted_[i] = trine_projector(i) * priors.caller(i);
  }

  [[nodiscard]] double joint(int state, const HermitianMatrix2& element) const {
    return weighted_[state].trace_product(element);
  }

  // Best label for an element and its contribution to the success probability.
  [[nodiscard]] std::pair<int, double> best(const HermitianMatrix2& element) const {
    int label = 0;
    double value = joint(0, element);
    for (int i = 1; i < kNumStates; ++i) {
      const double v = joint(i, element);
      if (v > value) {
        value = v;
        label = i;
      }
    }
    return {label, value};
  }

 private:
  std::array<HermitianMatrix2, 3> weighted_;
};

HermitianMatrix2 equator_projector(double theta) { return pure_state_from_equator_angle(theta).projector(); }

// Weights k_j >= 0 with sum_j k_j |theta_j><theta_j| = 1, or nullopt when the
// directions cannot resolve the identity with nonnegative weights.
std::optional<std::array<double, 3>> completeness_weights(const std::array<double, 3>& c,
                                                          const std::array<double, 3>& s) {
  const std::array<double, 3> cof{c[1] * s[2] - c[2] * s[1], c[2] * s[0] - c[0] * s[2], c[0] * s[1] - c[1] * s[0]};
  // det is twice the triangle area; nearly collinear triples give weights
  // dominated by rounding error.
  const double det = cof[0] + cof[1] + cof[2];
  if (std::abs(det) < 1e-3) return std::nullopt;
  std::array<double, 3> k{};
  for (int j = 0; j < 3; ++j) {
    k[j] = 2.0 * cof[j] / det;
    if (k[j] < 0.0) return std::nullopt;
  }
  return k;
}

std::optional<std::array<double, 3>> completeness_weights(const Params& angles) {
  std::array<double, 3> c{};
  std::array<double, 3> s{};
  for (int j = 0; j < 3; ++j) {
    c[j] = std::cos(angles[j]);
    s[j] = std::sin(angles[j]);
  }
  return completeness_weights(c, s);
}

// Pattern search around x. Each level halves the step first, then moves to
// the best strictly improving neighbour until none improves.
template <typename Objective>
void refine(Params& x, double& fx, double step, int depth, const Objective& f) {
  const std::size_t dim = x.size();
  std::size_t combos = 1;
  for (std::size_t d = 0; d < dim; ++d) combos *= 3;
  for (int level = 0; level < depth; ++level) {
    step *= 0.5;
    for (int moves = 0; moves < 1000; ++moves) {
      Params best_x = x;
      double best_f = fx;
      for (std::size_t code = 0; code < combos; ++code) {
        Params cand = x;
        std::size_t rest = code;
        bool moved = false;
        for (std::size_t d = 0; d < dim; ++d) {
          const int offset = static_cast<int>(rest % 3) - 1;
          rest /= 3;
          cand[d] += offset * step;
          moved = moved || offset != 0;
        }
        if (!moved) continue;
        if (const auto v = f(cand); v && *v > best_f) {
          best_f = *v;
          best_x = cand;
        }
      }
      if (!(best_f > fx)) break;
      x = best_x;
      fx = best_f;
    }
  }
}

void check_resolution(int resolution, int refinements) {
  if (resolution < kOracleMinResolution) throw InvalidInputError("oracle resolution must be at least 16");
  if (refinements < 0) throw InvalidInputError("refinement depth must be nonnegative");
}

}  // namespace

OracleResult brute_force_min_error(const Priors& priors, int resolution, int refinements) {
  check_resolution(resolution, refinements);
  const Scorer scorer(priors);
  const double step = kTwoPi / resolution;

  // Family (a): projective pair {theta, theta + pi}.
  auto projective = [&](const Params& x) -> std::optional<double> {
    return scorer.best(equator_projector(x[0])).second + scorer.best(equator_projector(x[0] + std::numbers::pi)).second;
  };

  // Family (b): three rank-1 outcomes with completeness-solved weights.
  auto three_outcome = [&](const Params& x) -> std::optional<double> {
    const auto k = completeness_weights(x);
    if (!k) return std::nullopt;
    double total = 0.0;
    for (int j = 0; j < 3; ++j) total += (*k)[j] * scorer.best(equator_projector(x[j])).second;
    return total;
  };

  // Grid tables: per-angle cos, sin and best weighted Born probability.
  std::vector<double> cs(resolution);
  std::vector<double> sn(resolution);
  std::vector<double> contrib(resolution);
  for (int g = 0; g < resolution; ++g) {
    const double theta = g * step;
    cs[g] = std::cos(theta);
    sn[g] = std::sin(theta);
    contrib[g] = scorer.best(equator_projector(theta)).second;
  }

  Params best_a{0.0};
  double val_a = -1.0;
  for (int g = 0; g < resolution / 2; ++g) {
    const Params x{g * step};
    const double v = *projective(x);
    if (v > val_a) {
      val_a = v;
      best_a = x;
    }
  }
  refine(best_a, val_a, step, refinements, projective);

  Params best_b;
  double val_b = -1.0;
  for (int g0 = 0; g0 < resolution; ++g0) {
    for (int g1 = g0 + 1; g1 < resolution; ++g1) {
      for (int g2 = g1 + 1; g2 < resolution; ++g2) {
        const auto k = completeness_weights({cs[g0], cs[g1], cs[g2]}, {sn[g0], sn[g1], sn[g2]});
        if (!k) continue;
        const double v = (*k)[0] * contrib[g0] + (*k)[1] * contrib[g1] + (*k)[2] * contrib[g2];
        if (v > val_b) {
          val_b = v;
          best_b = {g0 * step, g1 * step, g2 * step};
        }
      }
    }
  }
  if (!best_b.empty()) {
    // Re-score with the exact objective so refinement compares like with like.
    val_b = *three_outcome(best_b);
    refine(best_b, val_b, step, refinements, three_outcome);
  }

  // Optima with one faint outcome sit next to the best projective pair and
  // can gain less than the grid spacing resolves. Seed from that pair plus
  // each grid angle, opening the pair slightly so the third weight is > 0.
  const double t = best_a[0];
  for (int g = 0; g < resolution; ++g) {
    const double u = g * step;
    const double gap = std::remainder(u - t, std::numbers::pi);
    if (std::abs(gap) < 2.0 * step) continue;
    for (double nudge : {0.25 * step, -0.25 * step}) {
      Params seed{t, t + std::numbers::pi + nudge, u < t ? u + kTwoPi : u};
      std::sort(seed.begin(), seed.end());
      const auto v = three_outcome(seed);
      if (!v) continue;
      double fv = *v;
      refine(seed, fv, step, refinements, three_outcome);
      if (fv > val_b) {
        val_b = fv;
        best_b = seed;
      }
      break;
    }
  }

  OracleResult out;
  out.grid_resolution = resolution;
  out.refinement_depth = refinements;
  if (val_b > val_a) {
    out.best_value = val_b;
    out.best_parameters = best_b;
  } else {
    out.best_value = val_a;
    out.best_parameters = best_a;
  }
  return out;
}

OracleResult brute_force_max_confidence(const Priors& priors, int state, int resolution, int refinements) {
  check_resolution(resolution, refinements);
  if (state < 0 || state >= kNumStates) throw InvalidInputError("state index must be 0, 1 or 2");
  if (!(purity(priors.average_state()) < 1.0 - kPurityTolerance)) {
    throw PureStateError("confidence oracle needs a mixed average state");
  }
  const Scorer scorer(priors);
  const double step = kTwoPi / resolution;

  auto objective = [&](const Params& x) -> std::optional<double> {
    const HermitianMatrix2 e = equator_projector(x[0]);
    double total = 0.0;
    for (int j = 0; j < kNumStates; ++j) total += scorer.joint(j, e);
    if (!(total > 0.0)) return std::nullopt;
    return scorer.joint(state, e) / total;
  };

  Params best{0.0};
  double value = -1.0;
  for (int g = 0; g < resolution; ++g) {
    const Params x{g * step};
    if (const auto v = objective(x); v && *v > value) {
      value = *v;
      best = x;
    }
  }
  refine(best, value, step, refinements, objective);
  return {value, best, resolution, refinements};
}

Measurement oracle_measurement(const Priors& priors, const OracleResult& result) {
  const Scorer scorer(priors);
  std::vector<std::pair<double, double>> outcomes;  // (angle, weight)
  if (result.best_parameters.size() == 1) {
    outcomes = {{result.best_parameters[0], 1.0}, {result.best_parameters[0] + std::numbers::pi, 1.0}};
  } else if (result.best_parameters.size() == 3) {
    const auto k = completeness_weights(result.best_parameters);
    if (!k) throw InvalidInputError("oracle parameters do not define a POVM");
    for (int j = 0; j < 3; ++j) outcomes.emplace_back(result.best_parameters[j], (*k)[j]);
  } else {
    throw InvalidInputError("oracle result has neither one nor three parameters");
  }

  std::array<std::optional<HermitianMatrix2>, 3> merged;
  for (const auto& [angle, weight] : outcomes) {
    const HermitianMatrix2 e = equator_projector(angle) * weight;
    const int label = scorer.best(e).first;
    merged[label] = merged[label] ? *merged[label] + e : e;
  }
  Measurement m;
  for (int i = 0; i < kNumStates; ++i) {
    if (merged[i]) m.add(Label::identify(i), *merged[i]);
  }
  return m;
}

double off_equator_spot_check(const Priors& priors, int samples, std::uint64_t seed) {
  const Scorer scorer(priors);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);

  double best = 0.0;
  int accepted = 0;
  for (int attempt = 0; accepted < samples && attempt < 1000 * samples; ++attempt) {
    // Random great circle: orthonormal u, v spanning the plane normal to n.
    std::array<double, 3> n{gauss(rng), gauss(rng), gauss(rng)};
    const double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    for (auto& c : n) c /= nn;
    std::array<double, 3> u = std::abs(n[0]) < 0.9 ? std::array<double, 3>{1, 0, 0} : std::array<double, 3>{0, 1, 0};
    const double dot = u[0] * n[0] + u[1] * n[1] + u[2] * n[2];
    for (int c = 0; c < 3; ++c) u[c] -= dot * n[c];
    const double un = std::sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2]);
    for (auto& c : u) c /= un;
    const std::array<double, 3> v{n[1] * u[2] - n[2] * u[1], n[2] * u[0] - n[0] * u[2], n[0] * u[1] - n[1] * u[0]};

    const Params alphas{angle(rng), angle(rng), angle(rng)};
    const auto k = completeness_weights(alphas);
    if (!k) continue;
    double total = 0.0;
    for (int j = 0; j < 3; ++j) {
      const double ca = std::cos(alphas[j]);
      const double sa = std::sin(alphas[j]);
      const BlochVector m{ca * u[0] + sa * v[0], ca * u[1] + sa * v[1], ca * u[2] + sa * v[2]};
      const HermitianMatrix2 e = HermitianMatrix2::from_bloch(1.0, m) * (*k)[j];
      total += scorer.best(e).second;
    }
    best = std::max(best, total);
    ++accepted;
  }
  return best;
}

}  // namespace trine
