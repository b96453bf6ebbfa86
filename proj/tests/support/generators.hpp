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

// Seeded random inputs for property tests.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "trine/min_error.hpp"
#include "trine/qubit.hpp"
#include "trine/trine.hpp"

namespace trine::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double angle() { return uniform(0.0, 2.0 * std::numbers::pi); }
  int index(int n) { return std::min(n - 1, static_cast<int>(uniform() * n)); }

  /// Flat Dirichlet(1,1,1), caller order.
  std::array<double, 3> simplex() {
    std::array<double, 3> q{};
    double sum = 0.0;
    for (double& x : q) {
      x = -std::log1p(-uniform());
      sum += x;
    }
    for (double& x : q) x /= sum;
    return q;
  }

  /// Random prior triple with every entry at least `floor`.
  Priors priors(double floor = 0.0) {
    auto q = simplex();
    for (double& x : q) x = floor + (1.0 - 3.0 * floor) * x;
    return canonicalize_priors(q[0], q[1], q[2]);
  }

  /// Canonical priors where the three-element strategy is optimal.
  Priors three_element_priors() {
    for (;;) {
      const double p = uniform(1.0 / 3.0, 0.5);
      const double lo = critical_delta(p).value_or(0.0);
      const double hi = max_delta(p);
      const Priors pr = priors_from_p_delta(p, uniform(lo, hi));
      if (pr.p2() > 1e-6 && boundary_determinant(pr) < -1e-9) return pr;
    }
  }

  /// Canonical priors where the two-element strategy is optimal and p2 > 0.
  Priors two_element_priors() {
    for (;;) {
      const double p = uniform(4.0 / (9.0 + std::sqrt(3.0)), 0.5);
      const auto cd = critical_delta(p);
      if (!cd) continue;
      const Priors pr = priors_from_p_delta(p, uniform(0.0, *cd));
      if (pr.p2() > 1e-6 && boundary_determinant(pr) > 1e-9) return pr;
    }
  }

  std::array<int, 3> permutation() {
    std::array<int, 3> perm{0, 1, 2};
    for (int i = 2; i > 0; --i) std::swap(perm[i], perm[index(i + 1)]);
    return perm;
  }

  /// Same multiset of priors assigned to caller indices by a random permutation.
  Priors relabel(const Priors& canonical, const std::array<int, 3>& perm) {
    std::array<double, 3> q{};
    for (int k = 0; k < 3; ++k) q[perm[k]] = canonical.canonical(k);
    return canonicalize_priors(q[0], q[1], q[2]);
  }

  Complex complex_normal() {
    std::normal_distribution<double> n;
    return {n(eng_), n(eng_)};
  }

  HermitianMatrix2 hermitian(double scale = 1.0) {
    return {scale * uniform(-1.0, 1.0), scale * Complex(uniform(-1.0, 1.0), uniform(-1.0, 1.0)),
            scale * uniform(-1.0, 1.0)};
  }

  /// Density matrix with Bloch radius drawn uniformly from [0, max_radius].
  HermitianMatrix2 density(double max_radius = 0.999) {
    const double r = uniform(0.0, max_radius);
    const double z = uniform(-1.0, 1.0);
    const double phi = angle();
    const double s = std::sqrt(1.0 - z * z);
    return HermitianMatrix2::from_bloch(1.0, {r * s * std::cos(phi), r * s * std::sin(phi), r * z});
  }

  PureState pure_state() {
    const Complex a0 = complex_normal();
    return PureState::normalized(a0, complex_normal());
  }

  /// Random PSD element c |v><v| with c in (0, 1].
  HermitianMatrix2 rank_one_element() { return pure_state().projector() * uniform(0.01, 1.0); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace trine::testing
