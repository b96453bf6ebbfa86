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

#include <doctest.h>

#include "support/generators.hpp"
#include "trine/min_error.hpp"
#include "trine/oracle.hpp"

using namespace trine;
using trine::testing::Gen;

TEST_CASE("off-equator POVMs never beat the equatorial optimum") {
  Gen g(501);
  for (int n = 0; n < 20; ++n) {
    const Priors pr = g.priors();
    const OracleResult incumbent = brute_force_min_error(pr, 180, 20);
    const double off = off_equator_spot_check(pr, 50, 1000 + n);
    CHECK(off <= incumbent.best_value + 1e-7);
  }
}

TEST_CASE("deeper refinement never lowers the oracle value") {
  Gen g(502);
  for (int n = 0; n < 8; ++n) {
    const Priors pr = n % 2 == 0 ? g.three_element_priors() : g.two_element_priors();
    double previous = 0.0;
    for (int depth : {0, 1, 2, 4, 8, 12, 20}) {
      const double value = brute_force_min_error(pr, 60, depth).best_value;
      CHECK(value >= previous);
      previous = value;
    }
    double previous_c = 0.0;
    for (int depth : {0, 2, 8, 20}) {
      const double value = brute_force_max_confidence(pr, n % 3, 60, depth).best_value;
      CHECK(value >= previous_c);
      previous_c = value;
    }
  }
}

TEST_CASE("the oracle is deterministic and never exceeds the optimum") {
  Gen g(503);
  for (int n = 0; n < 6; ++n) {
    const Priors pr = g.relabel(g.priors(1e-3), g.permutation());
    const OracleResult a = brute_force_min_error(pr, 90, 20);
    const OracleResult b = brute_force_min_error(pr, 90, 20);
    CHECK(a.best_value == b.best_value);
    CHECK(a.best_parameters == b.best_parameters);
    CHECK(a.best_value <= optimal_measurement(pr).p_correct + 1e-12);
  }
}
