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

#include <cmath>

#include "support/reference_values.hpp"
#include "trine/errors.hpp"
#include "trine/max_confidence.hpp"
#include "trine/min_error.hpp"
#include "trine/oracle.hpp"

using namespace trine;
namespace ref = trine::reference;

TEST_CASE("min-error oracle examples") {
  const OracleResult eq = brute_force_min_error(canonicalize_priors(1.0 / 3, 1.0 / 3, 1.0 / 3), 120, 20);
  CHECK(eq.best_value == doctest::Approx(ref::kSuccessEqual).epsilon(1e-9));
  CHECK(eq.grid_resolution == 120);
  CHECK(eq.refinement_depth == 20);

  const OracleResult half = brute_force_min_error(canonicalize_priors(0.5, 0.5, 0.0), 120, 20);
  CHECK(half.best_value == doctest::Approx(ref::kSuccessHalfHalf).epsilon(1e-9));

  const OracleResult certain = brute_force_min_error(canonicalize_priors(1.0, 0.0, 0.0), 120, 20);
  CHECK(certain.best_value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("oracle matches the closed form in both regimes") {
  for (const auto& q : {std::array{0.5, 0.3, 0.2}, std::array{0.28, 0.40, 0.32}, std::array{0.16, 0.62, 0.22}}) {
    const Priors pr = canonicalize_priors(q[0], q[1], q[2]);
    const OracleResult o = brute_force_min_error(pr);
    CHECK(o.best_value == doctest::Approx(optimal_measurement(pr).p_correct).epsilon(1e-8));
    CHECK(o.best_value <= optimal_measurement(pr).p_correct + 1e-12);
  }
}

TEST_CASE("oracle_measurement rebuilds a valid POVM with the reported value") {
  const Priors pr = canonicalize_priors(0.40, 0.32, 0.28);
  const OracleResult o = brute_force_min_error(pr, 90, 20);
  const Measurement m = oracle_measurement(pr, o);
  CHECK(m.validity().is_valid);
  double value = 0.0;
  for (int i = 0; i < 3; ++i) value += pr.caller(i) * born_probability(trine_projector(i), m.identifying(i));
  CHECK(value == doctest::Approx(o.best_value).epsilon(1e-12));

  OracleResult bad = o;
  bad.best_parameters = {0.1, 0.2};
  CHECK_THROWS_AS(oracle_measurement(pr, bad), InvalidInputError);
}

TEST_CASE("confidence oracle") {
  const Priors pr = canonicalize_priors(0.5, 0.3, 0.2);
  for (int i = 0; i < 3; ++i) {
    const OracleResult o = brute_force_max_confidence(pr, i);
    CHECK(o.best_value == doctest::Approx(mc_confidence_closed_form(pr, i)).epsilon(1e-9));
  }
  CHECK_THROWS_AS(brute_force_max_confidence(canonicalize_priors(1.0, 0.0, 0.0), 0), PureStateError);
  CHECK_THROWS_AS(brute_force_max_confidence(pr, 3), InvalidInputError);
}

TEST_CASE("oracle argument checks") {
  const Priors pr = canonicalize_priors(0.5, 0.3, 0.2);
  CHECK_THROWS_AS(brute_force_min_error(pr, 15, 0), InvalidInputError);
  CHECK_THROWS_AS(brute_force_min_error(pr, 16, -1), InvalidInputError);
  CHECK_THROWS_AS(brute_force_max_confidence(pr, 0, 8, 0), InvalidInputError);
  CHECK_NOTHROW(brute_force_min_error(pr, 16, 0));
}

TEST_CASE("off-equator search never beats the optimum") {
  const Priors pr = canonicalize_priors(0.5, 0.3, 0.2);
  const double best = off_equator_spot_check(pr, 50, 7);
  CHECK(best > 0.0);
  CHECK(best <= optimal_measurement(pr).p_correct + 1e-7);
}
