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

#include "trine/errors.hpp"
#include "trine/report_io.hpp"

using namespace trine;
using nlohmann::json;

namespace {

// Serializing, parsing and serializing again must reproduce the first text.
template <typename T>
void check_round_trip(const T& value) {
  const json first = value;
  const T back = json::parse(first.dump()).get<T>();
  const json second = back;
  CHECK(first.dump() == second.dump());
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(2.0 / 3.0) == "0.666666666667");
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(-1e-20) == "-1e-20");
  CHECK(round_significant(2.0 / 3.0) == 0.666666666667);
  CHECK(round_significant(123456.7890123456, 3) == 123000.0);
}

TEST_CASE("round trips") {
  const Priors pr = canonicalize_priors(0.28, 0.40, 0.32);
  check_round_trip(pr);
  check_round_trip(Label::eliminate(2));
  check_round_trip(trine_projector(1));
  check_round_trip(antitrine_measurement());

  const OptimalResult three = optimal_measurement(pr);
  check_round_trip(three);
  check_round_trip(optimal_measurement(canonicalize_priors(0.5, 0.3, 0.2)));
  check_round_trip(*three.gamma);
  check_round_trip(three.helstrom);
  check_round_trip(confidence_report(pr));
  check_round_trip(estimate_success(pr, three.measurement, 1000, 3));
  check_round_trip(brute_force_min_error(pr, 32, 2));
}

TEST_CASE("json content") {
  const json j = optimal_measurement(canonicalize_priors(0.5, 0.3, 0.2));
  CHECK(j.at("strategy") == "TwoElement");
  CHECK(j.at("gamma").is_null());
  CHECK(j.at("theta").is_number());
  CHECK(j.at("priors").at("permutation") == json::array({0, 1, 2}));

  const json c = confidence_report(canonicalize_priors(0.5, 0.3, 0.2));
  CHECK(c.at("inconclusive_convention") == "maximal common scale");

  const Priors back = json::parse(R"({"caller":[0.2,0.5,0.3],"canonical":[0.5,0.3,0.2],"permutation":[1,2,0]})")
                          .get<Priors>();
  CHECK(back.caller(0) == 0.2);
}

TEST_CASE("hermitian parsing rejects non-Hermitian input") {
  const json bad = json::parse(R"({"re":[[1,0.5],[0.2,0]],"im":[[0,0],[0,0]]})");
  CHECK_THROWS_AS(bad.get<HermitianMatrix2>(), InvalidInputError);
}
