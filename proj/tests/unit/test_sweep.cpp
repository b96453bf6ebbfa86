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
#include <sstream>

#include "trine/errors.hpp"
#include "trine/sweep.hpp"

using namespace trine;

TEST_CASE("region sweep shape") {
  const auto rows = region_sweep(40, 1);
  CHECK(rows.size() == 40 * 41 / 2);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const bool ordered = rows[i - 1].p < rows[i].p || (rows[i - 1].p == rows[i].p && rows[i - 1].delta < rows[i].delta);
    CHECK(ordered);
  }
  for (const auto& r : rows) {
    CHECK(r.p2 >= -1e-15);
    if (r.p2 < 1e-15) CHECK(r.strategy == "TwoElement");
    CHECK((r.strategy == "ThreeElement") == (r.determinant < -kBoundaryTieTolerance));
  }
  CHECK_THROWS_AS(region_sweep(1), InvalidInputError);
}

TEST_CASE("region sweep is independent of thread count") {
  const auto a = region_sweep(30, 1);
  const auto b = region_sweep(30, 3);
  std::ostringstream sa;
  std::ostringstream sb;
  write_csv(sa, "x", to_csv(a));
  write_csv(sb, "x", to_csv(b));
  CHECK(sa.str() == sb.str());
}

TEST_CASE("the strategy switches at the critical delta") {
  for (double p : {0.374, 0.394, 0.414}) {
    const auto rows = curves_at_p({p}, 401, 1);
    REQUIRE(rows.size() == 401);
    const double step = rows[1].base.delta - rows[0].base.delta;
    const double cd = *critical_delta(p);
    // Two-element below the critical delta, three-element above it.
    double switch_at = -1.0;
    for (const auto& r : rows) {
      if (r.base.strategy == "ThreeElement" && switch_at < 0.0) switch_at = r.base.delta;
      if (r.base.delta > cd + step) CHECK(r.base.strategy == "ThreeElement");
      if (r.base.delta < cd - step) CHECK(r.base.strategy == "TwoElement");
    }
    CHECK(std::abs(switch_at - cd) <= step);
  }
}

TEST_CASE("curves along fixed delta") {
  const auto flat = curves_at_delta({0.0}, 51, 1);
  REQUIRE(flat.size() == 51);
  CHECK(flat.front().base.p == doctest::Approx(1.0 / 3.0));
  CHECK(flat.front().base.p_correct == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(flat.back().base.p == doctest::Approx(0.5));

  const auto tilted = curves_at_delta({0.4}, 51, 1);
  CHECK(tilted.front().base.p == doctest::Approx(1.4 / 3.0));
  for (const auto& r : tilted) {
    const Priors pr = priors_from_p_delta(r.base.p, 0.0);
    CHECK(r.base.p_correct >= optimal_measurement(pr).p_correct - 1e-12);
  }
  CHECK(min_p_for_delta(0.0) == doctest::Approx(1.0 / 3.0));
  CHECK(min_p_for_delta(0.2) == doctest::Approx(0.4));
  CHECK(min_p_for_delta(0.5) == doctest::Approx(0.5));
  CHECK_THROWS_AS(curves_at_delta({0.6}, 11, 1), DomainError);
  CHECK_THROWS_AS(curves_at_p({0.2}, 11, 1), DomainError);
}

TEST_CASE("curve rows carry both success forms") {
  const CurveRow r = make_curve_row(0.36, 0.02);
  REQUIRE(r.p_3el.has_value());
  CHECK(r.p_3el_valid == (r.base.strategy == "ThreeElement"));
  CHECK(r.base.p_correct == doctest::Approx(r.p_3el_valid ? *r.p_3el : r.p_2el).epsilon(1e-12));

  const CurveRow edge = make_curve_row(0.5, 0.5);
  CHECK_FALSE(edge.p_3el.has_value());
  CHECK(edge.base.p_correct == doctest::Approx(edge.p_2el));
}

TEST_CASE("confidence sweep") {
  const auto rows = confidence_sweep(0.0, 21, 1);
  REQUIRE(rows.size() == 21);
  // Equal priors: the minimum-error and maximum-confidence measurements coincide.
  for (int i = 0; i < 3; ++i) {
    CHECK(rows.front().confidence[i].value() ==
          doctest::Approx(rows.front().min_error_confidence[i].value()).epsilon(1e-12));
  }
  for (const auto& r : rows) {
    for (int i = 0; i < 3; ++i) {
      if (r.confidence[i] && r.min_error_confidence[i]) CHECK(*r.confidence[i] >= *r.min_error_confidence[i] - 1e-12);
    }
  }
  const auto pure = confidence_sweep(0.5, 3, 1);
  CHECK_FALSE(pure.back().confidence[0].has_value());
  CHECK_FALSE(pure.back().inconclusive_probability.has_value());
}

TEST_CASE("CSV output") {
  CHECK(csv_escape("plain") == "plain");
  CHECK(csv_escape("a,b") == "\"a,b\"");
  CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");

  std::ostringstream out;
  write_csv(out, "trine 1.0.0 region --grid 2", to_csv(region_sweep(2, 1)));
  const std::string text = out.str();
  CHECK(text.rfind("# trine 1.0.0 region --grid 2\n", 0) == 0);
  CHECK(text.find("p,delta,p0,p1,p2,strategy,p_correct,determinant,") != std::string::npos);
  CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("verification sampling") {
  for (int i = 0; i < 20; ++i) {
    const Priors a = verify_sample_priors(1, i);
    const Priors b = verify_sample_priors(1, i);
    CHECK(a.caller(0) == b.caller(0));
    CHECK(a.caller(0) + a.caller(1) + a.caller(2) == doctest::Approx(1.0));
  }
  // Odd indices land in the three-element region.
  CHECK(boundary_determinant(verify_sample_priors(1, 1)) < 0.0);
}

TEST_CASE("small verification run") {
  VerifyOptions opt;
  opt.samples = 3;
  opt.resolution = 60;
  opt.threads = 1;
  const VerifyReport r = run_verification(opt);
  CHECK(r.samples == 3);
  CHECK(r.comparisons > 3);
  CHECK(r.passed);
  CHECK(r.mismatches == 0);
  CHECK(verify_report_json(r).at("passed") == true);
  opt.samples = 0;
  CHECK_THROWS_AS(run_verification(opt), InvalidInputError);
}
