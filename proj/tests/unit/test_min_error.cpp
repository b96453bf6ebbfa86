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
#include <numbers>

#include "support/reference_values.hpp"
#include "trine/errors.hpp"
#include "trine/min_error.hpp"

using namespace trine;
namespace ref = trine::reference;

namespace {

double det_m(const Priors& pr) { return boundary_matrix(pr).matrix().determinant().real(); }

}  // namespace

TEST_CASE("two_element_angle examples") {
  CHECK(std::abs(two_element_angle(canonicalize_priors(1.0, 0.0, 0.0))) < 1e-15);
  CHECK(two_element_angle(canonicalize_priors(0.5, 0.5, 0.0)) ==
        doctest::Approx(-std::numbers::pi / 6.0).epsilon(1e-14));
  CHECK(two_element_angle(canonicalize_priors(0.4, 0.4, 0.2)) ==
        doctest::Approx(-std::numbers::pi / 6.0).epsilon(1e-14));
  CHECK(std::tan(two_element_angle(canonicalize_priors(0.5, 0.25, 0.25))) ==
        doctest::Approx(ref::kTanThetaHalfQuarter).epsilon(1e-14));
}

TEST_CASE("two-element measurement is a projective pair") {
  const Priors pr = canonicalize_priors(0.5, 0.3, 0.2);
  const Measurement m = two_element_measurement(pr);
  REQUIRE(m.size() == 2);
  CHECK(m.validity().is_valid);
  CHECK(m.find(Label::identify(2)) == nullptr);
  const Matrix2 prod = m.identifying(0) * m.identifying(1);
  CHECK(prod.max_abs_diff(Matrix2()) < 1e-14);
}

TEST_CASE("p_correct_two_element examples") {
  CHECK(p_correct_two_element(canonicalize_priors(0.5, 0.5, 0.0)) ==
        doctest::Approx(ref::kSuccessHalfHalf).epsilon(1e-14));
  CHECK(p_correct_two_element(canonicalize_priors(0.45, 0.35, 0.20)) ==
        doctest::Approx(ref::kSuccess_45_35_20).epsilon(1e-14));
  CHECK(p_correct_two_element(canonicalize_priors(1.0, 0.0, 0.0)) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("boundary quartic versus det(M)") {
  const Priors eq = canonicalize_priors(1.0 / 3, 1.0 / 3, 1.0 / 3);
  CHECK(boundary_determinant(eq) == doctest::Approx(ref::kQuarticEqual).epsilon(1e-14));
  CHECK(det_m(eq) == doctest::Approx(ref::kDetMEqual).epsilon(1e-12));

  const Priors a = canonicalize_priors(0.62, 0.22, 0.16);
  CHECK(boundary_determinant(a) == doctest::Approx(ref::kQuartic_62_22_16).epsilon(1e-12));
  CHECK(det_m(a) == doctest::Approx(ref::kDetM_62_22_16).epsilon(1e-12));

  // The two differ by a positive factor: quartic = det(M) 8 s (B - A s) / (3 p0 p1).
  for (const auto& q : {std::array{0.62, 0.22, 0.16}, std::array{0.4, 0.32, 0.28}, std::array{0.5, 0.3, 0.2},
                        std::array{0.36, 0.34, 0.30}, std::array{0.45, 0.45, 0.10}}) {
    const Priors pr = canonicalize_priors(q[0], q[1], q[2]);
    const double p0 = pr.p0();
    const double p1 = pr.p1();
    const double s = std::sqrt(p0 * p0 + p0 * p1 + p1 * p1);
    const double A = p0 * p0 + 3.0 * p0 * p1 + p1 * p1 - p0 - p1;
    const double B = p0 * p0 * p0 + 2.0 * p0 * p0 * p1 + 2.0 * p0 * p1 * p1 + p1 * p1 * p1 - p0 * p0 - p1 * p1;
    const double factor = 8.0 * s * (B - A * s) / (3.0 * p0 * p1);
    CHECK(factor > 0.0);
    CHECK(boundary_determinant(pr) == doctest::Approx(det_m(pr) * factor).epsilon(1e-12));
    CHECK((boundary_determinant(pr) < 0.0) == (det_m(pr) < 0.0));
  }
}

TEST_CASE("critical_delta examples") {
  CHECK_FALSE(critical_delta(1.0 / 3.0).has_value());
  CHECK(*critical_delta(0.374) == doctest::Approx(ref::kCriticalDelta_0_374).epsilon(1e-10));
  CHECK(*critical_delta(0.394) == doctest::Approx(ref::kCriticalDelta_0_394).epsilon(1e-12));
  CHECK(*critical_delta(0.414) == doctest::Approx(ref::kCriticalDelta_0_414).epsilon(1e-12));
  CHECK(*critical_delta(0.42) == doctest::Approx(ref::kCriticalDelta_0_42).epsilon(1e-12));
  CHECK(*critical_delta(0.45) == doctest::Approx(ref::kCriticalDelta_0_45).epsilon(1e-12));
  CHECK(*critical_delta(0.5) == doctest::Approx(ref::kCriticalDelta_0_5).epsilon(1e-12));
  CHECK(critical_delta(ref::kBreakdownP).value_or(1.0) < 1e-6);
  CHECK_THROWS_AS(critical_delta(0.3), DomainError);
  CHECK_THROWS_AS(critical_delta(0.6), DomainError);
}

TEST_CASE("quartic vanishes on the critical curve") {
  for (double p : {0.374, 0.394, 0.414, 0.42, 0.45}) {
    const Priors pr = priors_from_p_delta(p, *critical_delta(p));
    CHECK(std::abs(boundary_determinant(pr)) < 1e-12);
  }
}

TEST_CASE("gamma at equal priors") {
  const GammaSolution g = gamma_three_element(canonicalize_priors(1.0 / 3, 1.0 / 3, 1.0 / 3));
  CHECK(g.a == doctest::Approx(6.0).epsilon(1e-13));
  CHECK(std::abs(g.b_x) < 1e-13);
  CHECK(std::abs(g.b_y) < 1e-13);
  CHECK(g.gamma.matrix().max_abs_diff((HermitianMatrix2::identity() * (1.0 / 3.0)).matrix()) < 1e-13);
  CHECK(g.p_corr == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("three-element POVM at equal priors is the trine measurement") {
  const Measurement m = three_element_measurement(canonicalize_priors(1.0 / 3, 1.0 / 3, 1.0 / 3));
  const Measurement t = trine_measurement();
  for (int k = 0; k < 3; ++k) {
    CHECK(m.identifying(k).matrix().max_abs_diff(t.identifying(k).matrix()) < 1e-12);
  }
}

TEST_CASE("three-element construction details") {
  const Priors pr = canonicalize_priors(0.40, 0.32, 0.28);
  REQUIRE(boundary_determinant(pr) < 0.0);
  const ThreeElementConstruction c = construct_three_element(pr);
  double sum = 0.0;
  for (int k = 0; k < 3; ++k) {
    CHECK(c.weights[k] > 0.0);
    CHECK(std::abs(c.null_eigenvalues[k]) < 1e-10);
    sum += c.weights[k];
  }
  CHECK(sum == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(c.measurement.validity().is_valid);
  const ThreeElementValue v = p_correct_three_element(pr);
  CHECK(v.valid);
  CHECK(v.value == doctest::Approx(ref::kSuccess_40_32_28).epsilon(1e-12));
  CHECK(c.gamma.p_corr == doctest::Approx(v.value).epsilon(1e-12));
}

TEST_CASE("three-element errors") {
  CHECK_THROWS_AS(gamma_three_element(canonicalize_priors(0.5, 0.5, 0.0)), DivisionError);
  CHECK_THROWS_AS(p_correct_three_element(canonicalize_priors(0.5, 0.5, 0.0)), DivisionError);
  CHECK_THROWS_AS(three_element_measurement(priors_from_p_delta(0.45, 0.0)), RegionError);
  CHECK_THROWS_AS(three_element_measurement(canonicalize_priors(0.5, 0.3, 0.2)), RegionError);
  CHECK_FALSE(p_correct_three_element(canonicalize_priors(0.5, 0.3, 0.2)).valid);
}

TEST_CASE("three-element weights thin out toward the breakdown point") {
  const Priors inside = priors_from_p_delta(ref::kBreakdownP - 1e-3, 0.0);
  const ThreeElementConstruction c = construct_three_element(inside);
  const double smallest = std::min({c.weights[0], c.weights[1], c.weights[2]});
  CHECK(smallest >= 0.0);
  CHECK(smallest < 0.05);
}

TEST_CASE("optimal_measurement dispatch") {
  const OptimalResult eq = optimal_measurement(canonicalize_priors(1.0 / 3, 1.0 / 3, 1.0 / 3));
  CHECK(eq.strategy == Strategy::ThreeElement);
  CHECK(eq.p_correct == doctest::Approx(ref::kSuccessEqual).epsilon(1e-13));
  CHECK(eq.gamma.has_value());
  CHECK_FALSE(eq.theta.has_value());

  const OptimalResult a = optimal_measurement(canonicalize_priors(0.5, 0.3, 0.2));
  CHECK(a.strategy == Strategy::TwoElement);
  CHECK(a.p_correct == doctest::Approx(ref::kSuccess_50_30_20).epsilon(1e-13));
  CHECK(a.helstrom.passes);

  const OptimalResult b = optimal_measurement(canonicalize_priors(0.62, 0.22, 0.16));
  CHECK(b.strategy == Strategy::TwoElement);
  CHECK(b.p_correct == doctest::Approx(ref::kSuccess_62_22_16).epsilon(1e-13));

  const OptimalResult c = optimal_measurement(canonicalize_priors(0.28, 0.40, 0.32));
  CHECK(c.strategy == Strategy::ThreeElement);
  CHECK(c.p_correct == doctest::Approx(ref::kSuccess_40_32_28).epsilon(1e-12));
  CHECK(c.measurement.find(Label::identify(1)) != nullptr);

  const OptimalResult d = optimal_measurement(canonicalize_priors(0.0, 1.0, 0.0));
  CHECK(d.p_correct == doctest::Approx(1.0).epsilon(1e-15));

  CHECK(std::string(to_string(Strategy::TwoElement)) == "TwoElement");
}

TEST_CASE("caller frame of the optimal measurement") {
  const OptimalResult r = optimal_measurement(canonicalize_priors(0.2, 0.3, 0.5));
  // State 0 has the smallest prior and is never named.
  CHECK(r.measurement.find(Label::identify(0)) == nullptr);
  CHECK(r.helstrom.passes);
  CHECK(r.helstrom.p_success == doctest::Approx(ref::kSuccess_50_30_20).epsilon(1e-12));
}

TEST_CASE("Helstrom checks") {
  const Priors eq = canonicalize_priors(1.0 / 3, 1.0 / 3, 1.0 / 3);
  const HelstromReport t = check_helstrom(eq, trine_measurement());
  CHECK(t.passes);
  CHECK(t.p_success == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

  const HelstromReport anti = check_helstrom(eq, antitrine_measurement().with_identification_labels());
  CHECK_FALSE(anti.passes);
  CHECK(anti.p_success < 1e-14);

  const Priors half = canonicalize_priors(0.5, 0.5, 0.0);
  CHECK(check_helstrom(half, two_element_measurement(half)).passes);
  CHECK_FALSE(check_helstrom(half, trine_measurement()).passes);
}
