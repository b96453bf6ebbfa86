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

#include "trine/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "trine/errors.hpp"

namespace trine {

using nlohmann::json;

namespace {

json num(double x) { return round_significant(x); }

json optional_num(const std::optional<double>& x) { return x ? num(*x) : json(nullptr); }

template <std::size_t N>
json num_array(const std::array<double, N>& xs) {
  json out = json::array();
  for (double x : xs) out.push_back(num(x));
  return out;
}

}  // namespace

double round_significant(double x, int digits) {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return std::strtod(buf, nullptr);
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, x);
  return buf;
}

// ---------------------------------------------------------------- operators

void to_json(json& j, const HermitianMatrix2& m) {
  j = json{{"re", {{num(m(0, 0).real()), num(m(0, 1).real())}, {num(m(1, 0).real()), num(m(1, 1).real())}}},
           {"im", {{num(m(0, 0).imag()), num(m(0, 1).imag())}, {num(m(1, 0).imag()), num(m(1, 1).imag())}}}};
}

void from_json(const json& j, HermitianMatrix2& m) {
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  auto entry = [&](int r, int c) { return Complex(re.at(r).at(c).get<double>(), im.at(r).at(c).get<double>()); };
  m = HermitianMatrix2(Matrix2(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)), 1e-10);
}

void to_json(json& j, const Label& l) { j = l.to_string(); }

void from_json(const json& j, Label& l) { l = Label::parse(j.get<std::string>()); }

void to_json(json& j, const Measurement& m) {
  j = json::array();
  for (const auto& e : m.elements()) {
    json el = e.element;
    el["label"] = e.label;
    j.push_back(std::move(el));
  }
}

void from_json(const json& j, Measurement& m) {
  m = Measurement();
  for (const auto& el : j) m.add(el.at("label").get<Label>(), el.get<HermitianMatrix2>());
}

void to_json(json& j, const Priors& p) {
  j = json{{"caller", num_array(p.caller_order())},
           {"canonical", num_array(p.sorted())},
           {"permutation", p.permutation()},
           {"p", num(p.p())},
           {"delta", num(p.delta())}};
}

void from_json(const json& j, Priors& p) {
  p = Priors::from_canonical(j.at("canonical").get<std::array<double, 3>>(),
                             j.at("permutation").get<std::array<int, 3>>());
}

// ------------------------------------------------------------------ reports

void to_json(json& j, const GammaSolution& g) {
  j = json{{"a", num(g.a)}, {"b_x", num(g.b_x)}, {"b_y", num(g.b_y)}, {"gamma", g.gamma}, {"p_corr", num(g.p_corr)}};
}

void from_json(const json& j, GammaSolution& g) {
  g.a = j.at("a").get<double>();
  g.b_x = j.at("b_x").get<double>();
  g.b_y = j.at("b_y").get<double>();
  g.gamma = j.at("gamma").get<HermitianMatrix2>();
  g.p_corr = j.at("p_corr").get<double>();
}

void to_json(json& j, const HelstromReport& h) {
  j = json{{"max_offdiag_residual", num(h.max_offdiag_residual)},
           {"min_global_eigenvalue", num(h.min_global_eigenvalue)},
           {"p_success", num(h.p_success)},
           {"passes", h.passes}};
}

void from_json(const json& j, HelstromReport& h) {
  h.max_offdiag_residual = j.at("max_offdiag_residual").get<double>();
  h.min_global_eigenvalue = j.at("min_global_eigenvalue").get<double>();
  h.p_success = j.at("p_success").get<double>();
  h.passes = j.at("passes").get<bool>();
}

void to_json(json& j, const OptimalResult& r) {
  j = json{{"priors", r.priors},
           {"strategy", to_string(r.strategy)},
           {"p_correct", num(r.p_correct)},
           {"boundary_determinant", num(r.boundary_determinant)},
           {"theta", optional_num(r.theta)},
           {"gamma", r.gamma ? json(*r.gamma) : json(nullptr)},
           {"measurement", r.measurement},
           {"helstrom", r.helstrom}};
}

void from_json(const json& j, OptimalResult& r) {
  r.priors = j.at("priors").get<Priors>();
  const auto strategy = j.at("strategy").get<std::string>();
  if (strategy == "TwoElement") {
    r.strategy = Strategy::TwoElement;
  } else if (strategy == "ThreeElement") {
    r.strategy = Strategy::ThreeElement;
  } else {
    throw InvalidInputError("unknown strategy '" + strategy + "'");
  }
  r.p_correct = j.at("p_correct").get<double>();
  r.boundary_determinant = j.at("boundary_determinant").get<double>();
  r.theta = j.at("theta").is_null() ? std::nullopt : std::optional<double>(j.at("theta").get<double>());
  r.gamma = j.at("gamma").is_null() ? std::nullopt : std::optional<GammaSolution>(j.at("gamma").get<GammaSolution>());
  r.measurement = j.at("measurement").get<Measurement>();
  r.helstrom = j.at("helstrom").get<HelstromReport>();
}

void to_json(json& j, const ConfidenceReport& r) {
  j = json{{"per_state_confidence", num_array(r.per_state_confidence)},
           {"inconclusive_probability", num(r.inconclusive_probability)},
           {"inconclusive_convention", "maximal common scale"},
           {"measurement", r.measurement}};
}

void from_json(const json& j, ConfidenceReport& r) {
  r.per_state_confidence = j.at("per_state_confidence").get<std::array<double, 3>>();
  r.inconclusive_probability = j.at("inconclusive_probability").get<double>();
  r.measurement = j.at("measurement").get<Measurement>();
}

void to_json(json& j, const EmpiricalResult& r) {
  j = json{{"shots", r.shots},
           {"successes", r.successes},
           {"estimate", num(r.estimate)},
           {"standard_error", num(r.standard_error)},
           {"per_outcome_counts", r.per_outcome_counts},
           {"seed", r.seed},
           {"total_shots", r.total_shots},
           {"rng_algorithm", r.rng_algorithm}};
}

void from_json(const json& j, EmpiricalResult& r) {
  r.shots = j.at("shots").get<std::uint64_t>();
  r.successes = j.at("successes").get<std::uint64_t>();
  r.estimate = j.at("estimate").get<double>();
  r.standard_error = j.at("standard_error").get<double>();
  r.per_outcome_counts = j.at("per_outcome_counts").get<std::map<std::string, std::uint64_t>>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.total_shots = j.at("total_shots").get<std::uint64_t>();
  r.rng_algorithm = j.at("rng_algorithm").get<std::string>();
}

void to_json(json& j, const OracleResult& r) {
  json params = json::array();
  for (double x : r.best_parameters) params.push_back(num(x));
  j = json{{"best_value", num(r.best_value)},
           {"best_parameters", params},
           {"grid_resolution", r.grid_resolution},
           {"refinement_depth", r.refinement_depth}};
}

void from_json(const json& j, OracleResult& r) {
  r.best_value = j.at("best_value").get<double>();
  r.best_parameters = j.at("best_parameters").get<std::vector<double>>();
  r.grid_resolution = j.at("grid_resolution").get<int>();
  r.refinement_depth = j.at("refinement_depth").get<int>();
}

}  // namespace trine
