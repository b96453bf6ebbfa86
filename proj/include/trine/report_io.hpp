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

// JSON forms of the library's records. Keys are snake_case; every double is
// rounded to 12 significant digits before it is stored, so a report parsed
// back and re-emitted is byte-identical.

#pragma once

#include <json.hpp>
#include <string>

#include "trine/max_confidence.hpp"
#include "trine/min_error.hpp"
#include "trine/oracle.hpp"
#include "trine/simulate.hpp"

namespace trine {

inline constexpr int kSignificantDigits = 12;

double round_significant(double x, int digits = kSignificantDigits);
/// "%.12g"
std::string format_number(double x);

void to_json(nlohmann::json& j, const HermitianMatrix2& m);
void from_json(const nlohmann::json& j, HermitianMatrix2& m);

void to_json(nlohmann::json& j, const Label& l);
void from_json(const nlohmann::json& j, Label& l);

void to_json(nlohmann::json& j, const Measurement& m);
void from_json(const nlohmann::json& j, Measurement& m);

void to_json(nlohmann::json& j, const Priors& p);
void from_json(const nlohmann::json& j, Priors& p);

void to_json(nlohmann::json& j, const GammaSolution& g);
void from_json(const nlohmann::json& j, GammaSolution& g);

void to_json(nlohmann::json& j, const HelstromReport& h);
void from_json(const nlohmann::json& j, HelstromReport& h);

void to_json(nlohmann::json& j, const OptimalResult& r);
void from_json(const nlohmann::json& j, OptimalResult& r);

void to_json(nlohmann::json& j, const ConfidenceReport& r);
void from_json(const nlohmann::json& j, ConfidenceReport& r);

void to_json(nlohmann::json& j, const EmpiricalResult& r);
void from_json(const nlohmann::json& j, EmpiricalResult& r);

void to_json(nlohmann::json& j, const OracleResult& r);
void from_json(const nlohmann::json& j, OracleResult& r);

}  // namespace trine
