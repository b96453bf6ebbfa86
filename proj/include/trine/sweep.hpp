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

/**
 * @file
 * Parameter sweeps over the (p, delta) plane, CSV output, and the oracle
 * cross-check used by `trine verify`.
 *
 * Rows are computed in parallel but always returned sorted by p, then delta.
 * Sweep rows use the identity permutation, so state indices are canonical:
 * state 0 has prior p + delta, state 1 has p - delta, state 2 has 1 - 2p.
 */

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "trine/min_error.hpp"
#include "trine/trine.hpp"

namespace trine {

/// Worker count: `requested` if nonzero, else the hardware concurrency, in
/// both cases capped by the TRINE_THREADS environment variable when set.
unsigned resolve_threads(unsigned requested = 0);

struct SweepRow {
  double p = 0.0;
  double delta = 0.0;
  double p0 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  std::string strategy;
  double p_correct = 0.0;
  /// Boundary quartic; negative where the three-element POVM is optimal.
  double determinant = 0.0;
  /// Maximum confidence per state; absent when the average state is pure.
  std::array<std::optional<double>, 3> confidence{};
  std::optional<double> critical_delta;
};

struct CurveRow {
  SweepRow base;
  double p_2el = 0.0;
  /// Absent when p2 = 0.
  std::optional<double> p_3el;
  bool p_3el_valid = false;
};

struct ConfidenceRow {
  double p = 0.0;
  double delta = 0.0;
  double p0 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  std::string strategy;
  std::array<std::optional<double>, 3> confidence{};
  std::array<std::optional<double>, 3> min_error_confidence{};
  std::optional<double> inconclusive_probability;
};

SweepRow make_sweep_row(double p, double delta);
CurveRow make_curve_row(double p, double delta);
ConfidenceRow make_confidence_row(double p, double delta);

/// Cells (p_i, delta_k) with p_i = 1/3 + (i / (n-1)) / 6 and
/// delta_k = (k / (n-1)) / 2, keeping those with delta_k <= min(p_i, 3p_i - 1).
/// Throws InvalidInputError for n < 2.
std::vector<SweepRow> region_sweep(int n, unsigned threads = 0);

/// Admissible delta range at p, sampled at `steps` evenly spaced points.
std::vector<CurveRow> curves_at_p(const std::vector<double>& p_values, int steps, unsigned threads = 0);
/// Admissible p range at delta, sampled at `steps` evenly spaced points.
std::vector<CurveRow> curves_at_delta(const std::vector<double>& delta_values, int steps, unsigned threads = 0);

std::vector<ConfidenceRow> confidence_sweep(double delta, int steps, unsigned threads = 0);

/// Smallest admissible p for a given delta: max(1/3, (1 + delta)/3, delta).
double min_p_for_delta(double delta);

// ----------------------------------------------------------------------- CSV

std::string csv_escape(const std::string& field);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

CsvTable to_csv(const std::vector<SweepRow>& rows);
CsvTable to_csv(const std::vector<CurveRow>& rows);
CsvTable to_csv(const std::vector<ConfidenceRow>& rows);

/// Writes "# <metadata>", the header row and the data rows.
void write_csv(std::ostream& out, const std::string& metadata, const CsvTable& table);

// -------------------------------------------------------------------- verify

struct VerifyOptions {
  int samples = 100;
  std::uint64_t seed = 1;
  double tolerance = 1e-4;
  int resolution = 360;
  int refinements = 20;
  unsigned threads = 0;
};

struct VerifyCase {
  int sample = 0;
  Priors priors;
  /// "p_correct" or "confidence_<i>"
  std::string quantity;
  double closed_form = 0.0;
  double oracle = 0.0;
  double error = 0.0;
};

struct VerifyReport {
  int samples = 0;
  double tolerance = 0.0;
  int comparisons = 0;
  int mismatches = 0;
  VerifyCase worst;
  bool passed = false;
};

/// Random priors for sample `index`: Dirichlet(1,1,1) for even indices, the
/// three-element region for odd ones, then a random relabeling.
Priors verify_sample_priors(std::uint64_t seed, int index);

/// Compares brute force against the closed forms for every sample. Throws
/// InvalidInputError if samples < 1.
VerifyReport run_verification(const VerifyOptions& options);

nlohmann::json verify_report_json(const VerifyReport& report);

}  // namespace trine
