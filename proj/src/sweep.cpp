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

#include "trine/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <random>
#include <thread>

#include "trine/errors.hpp"
#include "trine/max_confidence.hpp"
#include "trine/oracle.hpp"
#include "trine/report_io.hpp"
#include "trine/simulate.hpp"

namespace trine {

namespace {

constexpr double kGridSlack = 1e-12;

// Runs body(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) body(i);
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
}

template <typename Row>
void sort_rows(std::vector<Row>& rows, double Row::*p, double Row::*delta) {
  std::stable_sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    return a.*p != b.*p ? a.*p < b.*p : a.*delta < b.*delta;
  });
}

bool is_pure(const Priors& priors) { return purity(priors.average_state()) >= 1.0 - kPurityTolerance; }

std::string field(double x) { return format_number(x); }
std::string field(const std::optional<double>& x) { return x ? format_number(*x) : std::string(); }

double linspace(double lo, double hi, int k, int steps) {
  if (k == steps - 1) return hi;
  return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

void check_steps(int steps) {
  if (steps < 2) throw InvalidInputError("steps must be at least 2");
}

// Uniform in [0, 1) from the top 53 bits.
double uniform01(std::mt19937_64& eng) { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

}  // namespace

unsigned resolve_threads(unsigned requested) {
  unsigned n = requested > 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TRINE_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return n;
}

// ------------------------------------------------------------------- rows

SweepRow make_sweep_row(double p, double delta) {
  const Priors priors = priors_from_p_delta(p, delta);
  const OptimalResult opt = optimal_measurement(priors);
  SweepRow row;
  row.p = p;
  row.delta = delta;
  row.p0 = priors.p0();
  row.p1 = priors.p1();
  row.p2 = priors.p2();
  row.strategy = to_string(opt.strategy);
  row.p_correct = opt.p_correct;
  row.determinant = opt.boundary_determinant;
  if (!is_pure(priors)) {
    for (int i = 0; i < kNumStates; ++i) row.confidence[i] = mc_confidence_closed_form(priors, i);
  }
  row.critical_delta = critical_delta(std::clamp(p, 1.0 / 3.0, 0.5));
  return row;
}

CurveRow make_curve_row(double p, double delta) {
  CurveRow row;
  row.base = make_sweep_row(p, delta);
  const Priors priors = priors_from_p_delta(p, delta);
  row.p_2el = p_correct_two_element(priors);
  if (priors.all_positive()) {
    const ThreeElementValue v = p_correct_three_element(priors);
    row.p_3el = v.value;
    row.p_3el_valid = v.valid;
  }
  return row;
}

ConfidenceRow make_confidence_row(double p, double delta) {
  const Priors priors = priors_from_p_delta(p, delta);
  const OptimalResult opt = optimal_measurement(priors);
  ConfidenceRow row;
  row.p = p;
  row.delta = delta;
  row.p0 = priors.p0();
  row.p1 = priors.p1();
  row.p2 = priors.p2();
  row.strategy = to_string(opt.strategy);
  if (!is_pure(priors)) {
    const ConfidenceReport report = confidence_report(priors);
    for (int i = 0; i < kNumStates; ++i) row.confidence[i] = report.per_state_confidence[i];
    row.inconclusive_probability = report.inconclusive_probability;
  }
  row.min_error_confidence = min_error_confidence(priors);
  return row;
}

// ----------------------------------------------------------------- sweeps

std::vector<SweepRow> region_sweep(int n, unsigned threads) {
  if (n < 2) throw InvalidInputError("grid size must be at least 2");
  std::vector<std::pair<double, double>> cells;
  for (int i = 0; i < n; ++i) {
    const double p = linspace(1.0 / 3.0, 0.5, i, n);
    for (int k = 0; k < n; ++k) {
      const double delta = linspace(0.0, 0.5, k, n);
      if (delta <= max_delta(p) + kGridSlack) cells.emplace_back(p, delta);
    }
  }
  std::vector<SweepRow> rows(cells.size());
  parallel_for(cells.size(), threads, [&](std::size_t i) { rows[i] = make_sweep_row(cells[i].first, cells[i].second); });
  sort_rows(rows, &SweepRow::p, &SweepRow::delta);
  return rows;
}

double min_p_for_delta(double delta) { return std::max({1.0 / 3.0, (1.0 + delta) / 3.0, delta}); }

namespace {

std::vector<CurveRow> run_curves(const std::vector<std::pair<double, double>>& points, unsigned threads) {
  std::vector<CurveRow> rows(points.size());
  parallel_for(points.size(), threads, [&](std::size_t i) { rows[i] = make_curve_row(points[i].first, points[i].second); });
  std::stable_sort(rows.begin(), rows.end(), [](const CurveRow& a, const CurveRow& b) {
    return a.base.p != b.base.p ? a.base.p < b.base.p : a.base.delta < b.base.delta;
  });
  return rows;
}

}  // namespace

std::vector<CurveRow> curves_at_p(const std::vector<double>& p_values, int steps, unsigned threads) {
  check_steps(steps);
  std::vector<std::pair<double, double>> points;
  for (double p : p_values) {
    if (!(p >= 1.0 / 3.0 - kPriorTolerance && p <= 0.5 + kPriorTolerance)) {
      throw DomainError("p must lie in [1/3, 1/2]");
    }
    const double hi = std::max(0.0, max_delta(p));
    for (int k = 0; k < steps; ++k) points.emplace_back(p, linspace(0.0, hi, k, steps));
  }
  return run_curves(points, threads);
}

std::vector<CurveRow> curves_at_delta(const std::vector<double>& delta_values, int steps, unsigned threads) {
  check_steps(steps);
  std::vector<std::pair<double, double>> points;
  for (double delta : delta_values) {
    if (!(delta >= 0.0 && delta <= 0.5)) throw DomainError("delta must lie in [0, 1/2]");
    const double lo = min_p_for_delta(delta);
    for (int k = 0; k < steps; ++k) points.emplace_back(linspace(lo, 0.5, k, steps), delta);
  }
  return run_curves(points, threads);
}

std::vector<ConfidenceRow> confidence_sweep(double delta, int steps, unsigned threads) {
  check_steps(steps);
  if (!(delta >= 0.0 && delta <= 0.5)) throw DomainError("delta must lie in [0, 1/2]");
  const double lo = min_p_for_delta(delta);
  std::vector<ConfidenceRow> rows(static_cast<std::size_t>(steps));
  parallel_for(rows.size(), threads, [&](std::size_t k) {
    rows[k] = make_confidence_row(linspace(lo, 0.5, static_cast<int>(k), steps), delta);
  });
  sort_rows(rows, &ConfidenceRow::p, &ConfidenceRow::delta);
  return rows;
}

// -------------------------------------------------------------------- CSV

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

std::vector<std::string> sweep_header() {
  return {"p", "delta", "p0", "p1", "p2", "strategy", "p_correct", "determinant",
          "confidence_0", "confidence_1", "confidence_2", "critical_delta"};
}

std::vector<std::string> sweep_fields(const SweepRow& r) {
  return {field(r.p),          field(r.delta),         field(r.p0),         field(r.p1),
          field(r.p2),         r.strategy,             field(r.p_correct),  field(r.determinant),
          field(r.confidence[0]), field(r.confidence[1]), field(r.confidence[2]), field(r.critical_delta)};
}

}  // namespace

CsvTable to_csv(const std::vector<SweepRow>& rows) {
  CsvTable t{sweep_header(), {}};
  for (const auto& r : rows) t.rows.push_back(sweep_fields(r));
  return t;
}

CsvTable to_csv(const std::vector<CurveRow>& rows) {
  CsvTable t{sweep_header(), {}};
  for (const char* extra : {"p_2el", "p_3el", "p_3el_valid"}) t.header.emplace_back(extra);
  for (const auto& r : rows) {
    auto f = sweep_fields(r.base);
    f.push_back(field(r.p_2el));
    f.push_back(field(r.p_3el));
    f.emplace_back(r.p_3el_valid ? "true" : "false");
    t.rows.push_back(std::move(f));
  }
  return t;
}

CsvTable to_csv(const std::vector<ConfidenceRow>& rows) {
  CsvTable t{{"p", "delta", "p0", "p1", "p2", "strategy", "confidence_0", "confidence_1", "confidence_2",
              "min_error_confidence_0", "min_error_confidence_1", "min_error_confidence_2",
              "inconclusive_probability"},
             {}};
  for (const auto& r : rows) {
    t.rows.push_back({field(r.p), field(r.delta), field(r.p0), field(r.p1), field(r.p2), r.strategy,
                      field(r.confidence[0]), field(r.confidence[1]), field(r.confidence[2]),
                      field(r.min_error_confidence[0]), field(r.min_error_confidence[1]),
                      field(r.min_error_confidence[2]), field(r.inconclusive_probability)});
  }
  return t;
}

void write_csv(std::ostream& out, const std::string& metadata, const CsvTable& table) {
  out << "# " << metadata << '\n';
  auto line = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out << ',';
      out << csv_escape(fields[i]);
    }
    out << '\n';
  };
  line(table.header);
  for (const auto& r : table.rows) line(r);
}

// ----------------------------------------------------------------- verify

Priors verify_sample_priors(std::uint64_t seed, int index) {
  std::mt19937_64 eng(partition_seed(seed, static_cast<std::uint64_t>(index)));
  std::array<double, 3> q{};
  if (index % 2 == 0) {
    double sum = 0.0;
    for (double& x : q) {
      x = -std::log1p(-uniform01(eng));
      sum += x;
    }
    for (double& x : q) x /= sum;
  } else {
    // p below 1/2 keeps every prior positive.
    const double p = 1.0 / 3.0 + uniform01(eng) * (0.5 - 1.0 / 3.0);
    const double lo = critical_delta(p).value_or(0.0);
    const double hi = max_delta(p);
    const Priors canon = priors_from_p_delta(p, lo + uniform01(eng) * (hi - lo));
    q = canon.sorted();
  }
  for (int i = 2; i > 0; --i) {
    const auto j = static_cast<int>(uniform01(eng) * (i + 1));
    std::swap(q[i], q[std::min(j, i)]);
  }
  return canonicalize_priors(q[0], q[1], q[2]);
}

VerifyReport run_verification(const VerifyOptions& options) {
  if (options.samples < 1) throw InvalidInputError("samples must be at least 1");
  if (!(options.tolerance > 0.0)) throw InvalidInputError("tolerance must be positive");

  std::vector<std::vector<VerifyCase>> per_sample(static_cast<std::size_t>(options.samples));
  parallel_for(per_sample.size(), options.threads, [&](std::size_t s) {
    const int index = static_cast<int>(s);
    const Priors priors = verify_sample_priors(options.seed, index);
    auto& cases = per_sample[s];

    const OptimalResult opt = optimal_measurement(priors);
    const OracleResult brute = brute_force_min_error(priors, options.resolution, options.refinements);
    cases.push_back({index, priors, "p_correct", opt.p_correct, brute.best_value,
                     std::abs(opt.p_correct - brute.best_value)});

    if (is_pure(priors)) return;
    for (int i = 0; i < kNumStates; ++i) {
      const double closed = mc_confidence_closed_form(priors, i);
      const double found = brute_force_max_confidence(priors, i, options.resolution, options.refinements).best_value;
      cases.push_back({index, priors, "confidence_" + std::to_string(i), closed, found, std::abs(closed - found)});
    }
  });

  VerifyReport report;
  report.samples = options.samples;
  report.tolerance = options.tolerance;
  bool first = true;
  for (const auto& cases : per_sample) {
    for (const auto& c : cases) {
      ++report.comparisons;
      if (!(c.error <= options.tolerance)) ++report.mismatches;
      if (first || c.error > report.worst.error) {
        report.worst = c;
        first = false;
      }
    }
  }
  report.passed = report.mismatches == 0;
  return report;
}

nlohmann::json verify_report_json(const VerifyReport& report) {
  const VerifyCase& w = report.worst;
  return nlohmann::json{{"samples", report.samples},
                        {"tolerance", report.tolerance},
                        {"comparisons", report.comparisons},
                        {"mismatches", report.mismatches},
                        {"passed", report.passed},
                        {"worst",
                         {{"sample", w.sample},
                          {"priors", w.priors},
                          {"quantity", w.quantity},
                          {"closed_form", round_significant(w.closed_form)},
                          {"oracle", round_significant(w.oracle)},
                          {"error", round_significant(w.error)}}}};
}

}  // namespace trine
