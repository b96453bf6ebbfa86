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

// trine: command-line front end.
//
// Exit codes: 0 ok, 2 usage or domain error, 3 internal verification
// failure, 4 I/O error, 5 oracle mismatch in `verify`.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "trine/errors.hpp"
#include "trine/max_confidence.hpp"
#include "trine/min_error.hpp"
#include "trine/report_io.hpp"
#include "trine/simulate.hpp"
#include "trine/sweep.hpp"

namespace {

using nlohmann::json;
using namespace trine;

enum ExitCode : int { kOk = 0, kUsage = 2, kVerification = 3, kIo = 4, kMismatch = 5 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PriorArgs {
  std::optional<double> p0, p1, p2, p, delta;

  void attach(CLI::App* cmd) {
    cmd->add_option("--p0", p0, "Prior of state 0");
    cmd->add_option("--p1", p1, "Prior of state 1");
    cmd->add_option("--p2", p2, "Prior of state 2");
    cmd->add_option("--p", p, "(p0 + p1) / 2 in the (p, delta) form");
    cmd->add_option("--delta", delta, "(p0 - p1) / 2 in the (p, delta) form");
  }

  [[nodiscard]] bool has_triple() const { return p0 || p1 || p2; }

  [[nodiscard]] Priors resolve() const {
    if (has_triple()) {
      if (p || delta) throw InvalidInputError("give either --p0/--p1/--p2 or --p/--delta, not both");
      if (!(p0 && p1 && p2)) throw InvalidInputError("--p0, --p1 and --p2 must be given together");
      return canonicalize_priors(*p0, *p1, *p2);
    }
    if (!p) throw InvalidInputError("priors required: --p0 --p1 --p2 or --p [--delta]");
    return priors_from_p_delta(*p, delta.value_or(0.0));
  }
};

std::string metadata(int argc, char** argv) {
  std::string out = std::string("trine ") + TRINE_VERSION;
  for (int i = 1; i < argc; ++i) {
    out += ' ';
    out += argv[i];
  }
  return out;
}

void with_output(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path == "-") {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  write(file);
  file.flush();
  if (!file) throw IoError("error writing '" + path + "'");
}

std::string matrix_text(const HermitianMatrix2& m) {
  auto c = [&](int r, int k) {
    return "(" + format_number(m(r, k).real()) + (m(r, k).imag() < 0 ? " - " : " + ") +
           format_number(std::abs(m(r, k).imag())) + "i)";
  };
  return "[[" + c(0, 0) + ", " + c(0, 1) + "], [" + c(1, 0) + ", " + c(1, 1) + "]]";
}

void print_optimal(std::ostream& out, const OptimalResult& r) {
  const Priors& pr = r.priors;
  out << "priors: " << format_number(pr.caller(0)) << ' ' << format_number(pr.caller(1)) << ' '
      << format_number(pr.caller(2)) << "  (p = " << format_number(pr.p()) << ", delta = " << format_number(pr.delta())
      << ")\n";
  out << "strategy: " << to_string(r.strategy) << '\n';
  out << "boundary_determinant: " << format_number(r.boundary_determinant) << '\n';
  if (r.theta) out << "theta: " << format_number(*r.theta) << '\n';
  if (r.gamma) {
    out << "gamma_inverse_bloch: a = " << format_number(r.gamma->a) << ", b_x = " << format_number(r.gamma->b_x)
        << ", b_y = " << format_number(r.gamma->b_y) << '\n';
    out << "gamma: " << matrix_text(r.gamma->gamma) << '\n';
  }
  for (const auto& e : r.measurement.elements()) {
    out << "element " << e.label.to_string() << ": " << matrix_text(e.element) << '\n';
  }
  out << "p_correct: " << format_number(r.p_correct) << '\n';
  out << "helstrom: max_offdiag_residual = " << format_number(r.helstrom.max_offdiag_residual)
      << ", min_global_eigenvalue = " << format_number(r.helstrom.min_global_eigenvalue)
      << ", passes = " << (r.helstrom.passes ? "true" : "false") << '\n';
}

Measurement pick_measurement(const std::string& strategy, const Priors& priors) {
  if (strategy == "optimal") return optimal_measurement(priors).measurement;
  if (strategy == "trine") return trine_measurement();
  if (strategy == "antitrine") return antitrine_measurement();
  if (strategy == "max-confidence") return mc_povm(priors);
  throw InvalidInputError("unknown strategy '" + strategy + "'");
}

double analytic_success(const Priors& priors, const Measurement& m) {
  double total = 0.0;
  for (int i = 0; i < kNumStates; ++i) total += priors.caller(i) * trine_projector(i).trace_product(m.identifying(i));
  return total;
}

int run(int argc, char** argv) {
  CLI::App app{"Optimal discrimination of the qubit trine states"};
  app.set_version_flag("--version", std::string(TRINE_VERSION));
  app.require_subcommand(1);

  // optimal
  PriorArgs optimal_priors;
  bool optimal_json = false;
  auto* optimal = app.add_subcommand("optimal", "Minimum-error measurement for one prior triple");
  optimal_priors.attach(optimal);
  optimal->add_flag("--json", optimal_json, "Emit JSON");

  // region
  int grid = 200;
  std::string region_out = "-";
  auto* region = app.add_subcommand("region", "Strategy map over the (p, delta) plane as CSV");
  region->add_option("--grid", grid, "Grid points per axis (>= 2)");
  region->add_option("--out", region_out, "Output file, '-' for stdout");

  // curves
  std::vector<double> p_values;
  std::vector<double> delta_values;
  int curve_steps = 201;
  std::string curves_out = "-";
  auto* curves = app.add_subcommand("curves", "Success probability curves as CSV");
  auto* p_opt = curves->add_option("--p-values", p_values, "Comma-separated p values; sweeps delta")->delimiter(',');
  auto* d_opt =
      curves->add_option("--delta-values", delta_values, "Comma-separated delta values; sweeps p")->delimiter(',');
  p_opt->excludes(d_opt);
  curves->add_option("--steps", curve_steps, "Points per curve (>= 2)");
  curves->add_option("--out", curves_out, "Output file, '-' for stdout");

  // confidence
  PriorArgs conf_priors;
  bool conf_sweep = false;
  int conf_steps = 201;
  std::string conf_out = "-";
  auto* conf = app.add_subcommand("confidence", "Maximum-confidence and minimum-error outcome confidences");
  conf_priors.attach(conf);
  conf->add_flag("--sweep", conf_sweep, "Sweep p at the given --delta and emit CSV");
  conf->add_option("--steps", conf_steps, "Points in the sweep (>= 2)");
  conf->add_option("--out", conf_out, "Output file, '-' for stdout");

  // verify
  VerifyOptions vopt;
  bool verify_json = false;
  auto* verify = app.add_subcommand("verify", "Check closed forms against the brute-force oracle");
  verify->add_option("--samples", vopt.samples, "Number of random prior triples (>= 1)");
  verify->add_option("--seed", vopt.seed, "Seed for the prior sampler");
  verify->add_option("--tolerance", vopt.tolerance, "Largest accepted |closed form - oracle|");
  verify->add_option("--resolution", vopt.resolution, "Oracle grid points per angle");
  verify->add_option("--refinements", vopt.refinements, "Oracle refinement levels");
  verify->add_option("--threads", vopt.threads, "Worker threads (0 = all cores)");
  verify->add_flag("--json", verify_json, "Emit JSON");

  // simulate
  PriorArgs sim_priors;
  std::uint64_t shots = 1000000;
  std::uint64_t seed = 1;
  std::string strategy = "optimal";
  std::string outcome;
  std::string sim_out = "-";
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of success or confidence");
  sim_priors.attach(simulate);
  simulate->add_option("--shots", shots, "Number of shots");
  simulate->add_option("--seed", seed, "Random seed");
  simulate->add_option("--strategy", strategy, "optimal | trine | antitrine | max-confidence");
  simulate->add_option("--outcome", outcome, "Estimate the confidence of this outcome, e.g. identify_2");
  simulate->add_option("--out", sim_out, "Output file, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  const std::string meta = metadata(argc, argv);
  const unsigned threads = resolve_threads();

  if (optimal->parsed()) {
    const OptimalResult r = optimal_measurement(optimal_priors.resolve());
    if (optimal_json) {
      std::cout << json(r).dump(2) << '\n';
    } else {
      print_optimal(std::cout, r);
    }
    return kOk;
  }

  if (region->parsed()) {
    const auto rows = region_sweep(grid, threads);
    with_output(region_out, [&](std::ostream& out) { write_csv(out, meta, to_csv(rows)); });
    return kOk;
  }

  if (curves->parsed()) {
    if (p_values.empty() && delta_values.empty()) throw InvalidInputError("give --p-values or --delta-values");
    const auto rows =
        p_values.empty() ? curves_at_delta(delta_values, curve_steps, threads) : curves_at_p(p_values, curve_steps, threads);
    with_output(curves_out, [&](std::ostream& out) { write_csv(out, meta, to_csv(rows)); });
    return kOk;
  }

  if (conf->parsed()) {
    if (conf_sweep) {
      if (conf_priors.has_triple() || conf_priors.p) throw InvalidInputError("--sweep takes only --delta");
      const auto rows = confidence_sweep(conf_priors.delta.value_or(0.0), conf_steps, threads);
      with_output(conf_out, [&](std::ostream& out) { write_csv(out, meta, to_csv(rows)); });
      return kOk;
    }
    const Priors priors = conf_priors.resolve();
    const ConfidenceReport report = confidence_report(priors);
    const auto min_err = min_error_confidence(priors);
    json j = report;
    j["priors"] = priors;
    j["min_error_confidence"] = json::array();
    for (const auto& c : min_err) j["min_error_confidence"].push_back(c ? json(round_significant(*c)) : json(nullptr));
    with_output(conf_out, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
    return kOk;
  }

  if (verify->parsed()) {
    if (vopt.threads == 0) vopt.threads = threads;
    const VerifyReport report = run_verification(vopt);
    if (verify_json) {
      std::cout << verify_report_json(report).dump(2) << '\n';
    } else {
      const VerifyCase& w = report.worst;
      std::cout << (report.passed ? "PASS" : "FAIL") << ": " << report.comparisons << " comparisons over "
                << report.samples << " samples, " << report.mismatches << " above tolerance "
                << format_number(report.tolerance) << '\n';
      std::cout << "worst: sample " << w.sample << " priors (" << format_number(w.priors.caller(0)) << ", "
                << format_number(w.priors.caller(1)) << ", " << format_number(w.priors.caller(2)) << ") "
                << w.quantity << " closed_form " << format_number(w.closed_form) << " oracle "
                << format_number(w.oracle) << " error " << format_number(w.error) << '\n';
    }
    return report.passed ? kOk : kMismatch;
  }

  if (simulate->parsed()) {
    if (shots == 0) throw InvalidInputError("--shots must be at least 1");
    const Priors priors = sim_priors.resolve();
    const Measurement m = pick_measurement(strategy, priors);
    json j;
    j["strategy"] = strategy;
    j["priors"] = priors;
    EmpiricalResult r;
    double analytic = 0.0;
    if (outcome.empty()) {
      r = estimate_success(priors, m, shots, seed, threads);
      analytic = analytic_success(priors, m);
      j["quantity"] = "p_success";
    } else {
      const Label label = Label::parse(outcome);
      r = estimate_confidence(priors, m, label, shots, seed, threads);
      analytic = confidence(priors, m, label);
      j["quantity"] = "confidence_" + label.to_string();
    }
    j["empirical"] = r;
    j["analytic"] = round_significant(analytic);
    j["se_multiple"] =
        r.standard_error > 0.0 ? json(round_significant(std::abs(r.estimate - analytic) / r.standard_error)) : json(nullptr);
    with_output(sim_out, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
    return kOk;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const trine::VerificationError& e) {
    std::cerr << "verification error: " << e.what() << '\n';
    return kVerification;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const trine::TrineError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kVerification;
  }
}
