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

#include "trine/simulate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "trine/errors.hpp"

namespace trine {

namespace {

using CountTable = std::vector<std::array<std::uint64_t, 3>>;  // [outcome][state]

double uniform01(std::mt19937_64& eng) { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }

struct Sampler {
  std::array<double, 3> prior_cdf{};
  std::array<std::vector<double>, 3> outcome_cdf;  // per state

  Sampler(const Priors& priors, const Measurement& m) {
    const auto validity = m.validity();
    if (!validity.is_valid) throw InvalidInputError("measurement is not a valid POVM");
    double acc = 0.0;
    for (int i = 0; i < kNumStates; ++i) {
      acc += priors.caller(i);
      prior_cdf[i] = acc;
    }
    prior_cdf[2] = 1.0;
    for (int i = 0; i < kNumStates; ++i) {
      const HermitianMatrix2 rho = trine_projector(i);
      std::vector<double> probs;
      double total = 0.0;
      for (const auto& e : m.elements()) {
        probs.push_back(std::max(0.0, rho.trace_product(e.element)));
        total += probs.back();
      }
      if (!(std::abs(total - 1.0) <= kPsdTolerance)) throw InvalidInputError("outcome probabilities do not sum to 1");
      double run = 0.0;
      for (double& p : probs) {
        run += p / total;
        p = run;
      }
      probs.back() = 1.0;
      outcome_cdf[i] = std::move(probs);
    }
  }

  [[nodiscard]] static std::size_t draw(const double* cdf, std::size_t n, double u) {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (u < cdf[k]) return k;
    }
    return n - 1;
  }

  void run_partition(std::uint64_t seed, std::uint64_t partition, std::uint64_t shots, CountTable& counts) const {
    std::mt19937_64 eng(partition_seed(seed, partition));
    for (std::uint64_t s = 0; s < shots; ++s) {
      const auto state = draw(prior_cdf.data(), 3, uniform01(eng));
      const auto& cdf = outcome_cdf[state];
      const auto outcome = draw(cdf.data(), cdf.size(), uniform01(eng));
      ++counts[outcome][state];
    }
  }
};

CountTable simulate_counts(const Priors& priors, const Measurement& m, std::uint64_t shots, std::uint64_t seed,
                           unsigned threads) {
  if (shots == 0) throw InvalidInputError("shots must be at least 1");
  const Sampler sampler(priors, m);
  const std::uint64_t partitions = (shots + kShotsPerPartition - 1) / kShotsPerPartition;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, partitions));

  std::vector<CountTable> partial(workers, CountTable(m.size(), {0, 0, 0}));
  auto work = [&](unsigned w) {
    for (std::uint64_t p = w; p < partitions; p += workers) {
      const std::uint64_t begin = p * kShotsPerPartition;
      sampler.run_partition(seed, p, std::min(kShotsPerPartition, shots - begin), partial[w]);
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
    work(0);
  }
  CountTable total(m.size(), {0, 0, 0});
  for (const auto& t : partial) {
    for (std::size_t o = 0; o < t.size(); ++o) {
      for (int i = 0; i < kNumStates; ++i) total[o][i] += t[o][i];
    }
  }
  return total;
}

void fill_estimate(EmpiricalResult& r) {
  r.estimate = r.shots > 0 ? static_cast<double>(r.successes) / static_cast<double>(r.shots) : 0.0;
  r.standard_error = r.shots > 0 ? std::sqrt(r.estimate * (1.0 - r.estimate) / static_cast<double>(r.shots)) : 0.0;
}

EmpiricalResult base_result(const Measurement& m, const CountTable& counts, std::uint64_t shots,
                            std::uint64_t seed) {
  EmpiricalResult r;
  r.seed = seed;
  r.total_shots = shots;
  for (std::size_t o = 0; o < counts.size(); ++o) {
    r.per_outcome_counts[m.elements()[o].label.to_string()] = counts[o][0] + counts[o][1] + counts[o][2];
  }
  return r;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  std::uint64_t z = x + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t partition_seed(std::uint64_t seed, std::uint64_t partition) {
  return splitmix64(seed ^ splitmix64(partition));
}

EmpiricalResult estimate_success(const Priors& priors, const Measurement& m, std::uint64_t shots,
                                 std::uint64_t seed, unsigned threads) {
  const CountTable counts = simulate_counts(priors, m, shots, seed, threads);
  EmpiricalResult r = base_result(m, counts, shots, seed);
  r.shots = shots;
  for (std::size_t o = 0; o < counts.size(); ++o) {
    const Label& l = m.elements()[o].label;
    if (l.kind == OutcomeKind::Identify) r.successes += counts[o][l.state];
  }
  fill_estimate(r);
  return r;
}

EmpiricalResult estimate_confidence(const Priors& priors, const Measurement& m, const Label& outcome,
                                    std::uint64_t shots, std::uint64_t seed, unsigned threads) {
  if (outcome.kind != OutcomeKind::Identify) {
    throw InvalidInputError("confidence is defined for outcomes that identify a state");
  }
  const auto& elems = m.elements();
  const auto it = std::find_if(elems.begin(), elems.end(), [&](const auto& e) { return e.label == outcome; });
  if (it == elems.end()) throw InvalidInputError("measurement has no outcome " + outcome.to_string());
  const auto index = static_cast<std::size_t>(it - elems.begin());

  const CountTable counts = simulate_counts(priors, m, shots, seed, threads);
  EmpiricalResult r = base_result(m, counts, shots, seed);
  r.shots = counts[index][0] + counts[index][1] + counts[index][2];
  if (r.shots < kMinConditionedShots) {
    throw InsufficientDataError("only " + std::to_string(r.shots) + " shots produced outcome " +
                                outcome.to_string());
  }
  r.successes = counts[index][outcome.state];
  fill_estimate(r);
  return r;
}

}  // namespace trine
