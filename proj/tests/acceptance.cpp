// Copyright 2026 The Subcover Authors
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

// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Set SUBCOVER_FREEZE_BASELINE=1 to (re)write the competitive baseline file
// from the current run instead of comparing against it.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "subcover/baselines.hpp"
#include "subcover/checks.hpp"
#include "subcover/engine.hpp"
#include "subcover/extensions.hpp"
#include "subcover/instance.hpp"
#include "subcover/separation.hpp"
#include "subcover/trial.hpp"

using namespace subcover;

namespace {

SetFunctionPtr RandomOracle(int n, std::mt19937_64& rng) {
  // coverage, partition matroid rank, or their sum; integer values
  const auto coverage = [&]() -> SetFunctionPtr {
    const int items = 1 + static_cast<int>(rng() % (2 * n));
    std::vector<std::vector<int>> owned(n);
    std::vector<double> weights(items);
    for (int it = 0; it < items; ++it) {
      weights[it] = 1.0 + static_cast<double>(rng() % 5);
      bool covered = false;
      while (!covered) {
        for (int j = 0; j < n; ++j) {
          if (rng() % 100 < 35) {
            owned[j].push_back(it);
            covered = true;
          }
        }
      }
    }
    return std::make_shared<WeightedCoverage>(n, owned, weights);
  };
  const auto matroid = [&]() -> SetFunctionPtr {
    std::vector<Mask> parts;
    std::vector<int> caps;
    Mask remaining = FullMask(n);
    while (remaining) {
      Mask part = 0;
      const int want = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < n && Popcount(part) < want; ++j) {
        if (Contains(remaining, j)) part = With(part, j);
      }
      remaining &= ~part;
      parts.push_back(part);
      caps.push_back(1 + static_cast<int>(rng() % Popcount(part)));
    }
    return std::make_shared<PartitionMatroidRank>(n, parts, caps);
  };
  switch (rng() % 3) {
    case 0:
      return coverage();
    case 1:
      return matroid();
    default:
      return std::make_shared<SumFunction>(
          n, std::vector<SetFunctionPtr>{coverage(), matroid()});
  }
}

Mask RandomMask(int n, std::mt19937_64& rng) {
  return static_cast<Mask>(rng()) & FullMask(n);
}

FractionalPoint RandomPoint(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  FractionalPoint x(n);
  for (int j = 0; j < n; ++j) x.x[j] = unif(rng);
  return x;
}

// ---------------------------------------------------------------------------

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome Criterion1() {
  const Instance inst = MakeThreeElementFixture();
  const SetFunctionPtr f = inst.FunctionAt(1);
  const FractionalPoint x({0.75, 0.5, 0.0});

  const SetFunctionPtr gy = Anchored(f, 2);
  const double expectation = MultilinearExact(*gy, x);
  const double half_full = 0.5 * gy->value(gy->full());
  if (std::abs(expectation - 0.375) > 1e-12) {
    return {false, "anchored expectation " + FormatDouble(expectation)};
  }
  if (!(expectation < half_full)) {
    return {false, "anchored expectation not below half the requirement"};
  }

  for (Mask s = 0; s <= f->full(); ++s) {
    const SetFunctionPtr fs = Contract(f, s);
    const double value = MultilinearExact(*fs, x);
    const double need = 0.5 * fs->value(fs->full());
    if (value < need - 1e-12) {
      std::ostringstream os;
      os << "base rounding bound fails at S=0x" << std::hex << s;
      return {false, os.str()};
    }
  }
  return {true, "anchored expectation 3/8 < 1/2; base bound holds on all 8 sets"};
}

Outcome Criterion2() {
  std::mt19937_64 rng(1002);
  const double ratio = 1.0 - std::exp(-1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);  // n <= 8
    const SetFunctionPtr f = MaybeMemoize(RandomOracle(n, rng));
    const FractionalPoint x = RandomPoint(n, rng);
    const double multilinear = MultilinearExact(*f, x);
    const double covering = CoveringExtensionExact(*f, x).value;
    if (multilinear < ratio * covering - 1e-9) {
      return {false, "oracle " + std::to_string(trial) + " breaks the bound"};
    }
  }
  return {true, "200 exact comparisons, zero failures"};
}

Outcome Criterion3() {
  std::mt19937_64 rng(1003);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const SetFunctionPtr f = MaybeMemoize(RandomOracle(n, rng));
    const Mask a = RandomMask(n, rng);
    const Mask b1 = RandomMask(n, rng);
    const Mask b2 = RandomMask(n, rng);
    const Mask c = RandomMask(n, rng);
    const double lhs = MutualCoverage(*f, a, b1 | b2, c);
    const double rhs =
        MutualCoverage(*f, a, b1, c) + MutualCoverage(*f, a, b2, c | b1);
    if (lhs != rhs) {
      return {false, "tuple " + std::to_string(trial) + " broke the identity"};
    }
  }
  return {true, "1000 exact identities, zero failures"};
}

// Shared suite for criteria 4, 5 and 9.

struct SuiteConfigResult {
  std::string kind;
  int n = 0;
  int horizon = 0;
  bool completed = false;       // no feasibility/monotonicity exception
  bool budget_ok = false;       // every seed within 2n violation fixes
  double median_ratio = 0.0;    // median over seeds of per-trial medians
  double max_ratio = 0.0;       // max over seeds
  double envelope = 0.0;        // 4 ln(n) ln(T f(N)/fmin)
  std::string error;
};

SuiteConfigResult RunSuiteConfig(const std::string& kind, int n, int horizon,
                                 Variant variant) {
  SuiteConfigResult out;
  out.kind = kind;
  out.n = n;
  out.horizon = horizon;
  GeneratorParams params;
  params.n = n;
  params.t = horizon;
  params.density = 0.3;
  params.seed = static_cast<std::uint64_t>(n * 131 + horizon * 17 +
                                           (kind == "prefix-coverage" ? 1 : 0) +
                                           (kind == "partition-matroid" ? 2 : 0));
  try {
    const Instance inst = Generate(kind, params);
    TrialConfig config;
    config.variant = variant;
    config.eps = 1.0;
    config.seeds.clear();
    for (std::uint64_t s = 0; s < 20; ++s) config.seeds.push_back(s);
    const RunResult result = RunTrials(inst, config);

    out.budget_ok = true;
    std::vector<double> medians;
    for (const TrialOutcome& trial : result.trials) {
      if (trial.total_violations > 2 * n) out.budget_ok = false;
      medians.push_back(trial.median_ratio);
      out.max_ratio = std::max(out.max_ratio, trial.max_ratio);
    }
    out.median_ratio = Median(medians);

    const SetFunctionPtr last = inst.FunctionAt(inst.horizon());
    const double fn = last->value(last->full());
    out.envelope = 4.0 * std::log(static_cast<double>(n)) *
                   std::log(horizon * fn / inst.fmin);
    out.completed = true;
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

struct SuiteResults {
  std::vector<SuiteConfigResult> generic;  // all kinds
  std::vector<SuiteConfigResult> three;    // coverage kinds only
};

SuiteResults RunSuite() {
  const std::vector<std::string> kinds = {"set-cover-stream", "prefix-coverage",
                                          "partition-matroid"};
  struct Job {
    std::string kind;
    int n;
    int horizon;
    Variant variant;
  };
  std::vector<Job> jobs;
  for (const std::string& kind : kinds) {
    for (const int n : {8, 10, 12}) {
      for (const int horizon : {15, 25}) {
        jobs.push_back({kind, n, horizon, Variant::kGeneric});
        if (kind != "partition-matroid") {
          jobs.push_back({kind, n, horizon, Variant::kThreeIncreasing});
        }
      }
    }
  }
  std::vector<std::future<SuiteConfigResult>> futures;
  for (const Job& job : jobs) {
    futures.push_back(std::async(std::launch::async, RunSuiteConfig, job.kind,
                                 job.n, job.horizon, job.variant));
  }
  SuiteResults out;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    SuiteConfigResult r = futures[i].get();
    (jobs[i].variant == Variant::kGeneric ? out.generic : out.three)
        .push_back(std::move(r));
  }
  return out;
}

Outcome Criterion4(const SuiteResults& suite) {
  int runs = 0;
  for (const auto* group : {&suite.generic, &suite.three}) {
    for (const SuiteConfigResult& r : *group) {
      if (!r.completed) {
        return {false, r.kind + " n=" + std::to_string(r.n) + ": " + r.error};
      }
      runs += 20;
    }
  }
  return {true, std::to_string(runs) + " runs, all feasible and monotone"};
}

Outcome Criterion5(const SuiteResults& suite) {
  for (const auto* group : {&suite.generic, &suite.three}) {
    for (const SuiteConfigResult& r : *group) {
      if (!r.budget_ok) {
        return {false, "budget exceeded on " + r.kind +
                           " n=" + std::to_string(r.n) +
                           " T=" + std::to_string(r.horizon)};
      }
    }
  }
  return {true, "every run fixed at most 2n violations at eps=1"};
}

Outcome Criterion6() {
  // Cycle cover: item i belongs to elements i and i+1, so the fractional
  // optimum stays strictly inside the cube and the decay is observable.
  const int n = 8;
  std::vector<std::vector<int>> owned(n);
  for (int i = 0; i < n; ++i) {
    owned[i].push_back(i);
    owned[(i + 1) % n].push_back(i);
  }
  const SetFunctionPtr f = MaybeMemoize(std::make_shared<WeightedCoverage>(
      n, owned, std::vector<double>(n, 1.0)));

  EngineConfig config;
  config.variant = Variant::kSlowExplicit;
  config.seed = 0;
  CoverEngine engine(GroundSet(n), CostVector(std::vector<double>(n, 1.0)),
                     1.0, 2.0, config);
  engine.Advance(f);
  const FractionalPoint x = engine.lp().x();
  const double fn = f->value(f->full());
  bool fractional = false;
  for (int j = 0; j < n; ++j) {
    if (x[j] > 0.0 && x[j] < 1.0) fractional = true;
  }
  if (!fractional) return {false, "LP point degenerated to a corner"};

  std::ostringstream detail;
  for (const int k : {1, 2, 3}) {
    double sum = 0.0;
    double sum_sq = 0.0;
    const int trials = 500;
    for (int seed = 0; seed < trials; ++seed) {
      RoundingState state(n);
      for (int r = 0; r < k; ++r) {
        SampleRound(x, state, DeriveSeed(seed, 7000 + r));
      }
      const double deficiency = fn - f->value(state.sampled);
      sum += deficiency;
      sum_sq += deficiency * deficiency;
    }
    const double mean = sum / trials;
    const double pop_var = std::max(0.0, sum_sq / trials - mean * mean);
    const double stderr_mean = std::sqrt(pop_var / (trials - 1.0));
    const double bound = std::exp(-k) * fn + 3.0 * stderr_mean;
    if (mean > bound) {
      return {false, "k=" + std::to_string(k) + " mean " + FormatDouble(mean) +
                         " above " + FormatDouble(bound)};
    }
    detail << (k > 1 ? " " : "") << "k=" << k << ":" << FormatDouble(mean);
  }
  return {true, "mean deficiency " + detail.str() + " within e^-k decay"};
}

Outcome Criterion7() {
  struct GapCase {
    SetFunctionPtr f;
    FractionalPoint x;
  };
  std::vector<GapCase> corpus;
  {
    std::vector<std::vector<int>> owned(6, std::vector<int>{0});
    FractionalPoint x(6);
    for (int j = 0; j < 6; ++j) x.x[j] = 1.0 / 60.0;
    corpus.push_back({std::make_shared<WeightedCoverage>(
                          6, owned, std::vector<double>{1.0}),
                      x});
  }
  {
    std::vector<std::vector<int>> owned(8, std::vector<int>{0, 1});
    FractionalPoint x(8);
    for (int j = 0; j < 8; ++j) x.x[j] = 0.01;
    corpus.push_back({std::make_shared<WeightedCoverage>(
                          8, owned, std::vector<double>{1.0, 2.0}),
                      x});
  }
  {
    std::vector<std::vector<int>> owned(5);
    for (int j = 0; j < 5; ++j) owned[j] = {j};
    FractionalPoint x(5);
    for (int j = 0; j < 5; ++j) x.x[j] = 0.1;
    corpus.push_back({std::make_shared<WeightedCoverage>(
                          5, owned, std::vector<double>(5, 1.0)),
                      x});
  }
  {
    FractionalPoint x(6);
    for (int j = 0; j < 6; ++j) x.x[j] = 0.05;
    corpus.push_back({std::make_shared<PartitionMatroidRank>(
                          6, std::vector<Mask>{FullMask(6)},
                          std::vector<int>{2}),
                      x});
  }

  const double eps = 1.0;
  const double delta = 0.01;
  int total_calls = 0;
  int failures = 0;
  for (std::size_t c = 0; c < corpus.size(); ++c) {
    const GapCase& gap = corpus[c];
    const double fn = gap.f->value(gap.f->full());
    const double exact_f = MultilinearExact(*gap.f, gap.x);
    if (!(exact_f < fn / (std::exp(1.0) * (1.0 + eps)))) {
      return {false, "corpus case " + std::to_string(c) + " has no gap"};
    }
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      ++total_calls;
      const auto report = FindViolated(*gap.f, gap.x, eps, delta, seed);
      if (!report) {
        ++failures;
        continue;
      }
      const double lin = Linearization(*gap.f, report->set, gap.x);
      if (!(lin < (1.0 - eps / 2.0) * fn)) {
        return {false, "returned set fails exact re-verification"};
      }
    }
  }
  // one-sided binomial at 95%: failures may exceed delta·calls by 1.645 sd
  const double allowed =
      delta * total_calls +
      1.645 * std::sqrt(total_calls * delta * (1.0 - delta));
  if (failures > allowed) {
    return {false, std::to_string(failures) + " misses in " +
                       std::to_string(total_calls) + " calls"};
  }
  return {true, std::to_string(failures) + "/" + std::to_string(total_calls) +
                    " misses, every certificate re-verified"};
}

Outcome Criterion8() {
  std::mt19937_64 rng(1008);
  int checked = 0;
  while (checked < 100) {
    const int n = 4 + static_cast<int>(rng() % 9);  // n <= 12
    const SetFunctionPtr f = MaybeMemoize(RandomOracle(n, rng));
    if (f->value(f->full()) == 0.0) continue;
    std::vector<double> costs(n);
    for (double& c : costs) c = 1.0 + static_cast<double>(rng() % 5);
    const CostVector cv(costs);

    const MarginalBounds bounds = ScanMarginalBounds(*f);
    const double guarantee = 1.0 + std::log(bounds.fmax / bounds.fmin);
    const GreedyResult greedy = WolseyGreedy(*f, cv);
    const OptResult opt = BruteOpt(*f, cv);
    if (greedy.cost > guarantee * opt.cost + 1e-9) {
      return {false, "instance " + std::to_string(checked) +
                         " exceeds the logarithmic bound"};
    }
    ++checked;
  }
  return {true, "100 instances within (1 + ln(fmax/fmin)) of optimum"};
}

Outcome Criterion9(const SuiteResults& suite, const std::string& baseline_path,
                   bool freeze) {
  for (const SuiteConfigResult& r : suite.generic) {
    if (!r.completed) return {false, "suite incomplete"};
    if (r.median_ratio > r.envelope) {
      return {false, r.kind + " n=" + std::to_string(r.n) + " median " +
                         FormatDouble(r.median_ratio) + " above envelope " +
                         FormatDouble(r.envelope)};
    }
  }

  nlohmann::json current = nlohmann::json::array();
  for (const SuiteConfigResult& r : suite.generic) {
    current.push_back({{"kind", r.kind},
                       {"n", r.n},
                       {"t", r.horizon},
                       {"median_ratio", r.median_ratio},
                       {"max_ratio", r.max_ratio}});
  }

  if (freeze) {
    std::ofstream out(baseline_path, std::ios::binary);
    if (!out) return {false, "cannot write " + baseline_path};
    out << current.dump(2) << "\n";
    return {true, "baseline frozen to " + baseline_path};
  }

  std::ifstream in(baseline_path, std::ios::binary);
  if (!in) {
    return {false, "missing baseline file " + baseline_path +
                       " (run with SUBCOVER_FREEZE_BASELINE=1)"};
  }
  nlohmann::json frozen;
  in >> frozen;
  if (frozen.size() != current.size()) {
    return {false, "baseline configuration count changed"};
  }
  for (std::size_t i = 0; i < frozen.size(); ++i) {
    const auto& want = frozen[i];
    const auto& have = current[i];
    if (want["kind"] != have["kind"] || want["n"] != have["n"] ||
        want["t"] != have["t"]) {
      return {false, "baseline configuration order changed"};
    }
    for (const char* field : {"median_ratio", "max_ratio"}) {
      const double expect = want[field].get<double>();
      const double got = have[field].get<double>();
      const double slack = 0.10 * std::max(expect, 1.0);
      if (std::abs(got - expect) > slack) {
        return {false, std::string(field) + " drifted on " +
                           want["kind"].get<std::string>() +
                           " n=" + std::to_string(want["n"].get<int>()) + ": " +
                           FormatDouble(got) + " vs " + FormatDouble(expect)};
      }
    }
  }
  return {true, "all ratios within 10% of the frozen baseline and envelope"};
}

Outcome Criterion10() {
  const Instance inst = MakeVanishingStream();
  const auto witness = CheckTimeMonotone(inst.FunctionSequence());
  if (!witness || witness->t != 2 || witness->s != 0) {
    return {false, "checker witness missing or wrong"};
  }
  EngineConfig config;
  config.variant = Variant::kSlowExplicit;
  CoverEngine engine(inst.ground(), inst.cost_vector(), inst.fmin, inst.fmax,
                     config);
  const auto fs = inst.FunctionSequence();
  try {
    for (const SetFunctionPtr& f : fs) engine.Advance(f);
  } catch (const EngineError& e) {
    return {true, std::string("witness (t=2, S=empty); run aborted: ") + e.what()};
  }
  return {false, "slow variant accepted a non-time-monotone stream"};
}

}  // namespace

int main() {
  const bool freeze = std::getenv("SUBCOVER_FREEZE_BASELINE") != nullptr;
  const std::string baseline_path = SUBCOVER_BASELINE_PATH;

  const SuiteResults suite = RunSuite();

  struct Entry {
    int id;
    std::string name;
    Outcome outcome;
  };
  std::vector<Entry> entries;
  entries.push_back({1, "three-element rounding regression", Criterion1()});
  entries.push_back({2, "multilinear vs covering extension bound", Criterion2()});
  entries.push_back({3, "mutual coverage chain rule", Criterion3()});
  entries.push_back({4, "feasibility and monotonicity suite", Criterion4(suite)});
  entries.push_back({5, "violation budget", Criterion5(suite)});
  entries.push_back({6, "rounding decay", Criterion6()});
  entries.push_back({7, "separation success rate", Criterion7()});
  entries.push_back({8, "offline greedy bound", Criterion8()});
  entries.push_back(
      {9, "competitive envelope", Criterion9(suite, baseline_path, freeze)});
  entries.push_back({10, "vanishing-requirement rejection", Criterion10()});

  int failures = 0;
  for (const Entry& entry : entries) {
    const bool ok = entry.outcome.pass;
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << entry.id << " " << entry.name
              << ": " << entry.outcome.detail << "\n";
  }
  return failures == 0 ? 0 : 1;
}
