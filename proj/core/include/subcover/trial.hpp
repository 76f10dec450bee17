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

#ifndef SUBCOVER_TRIAL_HPP_
#define SUBCOVER_TRIAL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subcover/engine.hpp"
#include "subcover/instance.hpp"

namespace subcover {

struct TrialConfig {
  Variant variant = Variant::kGeneric;
  double eps = 1.0;
  std::vector<std::uint64_t> seeds = {0};
  bool attach_opt = true;      // brute-force optimum per prefix when n <= 20
  bool run_checkers = false;   // property-check the instance up front
};

struct StepRecord {
  std::uint64_t seed = 0;
  TimeStepResult step;
  std::optional<double> opt_cost;
  int greedy_adds = 0;
};

struct TrialOutcome {
  std::uint64_t seed = 0;
  std::vector<StepRecord> steps;
  int total_violations = 0;
  double final_cost = 0.0;
  double final_opt = 0.0;
  double max_ratio = 0.0;
  double median_ratio = 0.0;
};

struct RunResult {
  std::vector<TrialOutcome> trials;  // one per seed, in seed order
  int n = 0;
};

/// Executes the instance once per seed. Throws EngineError on a detected
/// feasibility or monotonicity violation.
RunResult RunTrials(const Instance& instance, const TrialConfig& config);

/// One JSON object per step plus a final summary object per trial; floats
/// printed with 12 significant digits so reruns are byte-identical.
std::string RenderJsonl(const RunResult& result);

/// Columns: t,seed,alg_cost,opt_cost,ratio,frac_cost,rounds_k,
/// violations_fixed,greedy_adds,oracle_calls.
std::string RenderCsv(const RunResult& result);

std::string FormatDouble(double v);

}  // namespace subcover

#endif  // SUBCOVER_TRIAL_HPP_
