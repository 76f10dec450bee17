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

#include "subcover/trial.hpp"

#include <cstdio>
#include <sstream>

#include "subcover/baselines.hpp"
#include "subcover/checks.hpp"

namespace subcover {

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

RunResult RunTrials(const Instance& instance, const TrialConfig& config) {
  if (config.seeds.empty()) throw std::invalid_argument("need at least one seed");
  RunResult result;
  result.n = instance.n;
  const GroundSet ground = instance.ground();
  const CostVector costs = instance.cost_vector();

  // Optimum per prefix is seed-independent; compute once.
  std::vector<double> opt_costs;
  const bool attach_opt = config.attach_opt && instance.n <= kMaxTableGround;
  std::vector<SetFunctionPtr> prefix_functions;
  for (int t = 1; t <= instance.horizon(); ++t) {
    prefix_functions.push_back(instance.FunctionAt(t));
  }
  if (attach_opt) {
    for (const SetFunctionPtr& f : prefix_functions) {
      const SetFunctionPtr memo = MaybeMemoize(f);
      opt_costs.push_back(BruteOpt(*memo, costs).cost);
    }
  }

  for (const std::uint64_t seed : config.seeds) {
    EngineConfig ec;
    ec.variant = config.variant;
    ec.eps = config.eps;
    ec.tau = instance.GreedyTau();
    ec.seed = seed;
    CoverEngine engine(ground, costs, instance.fmin, instance.fmax, ec);

    TrialOutcome outcome;
    outcome.seed = seed;
    Mask prev_committed = 0;
    std::vector<double> alg_costs;
    for (int t = 1; t <= instance.horizon(); ++t) {
      StepRecord rec;
      rec.seed = seed;
      rec.step = engine.Advance(prefix_functions[t - 1]);
      rec.greedy_adds = Popcount(rec.step.new_greedy);
      if ((prev_committed & ~rec.step.committed) != 0) {
        throw EngineError("committed set shrank between steps");
      }
      prev_committed = rec.step.committed;
      if (attach_opt) rec.opt_cost = opt_costs[t - 1];
      alg_costs.push_back(rec.step.realized_cost);
      outcome.steps.push_back(std::move(rec));
    }
    outcome.total_violations = engine.total_violations();
    if (!alg_costs.empty()) outcome.final_cost = alg_costs.back();
    if (attach_opt && !opt_costs.empty()) {
      outcome.final_opt = opt_costs.back();
      const CompetitiveSummary summary = CompetitiveReport(alg_costs, opt_costs);
      if (summary.has_infinite) {
        throw EngineError(
            "instance error: positive cost against a zero-cost optimum");
      }
      outcome.max_ratio = summary.max_ratio;
      outcome.median_ratio = summary.median_ratio;
    }
    result.trials.push_back(std::move(outcome));
  }
  return result;
}

std::string RenderJsonl(const RunResult& result) {
  std::ostringstream out;
  for (const TrialOutcome& trial : result.trials) {
    for (const StepRecord& rec : trial.steps) {
      out << "{\"t\":" << rec.step.t << ",\"seed\":" << rec.seed
          << ",\"committed\":" << rec.step.committed
          << ",\"rounds\":" << rec.step.rounds
          << ",\"violations_fixed\":" << rec.step.violations_fixed
          << ",\"greedy_adds\":" << rec.greedy_adds << ",\"frac_cost\":"
          << FormatDouble(rec.step.fractional_cost) << ",\"alg_cost\":"
          << FormatDouble(rec.step.realized_cost);
      if (rec.opt_cost) out << ",\"opt_cost\":" << FormatDouble(*rec.opt_cost);
      out << ",\"oracle_calls\":" << rec.step.oracle_calls << "}\n";
    }
    out << "{\"summary\":true,\"seed\":" << trial.seed
        << ",\"final_cost\":" << FormatDouble(trial.final_cost)
        << ",\"final_opt\":" << FormatDouble(trial.final_opt)
        << ",\"max_ratio\":" << FormatDouble(trial.max_ratio)
        << ",\"median_ratio\":" << FormatDouble(trial.median_ratio)
        << ",\"violations\":" << trial.total_violations << "}\n";
  }
  return out.str();
}

std::string RenderCsv(const RunResult& result) {
  std::ostringstream out;
  out << "t,seed,alg_cost,opt_cost,ratio,frac_cost,rounds_k,violations_fixed,"
         "greedy_adds,oracle_calls\n";
  for (const TrialOutcome& trial : result.trials) {
    for (const StepRecord& rec : trial.steps) {
      const double opt = rec.opt_cost.value_or(0.0);
      const double ratio =
          (rec.opt_cost && opt > 0.0) ? rec.step.realized_cost / opt
          : (rec.step.realized_cost == 0.0 ? 1.0 : 0.0);
      out << rec.step.t << ',' << rec.seed << ','
          << FormatDouble(rec.step.realized_cost) << ',' << FormatDouble(opt)
          << ',' << FormatDouble(ratio) << ','
          << FormatDouble(rec.step.fractional_cost) << ',' << rec.step.rounds
          << ',' << rec.step.violations_fixed << ',' << rec.greedy_adds << ','
          << rec.step.oracle_calls << '\n';
    }
  }
  return out.str();
}

}  // namespace subcover
