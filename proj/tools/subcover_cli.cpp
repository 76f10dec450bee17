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

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subcover/baselines.hpp"
#include "subcover/checks.hpp"
#include "subcover/instance.hpp"
#include "subcover/trial.hpp"

namespace {

using namespace subcover;

Variant ParseVariant(const std::string& name) {
  if (name == "slow-explicit") return Variant::kSlowExplicit;
  if (name == "generic") return Variant::kGeneric;
  if (name == "three-increasing") return Variant::kThreeIncreasing;
  throw CLI::ValidationError("variant",
                             "expected slow-explicit, generic or three-increasing");
}

std::string DescribeSet(const Instance& inst, Mask s) {
  const GroundSet ground = inst.ground();
  std::string out = "{";
  bool first = true;
  for (int j = 0; j < inst.n; ++j) {
    if (!Contains(s, j)) continue;
    if (!first) out += ",";
    out += ground.label(j);
    first = false;
  }
  return out + "}";
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

bool CoverageOnly(const Instance& inst) {
  for (const StreamEvent& ev : inst.stream) {
    if (ev.kind != StreamEvent::Kind::kCoverageIncrement) return false;
  }
  return true;
}

int RunCommand(const std::string& instance_path, const std::string& variant_name,
               double eps, const std::vector<std::uint64_t>& seeds,
               const std::string& log_path, const std::string& summary_path) {
  const Instance inst = LoadInstance(instance_path);
  TrialConfig config;
  config.variant = ParseVariant(variant_name);
  config.eps = eps;
  config.seeds = seeds;

  if (config.variant == Variant::kThreeIncreasing && !CoverageOnly(inst)) {
    if (inst.n > kMaxCheckGround) {
      std::cerr << "error: cannot verify the 3-increasing property at n = "
                << inst.n << "\n";
      return 2;
    }
    for (int t = 1; t <= inst.horizon(); ++t) {
      const SetFunctionPtr f = MaybeMemoize(inst.FunctionAt(t));
      const StructureReport report =
          CheckStructure(*f, StructureProperty::kMIncreasing, 3);
      if (!report.pass) {
        std::cerr << "error: step " << t << " is not 3-increasing ("
                  << report.describe() << "); the three-increasing variant "
                  << "does not apply\n";
        return 2;
      }
    }
  }

  try {
    const RunResult result = RunTrials(inst, config);
    if (!log_path.empty()) WriteFile(log_path, RenderJsonl(result));
    if (!summary_path.empty()) WriteFile(summary_path, RenderCsv(result));
    double max_ratio = 0.0;
    int violations = 0;
    for (const TrialOutcome& trial : result.trials) {
      max_ratio = std::max(max_ratio, trial.max_ratio);
      violations += trial.total_violations;
    }
    std::cout << "ok: " << result.trials.size() << " trial(s), max ratio "
              << FormatDouble(max_ratio) << ", " << violations
              << " violation fixes\n";
    return 0;
  } catch (const EngineError& e) {
    std::cerr << "run aborted: " << e.what() << "\n";
    return 1;
  }
}

int CheckCommand(const std::string& instance_path, const std::string& property) {
  const Instance inst = LoadInstance(instance_path);
  if (property == "time-monotone") {
    const auto witness = CheckTimeMonotone(inst.FunctionSequence());
    if (witness) {
      std::cout << "fail: time-monotonicity violated at t=" << witness->t
                << " by S=" << DescribeSet(inst, witness->s) << "\n";
      return 1;
    }
    std::cout << "pass: stream is time-monotone\n";
    return 0;
  }

  StructureProperty prop;
  int m = 2;
  if (property == "monotone") {
    prop = StructureProperty::kMonotone;
  } else if (property == "submodular") {
    prop = StructureProperty::kSubmodular;
  } else if (property == "3-increasing") {
    prop = StructureProperty::kMIncreasing;
    m = 3;
  } else {
    std::cerr << "unknown property: " << property << "\n";
    return 2;
  }
  for (int t = 1; t <= inst.horizon(); ++t) {
    const SetFunctionPtr f = MaybeMemoize(inst.FunctionAt(t));
    const StructureReport report = CheckStructure(*f, prop, m);
    if (!report.pass) {
      std::cout << "fail: step " << t << " violates " << property << " at A="
                << DescribeSet(inst, report.witness_a) << " S="
                << DescribeSet(inst, report.witness_s) << "\n";
      return 1;
    }
  }
  std::cout << "pass: every step is " << property << "\n";
  return 0;
}

int OptCommand(const std::string& instance_path, int at_time) {
  const Instance inst = LoadInstance(instance_path);
  const int t = at_time > 0 ? at_time : inst.horizon();
  const SetFunctionPtr f = MaybeMemoize(inst.FunctionAt(t));
  const OptResult opt = BruteOpt(*f, inst.cost_vector());
  std::cout << "t=" << t << " opt_cost=" << FormatDouble(opt.cost)
            << " cover=" << DescribeSet(inst, opt.cover) << " enumerated="
            << opt.subsets_enumerated << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"online submodular cover workbench"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance");
  std::string kind;
  GeneratorParams params;
  std::string out_path;
  gen->add_option("--kind", kind, "instance kind")->required();
  gen->add_option("--n", params.n, "ground set size");
  gen->add_option("--t", params.t, "stream length");
  gen->add_option("--density", params.density, "coverage density");
  gen->add_option("--seed", params.seed, "generator seed");
  gen->add_option("--out", out_path, "output path")->required();

  // run
  auto* run = app.add_subcommand("run", "execute the online algorithm");
  std::string instance_path, variant_name = "generic", log_path, summary_path;
  double eps = 1.0;
  std::vector<std::uint64_t> seeds = {0};
  run->add_option("--instance", instance_path, "instance path")->required();
  run->add_option("--variant", variant_name, "algorithm variant");
  run->add_option("--eps", eps, "separation margin parameter");
  run->add_option("--seeds", seeds, "comma separated seeds")->delimiter(',');
  run->add_option("--log", log_path, "JSONL log path");
  run->add_option("--summary", summary_path, "CSV summary path");

  // check
  auto* check = app.add_subcommand("check", "property-check an instance");
  std::string check_instance, property;
  check->add_option("--instance", check_instance, "instance path")->required();
  check->add_option("--property", property, "property to verify")->required();

  // opt
  auto* opt = app.add_subcommand("opt", "brute-force optimum of a prefix");
  std::string opt_instance;
  int at_time = 0;
  opt->add_option("--instance", opt_instance, "instance path")->required();
  opt->add_option("--at-time", at_time, "prefix length (default: horizon)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      SaveInstance(Generate(kind, params), out_path);
      std::cout << "wrote " << out_path << "\n";
      return 0;
    }
    if (run->parsed()) {
      return RunCommand(instance_path, variant_name, eps, seeds, log_path,
                        summary_path);
    }
    if (check->parsed()) return CheckCommand(check_instance, property);
    if (opt->parsed()) return OptCommand(opt_instance, at_time);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
