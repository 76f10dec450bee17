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

#ifndef SUBCOVER_ENGINE_HPP_
#define SUBCOVER_ENGINE_HPP_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "subcover/lp.hpp"
#include "subcover/oracle.hpp"

namespace subcover {

enum class Variant {
  kSlowExplicit,     // enumerate every constraint row; n capped
  kGeneric,          // round-or-separate on the base function
  kThreeIncreasing,  // anchored rows, fmax-driven round count
};

struct EngineConfig {
  Variant variant = Variant::kGeneric;
  double eps = 1.0;
  double tau = 0.0;           // marginal tolerance for greedy alterations
  std::uint64_t seed = 0;
  int slow_max_n = 14;        // explicit enumeration cap
  bool slow_anchored = false; // also enumerate anchored rows in slow mode
  double tol = 1e-9;
  int memo_max_n = 16;
};

/// Number of rounding rounds: ceil((ln 1/gamma)^-1 · ln(t²·remaining/fmin)),
/// clamped to at least 1; 0 when nothing remains to cover.
int ComputeRounds(int t, double remaining, double fmin, double gamma);

/// Sampled set R, greedy set G, and per-element cumulative inclusion
/// probability, kept in log space so repeated rounds compose exactly.
struct RoundingState {
  Mask sampled = 0;                       // R
  Mask greedy = 0;                        // G
  std::vector<double> log_one_minus_q;    // log(1 − q_j)
  int rounds_completed = 0;

  explicit RoundingState(int n) : log_one_minus_q(n, 0.0) {}

  Mask committed() const { return sampled | greedy; }
  double q(int j) const;
};

/// One round of independent sampling: each uncommitted j joins R with
/// probability x_j; cumulative probabilities are updated alongside.
/// Returns the newly sampled elements.
Mask SampleRound(const FractionalPoint& x, RoundingState& state,
                 std::uint64_t seed);

struct TimeStepResult {
  int t = 0;
  Mask committed = 0;      // S_t
  Mask new_sampled = 0;
  Mask new_greedy = 0;
  int rounds = 0;
  int violations_fixed = 0;
  double fractional_cost = 0.0;
  double realized_cost = 0.0;
  std::uint64_t oracle_calls = 0;  // distinct base evaluations this step
};

class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sequential state machine for one online run: per arriving function,
/// separate-or-round for the configured number of rounds, then greedy
/// alterations until the step function is fully covered.
class CoverEngine {
 public:
  CoverEngine(GroundSet ground, CostVector costs, double fmin, double fmax,
              EngineConfig config);

  TimeStepResult Advance(SetFunctionPtr f_t);

  const RoundingState& state() const { return state_; }
  const OnlineCoveringSolver& lp() const { return lp_; }
  int total_violations() const { return total_violations_; }
  int steps() const { return t_; }
  const EngineConfig& config() const { return config_; }
  double violation_budget() const;  // 2n/eps

 private:
  double DeltaFor(int k) const;
  std::uint64_t NextSeed() { return DeriveSeedCounter(); }
  std::uint64_t DeriveSeedCounter();
  int SeparateAndSubmit(const SetFunctionPtr& step_base, Mask committed_now,
                        int k);
  void SubmitAllViolatedRows(const SetFunctionPtr& contracted, int& fixed);
  Mask GreedyAlterations(const SetFunctionPtr& step_base);

  GroundSet ground_;
  CostVector costs_;
  double fmin_;
  double fmax_;
  EngineConfig config_;
  OnlineCoveringSolver lp_;
  RoundingState state_;
  int t_ = 0;
  int total_violations_ = 0;
  std::uint64_t seed_counter_ = 0;
  SetFunctionPtr prev_function_;  // slow variant keeps it for the checker
};

/// Cheapest-first greedy cover of `f` contracted by `committed`, using the
/// marginal tolerance tau. Returns the elements added.
Mask GreedyCover(const SetFunction& f, const CostVector& costs, Mask committed,
                 double tau);

}  // namespace subcover

#endif  // SUBCOVER_ENGINE_HPP_
