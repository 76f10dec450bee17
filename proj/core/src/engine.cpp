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

#include "subcover/engine.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "subcover/checks.hpp"
#include "subcover/separation.hpp"

namespace subcover {

int ComputeRounds(int t, double remaining, double fmin, double gamma) {
  if (remaining <= 0.0) return 0;
  if (!(fmin > 0.0)) throw std::invalid_argument("fmin must be positive");
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::invalid_argument("gamma in (0,1)");
  const double tt = static_cast<double>(t) * static_cast<double>(t);
  const double k = std::log(tt * remaining / fmin) / std::log(1.0 / gamma);
  return std::max(1, static_cast<int>(std::ceil(k)));
}

double RoundingState::q(int j) const {
  return 1.0 - std::exp(log_one_minus_q[j]);
}

Mask SampleRound(const FractionalPoint& x, RoundingState& state,
                 std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Mask added = 0;
  for (int j = 0; j < x.size(); ++j) {
    if (x[j] <= 0.0) continue;
    // q_new = 1 − (1 − q_old)(1 − x_j); the incremental inclusion
    // probability (q_new − q_old)/(1 − q_old) is exactly x_j.
    state.log_one_minus_q[j] +=
        x[j] >= 1.0 ? -std::numeric_limits<double>::infinity()
                    : std::log1p(-x[j]);
    if (Contains(state.committed(), j)) continue;
    if (unif(rng) < x[j]) added = With(added, j);
  }
  state.sampled |= added;
  ++state.rounds_completed;
  return added;
}

Mask GreedyCover(const SetFunction& f, const CostVector& costs, Mask committed,
                 double tau) {
  Mask added = 0;
  while (true) {
    const Mask have = committed | added;
    const double base = f.value(have);
    int best = -1;
    for (int j = 0; j < f.ground_size(); ++j) {
      if (Contains(have, j)) continue;
      const double gain = f.value(With(have, j)) - base;
      if (gain <= tau) continue;
      if (best == -1 || costs[j] < costs[best]) best = j;  // ties keep low index
    }
    if (best == -1) break;
    added = With(added, best);
  }
  return added;
}

CoverEngine::CoverEngine(GroundSet ground, CostVector costs, double fmin,
                         double fmax, EngineConfig config)
    : ground_(std::move(ground)),
      costs_(std::move(costs)),
      fmin_(fmin),
      fmax_(fmax),
      config_(config),
      lp_(costs_),
      state_(ground_.n) {
  if (costs_.size() != ground_.n) {
    throw std::invalid_argument("cost vector must match ground set");
  }
  if (!(fmin_ > 0.0) || fmax_ < fmin_) {
    throw std::invalid_argument("need 0 < fmin <= fmax");
  }
  if (!(config_.eps > 0.0 && config_.eps <= 1.0)) {
    throw std::invalid_argument("eps must lie in (0,1]");
  }
  if (config_.tau < 0.0) throw std::invalid_argument("tau must be >= 0");
}

double CoverEngine::violation_budget() const {
  return 2.0 * ground_.n / config_.eps;
}

std::uint64_t CoverEngine::DeriveSeedCounter() {
  return DeriveSeed(config_.seed, seed_counter_++);
}

double CoverEngine::DeltaFor(int k) const {
  const double cmin = costs_.cmin();
  const double ctotal = costs_.total();
  double delta = 1e-6;
  if (cmin > 0.0 && ctotal > 0.0) {
    const double tt = static_cast<double>(t_) * static_cast<double>(t_);
    delta = 6.0 * cmin /
            (std::numbers::pi * std::numbers::pi * k * tt * ctotal);
  }
  return std::clamp(delta, 1e-6, 0.5);
}

void CoverEngine::SubmitAllViolatedRows(const SetFunctionPtr& contracted,
                                        int& fixed) {
  // Updates only raise x, so a single pass leaves every row satisfied.
  const Mask full = contracted->full();
  for (Mask s = 0; s <= full; ++s) {
    auto row = RowFromViolation(*contracted, s, {t_, s, std::nullopt}, config_.tol);
    if (!row || lp_.Satisfied(*row)) continue;
    lp_.Submit(*row);
    ++fixed;
  }
  if (config_.slow_anchored) {
    for (int v = 0; v < ground_.n; ++v) {
      const SetFunctionPtr g = Anchored(contracted, v);
      for (Mask s = 0; s <= full; ++s) {
        auto row = RowFromViolation(*g, s, {t_, s, v}, config_.tol);
        if (!row || lp_.Satisfied(*row)) continue;
        lp_.Submit(*row);
        ++fixed;
      }
    }
  }
}

int CoverEngine::SeparateAndSubmit(const SetFunctionPtr& step_base,
                                   Mask committed_now, int k) {
  int fixed = 0;
  const double delta = DeltaFor(k);
  while (true) {
    const SetFunctionPtr fc = Contract(step_base, committed_now | state_.sampled);
    bool found = false;
    if (config_.variant == Variant::kGeneric) {
      const auto rep =
          FindViolated(*fc, lp_.x(), config_.eps, delta, NextSeed(), config_.tol);
      if (rep) {
        auto row = RowFromViolation(*fc, rep->set,
                                    {t_, rep->set, std::nullopt}, config_.tol);
        if (row) {
          lp_.Submit(*row);
          ++fixed;
          found = true;
        }
      }
    } else {  // three-increasing: sweep anchors in index order
      for (int v = 0; v < ground_.n && !found; ++v) {
        const SetFunctionPtr g = Anchored(fc, v);
        if (g->value(g->full()) <= config_.tol) continue;
        const auto rep =
            FindViolated(*g, lp_.x(), config_.eps, delta, NextSeed(), config_.tol);
        if (!rep) continue;
        auto row = RowFromViolation(*g, rep->set, {t_, rep->set, v}, config_.tol);
        if (!row) continue;
        lp_.Submit(*row);
        ++fixed;
        found = true;
      }
    }
    if (!found) return fixed;
  }
}

TimeStepResult CoverEngine::Advance(SetFunctionPtr f_t) {
  if (!f_t || f_t->ground_size() != ground_.n) {
    throw std::invalid_argument("step function must match the ground set");
  }
  ++t_;
  TimeStepResult result;
  result.t = t_;

  SetFunctionPtr step = MaybeMemoize(f_t, config_.memo_max_n);
  const std::uint64_t calls_before = f_t->calls();
  const Mask committed_before = state_.committed();

  if (config_.variant == Variant::kSlowExplicit) {
    if (ground_.n > config_.slow_max_n) {
      throw EngineError("slow-explicit variant limited to small ground sets");
    }
    if (prev_function_) {
      const auto witness = CheckTimeMonotone({prev_function_, step}, config_.tol);
      if (witness) {
        std::ostringstream msg;
        msg << "stream is not time-monotone at step index " << (t_ - 1)
            << ": the cover 0x" << std::hex << witness->s
            << " of the new function misses the previous one";
        throw EngineError(msg.str());
      }
    }
    prev_function_ = step;
  }

  const SetFunctionPtr contracted = Contract(step, committed_before);
  const double remaining = contracted->value(contracted->full());

  if (remaining > config_.tol) {
    const double gamma =
        config_.variant == Variant::kSlowExplicit
            ? 1.0 / std::numbers::e
            : 1.0 - 1.0 / (std::numbers::e * (1.0 + config_.eps));
    const double k_driver =
        config_.variant == Variant::kThreeIncreasing ? fmax_ : remaining;
    const int k = ComputeRounds(t_, k_driver, fmin_, gamma);
    result.rounds = k;

    if (config_.variant == Variant::kSlowExplicit) {
      SubmitAllViolatedRows(contracted, result.violations_fixed);
      for (int r = 0; r < k; ++r) {
        result.new_sampled |= SampleRound(lp_.x(), state_, NextSeed());
      }
    } else {
      for (int r = 0; r < k; ++r) {
        result.violations_fixed += SeparateAndSubmit(step, committed_before, k);
        result.new_sampled |= SampleRound(lp_.x(), state_, NextSeed());
      }
    }
  }

  result.new_greedy = GreedyAlterations(step);
  state_.greedy |= result.new_greedy;

  result.committed = state_.committed();
  result.fractional_cost = lp_.FractionalCost();
  result.realized_cost = costs_.of(result.committed);
  result.oracle_calls = f_t->calls() - calls_before;
  total_violations_ += result.violations_fixed;

  // Feasibility is unconditional: the greedy phase runs to completion.
  const double deficiency =
      step->value(step->full()) - step->value(result.committed);
  if (deficiency > std::max(config_.tau, config_.tol)) {
    throw EngineError("internal error: step left uncovered after alterations");
  }
  return result;
}

Mask CoverEngine::GreedyAlterations(const SetFunctionPtr& step_base) {
  return GreedyCover(*step_base, costs_, state_.committed(), config_.tau);
}

}  // namespace subcover
