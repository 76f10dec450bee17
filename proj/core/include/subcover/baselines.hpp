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

#ifndef SUBCOVER_BASELINES_HPP_
#define SUBCOVER_BASELINES_HPP_

#include <cstdint>
#include <vector>

#include "subcover/mask.hpp"
#include "subcover/oracle.hpp"

namespace subcover {

struct OptResult {
  Mask cover = 0;
  double cost = 0.0;
  std::uint64_t subsets_enumerated = 0;
};

/// Exhaustive minimum-cost cover; n <= 20.
OptResult BruteOpt(const SetFunction& f, const CostVector& costs,
                   double tol = 1e-9);

struct GreedyResult {
  Mask cover = 0;
  double cost = 0.0;
};

/// Density greedy: repeatedly the best marginal-per-cost element (zero-cost
/// elements with positive marginal first), until fully covered.
GreedyResult WolseyGreedy(const SetFunction& f, const CostVector& costs,
                          double tau = 0.0);

struct MarginalBounds {
  double fmin = 0.0;  // smallest nonzero marginal
  double fmax = 0.0;  // largest marginal
};

/// Exhaustive scan of all marginals f(j | S); desk scale only.
MarginalBounds ScanMarginalBounds(const SetFunction& f, double tol = 1e-12);

struct CompetitiveSummary {
  std::vector<double> ratios;  // per time step; +inf flagged as instance error
  double max_ratio = 0.0;
  double median_ratio = 0.0;
  bool has_infinite = false;
};

CompetitiveSummary CompetitiveReport(const std::vector<double>& alg_costs,
                                     const std::vector<double>& opt_costs);

double Median(std::vector<double> values);

}  // namespace subcover

#endif  // SUBCOVER_BASELINES_HPP_
