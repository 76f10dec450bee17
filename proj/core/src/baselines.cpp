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

#include "subcover/baselines.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace subcover {

OptResult BruteOpt(const SetFunction& f, const CostVector& costs, double tol) {
  const int n = f.ground_size();
  if (n > kMaxTableGround) {
    throw std::invalid_argument("brute-force optimum limited to n <= 20");
  }
  if (costs.size() != n) throw std::invalid_argument("cost vector mismatch");
  const Mask full = f.full();
  const double target = f.value(full);
  OptResult best;
  best.cost = std::numeric_limits<double>::infinity();
  for (Mask s = 0; s <= full; ++s) {
    ++best.subsets_enumerated;
    const double c = costs.of(s);
    if (c >= best.cost) continue;
    if (f.value(s) >= target - tol) {
      best.cover = s;
      best.cost = c;
    }
  }
  return best;
}

GreedyResult WolseyGreedy(const SetFunction& f, const CostVector& costs,
                          double tau) {
  if (costs.size() != f.ground_size()) {
    throw std::invalid_argument("cost vector mismatch");
  }
  GreedyResult out;
  while (true) {
    const double base = f.value(out.cover);
    int best = -1;
    double best_density = -1.0;
    bool best_free = false;
    for (int j = 0; j < f.ground_size(); ++j) {
      if (Contains(out.cover, j)) continue;
      const double gain = f.value(With(out.cover, j)) - base;
      if (gain <= tau) continue;
      if (costs[j] == 0.0) {
        if (!best_free) {
          best = j;
          best_free = true;
        }
        continue;
      }
      if (best_free) continue;
      const double density = gain / costs[j];
      if (density > best_density) {
        best_density = density;
        best = j;
      }
    }
    if (best == -1) break;
    out.cover = With(out.cover, best);
    out.cost += costs[best];
  }
  return out;
}

MarginalBounds ScanMarginalBounds(const SetFunction& f, double tol) {
  MarginalBounds b;
  const Mask full = f.full();
  if (f.ground_size() > kMaxTableGround) {
    throw std::invalid_argument("marginal scan limited to n <= 20");
  }
  for (Mask s = 0; s <= full; ++s) {
    const double fs = f.value(s);
    for (int j = 0; j < f.ground_size(); ++j) {
      if (Contains(s, j)) continue;
      const double gain = f.value(With(s, j)) - fs;
      if (gain > b.fmax) b.fmax = gain;
      if (gain > tol && (b.fmin == 0.0 || gain < b.fmin)) b.fmin = gain;
    }
  }
  return b;
}

double Median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

CompetitiveSummary CompetitiveReport(const std::vector<double>& alg_costs,
                                     const std::vector<double>& opt_costs) {
  if (alg_costs.size() != opt_costs.size()) {
    throw std::invalid_argument("cost sequences must align");
  }
  CompetitiveSummary out;
  for (std::size_t t = 0; t < alg_costs.size(); ++t) {
    double ratio;
    if (opt_costs[t] == 0.0) {
      if (alg_costs[t] == 0.0) {
        ratio = 1.0;
      } else {
        ratio = std::numeric_limits<double>::infinity();
        out.has_infinite = true;
      }
    } else {
      ratio = alg_costs[t] / opt_costs[t];
    }
    out.ratios.push_back(ratio);
    out.max_ratio = std::max(out.max_ratio, ratio);
  }
  out.median_ratio = Median(out.ratios);
  return out;
}

}  // namespace subcover
