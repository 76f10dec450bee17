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

#include "subcover/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subcover {

std::optional<CoveringRow> RowFromViolation(const SetFunction& f, Mask s,
                                            RowProvenance provenance,
                                            double tol) {
  const double fs = f.value(s);
  const double rhs = f.value(f.full()) - fs;
  if (rhs <= tol) return std::nullopt;  // already satisfied by every point
  CoveringRow row;
  row.rhs = rhs;
  row.provenance = provenance;
  for (int j = 0; j < f.ground_size(); ++j) {
    if (Contains(s, j)) continue;
    const double a = f.value(With(s, j)) - fs;
    if (a > 0.0) row.coeffs.emplace_back(j, a);
  }
  return row;
}

OnlineCoveringSolver::OnlineCoveringSolver(CostVector costs)
    : costs_(std::move(costs)), x_(costs_.size()) {
  // Free elements never hurt; take them at full value immediately.
  for (int j = 0; j < costs_.size(); ++j) {
    if (costs_[j] == 0.0) x_.x[j] = 1.0;
  }
}

double OnlineCoveringSolver::RowValue(const CoveringRow& row) const {
  double v = 0.0;
  for (const auto& [j, a] : row.coeffs) v += a * x_[j];
  return v;
}

bool OnlineCoveringSolver::Satisfied(const CoveringRow& row) const {
  return RowValue(row) >= row.rhs * (1.0 - kRelTol);
}

double OnlineCoveringSolver::FractionalCost() const {
  double c = 0.0;
  for (int j = 0; j < costs_.size(); ++j) c += costs_[j] * x_[j];
  return c;
}

double OnlineCoveringSolver::Mass() const {
  double m = 0.0;
  for (double v : x_.x) m += v;
  return m;
}

SubmitResult OnlineCoveringSolver::Submit(const CoveringRow& row) {
  if (row.rhs <= 0.0) throw std::invalid_argument("row rhs must be positive");
  for (const auto& [j, a] : row.coeffs) {
    if (j < 0 || j >= costs_.size()) throw std::out_of_range("row element id");
    if (a < 0.0) throw std::invalid_argument("row coefficients must be >= 0");
  }

  const bool fresh = seen_keys_.insert(row.provenance.key()).second;
  if (fresh) accepted_rows_.push_back(row);

  if (Satisfied(row)) return {};

  // Work on the row normalized to rhs 1.
  struct Term {
    int j;
    double a;  // normalized coefficient
  };
  std::vector<Term> support;
  double reach = 0.0;
  for (const auto& [j, a] : row.coeffs) {
    if (a <= 0.0) continue;
    support.push_back({j, a / row.rhs});
    reach += a / row.rhs;
  }
  if (reach < 1.0 - kRelTol) {
    throw std::runtime_error("infeasible covering row: support cannot reach rhs");
  }

  const double d = static_cast<double>(support.size());
  const auto value_at = [&](double theta, std::vector<double>* out) {
    double v = 0.0;
    for (const Term& term : support) {
      const double c = costs_[term.j];
      double xj;
      if (c == 0.0) {
        xj = 1.0;  // set eagerly at init, stays saturated
      } else {
        xj = std::min(
            1.0, x_[term.j] * (1.0 + theta * term.a / c) + theta * term.a / (d * c));
      }
      if (out) (*out)[term.j] = xj;
      v += term.a * xj;
    }
    return v;
  };

  // Grow theta until the row holds, then bisect for the minimal step.
  double lo = 0.0;
  double hi = 1.0;
  int guard = 0;
  while (value_at(hi, nullptr) < 1.0 && guard++ < 200) {
    lo = hi;
    hi *= 2.0;
  }
  if (value_at(hi, nullptr) < 1.0 - kRelTol) {
    // Support saturates strictly below 1: reach >= 1 rules this out unless
    // the gap is pure roundoff.
    throw std::runtime_error("covering row did not converge");
  }
  for (int it = 0; it < 100 && hi - lo > 1e-15 * (1.0 + hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (value_at(mid, nullptr) >= 1.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }

  std::vector<double> updated = x_.x;
  value_at(hi, &updated);
  double mass_delta = 0.0;
  for (int j = 0; j < costs_.size(); ++j) {
    if (updated[j] < x_[j]) updated[j] = x_[j];  // monotone by construction
    mass_delta += updated[j] - x_[j];
  }
  x_.x = std::move(updated);
  ++rows_accepted_;
  mass_history_.push_back(Mass());
  return {true, mass_delta};
}

}  // namespace subcover
