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

#ifndef SUBCOVER_LP_HPP_
#define SUBCOVER_LP_HPP_

#include <optional>
#include <set>
#include <tuple>
#include <vector>

#include "subcover/extensions.hpp"
#include "subcover/mask.hpp"
#include "subcover/oracle.hpp"

namespace subcover {

/// Where a covering row came from: the time step, the contraction set of
/// the generating linearization, and the anchor element for anchored rows.
struct RowProvenance {
  int t = 0;
  Mask set = 0;
  std::optional<int> anchor;

  auto key() const { return std::make_tuple(t, set, anchor.value_or(-1)); }
};

/// One constraint Σ a_j x_j >= b with a_j, b >= 0.
struct CoveringRow {
  std::vector<std::pair<int, double>> coeffs;  // sparse, ascending element id
  double rhs = 0.0;
  RowProvenance provenance;
};

/// Builds the row Σ_j f_S(j) x_j >= f_S(N) from an oracle already contracted
/// by the committed elements. Returns nullopt when the row is trivial
/// (rhs <= tol), i.e. already satisfied by any point.
std::optional<CoveringRow> RowFromViolation(const SetFunction& f, Mask s,
                                            RowProvenance provenance,
                                            double tol = 1e-9);

struct SubmitResult {
  bool updated = false;     // false when the row was already satisfied
  double mass_delta = 0.0;  // total increase of Σ_j x_j
};

/// Online fractional covering solver: rows arrive one at a time and the
/// solution x only ever increases. Each violated row is fixed by a
/// multiplicative-plus-seed step whose size is found by binary search, so
/// the update is minimal and the row ends exactly satisfied.
class OnlineCoveringSolver {
 public:
  explicit OnlineCoveringSolver(CostVector costs);

  /// Raises x until the row holds. Throws std::runtime_error when the row
  /// cannot be satisfied even with all supported variables at 1.
  SubmitResult Submit(const CoveringRow& row);

  double RowValue(const CoveringRow& row) const;
  bool Satisfied(const CoveringRow& row) const;

  double FractionalCost() const;
  double Mass() const;

  const FractionalPoint& x() const { return x_; }
  const CostVector& costs() const { return costs_; }
  int rows_accepted() const { return rows_accepted_; }
  const std::vector<double>& mass_history() const { return mass_history_; }
  const std::vector<CoveringRow>& accepted_rows() const { return accepted_rows_; }

  static constexpr double kRelTol = 1e-9;

 private:
  CostVector costs_;
  FractionalPoint x_;
  int rows_accepted_ = 0;
  std::vector<double> mass_history_;      // Σ_j x_j after each update
  std::vector<CoveringRow> accepted_rows_;  // deduplicated by provenance
  std::set<std::tuple<int, Mask, int>> seen_keys_;
};

}  // namespace subcover

#endif  // SUBCOVER_LP_HPP_
