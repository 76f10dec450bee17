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

#ifndef SUBCOVER_CHECKS_HPP_
#define SUBCOVER_CHECKS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "subcover/oracle.hpp"

namespace subcover {

enum class StructureProperty {
  kMonotone,
  kSubmodular,
  kMIncreasing,  // parameterized by order m
};

/// Exhaustive counterexample search result. `pass` with no witness, or a
/// concrete pair of sets violating the defining inequality.
struct StructureReport {
  bool pass = true;
  Mask witness_a = 0;  // the set A (or element pair) of the failed inequality
  Mask witness_s = 0;  // the context set S
  double value = 0.0;  // the offending derivative / marginal difference
  std::string describe() const;
};

/// Exhaustively tests the defining inequalities of the property; n <= 14.
StructureReport CheckStructure(const SetFunction& f, StructureProperty property,
                               int m = 2, double tol = 1e-9);

/// A time-monotonicity violation: step t whose full covers fail to cover
/// step t-1, witnessed by the set S.
struct TimeMonotoneWitness {
  int t = 0;  // index into the given sequence (0-based)
  Mask s = 0;
};

/// Verifies f^{(t)}(S) = f^{(t)}(N) ⟹ f^{(t-1)}(S) = f^{(t-1)}(N) for all
/// t >= 1 and all S; returns the first violation.
std::optional<TimeMonotoneWitness> CheckTimeMonotone(
    const std::vector<SetFunctionPtr>& stream, double tol = 1e-9);

}  // namespace subcover

#endif  // SUBCOVER_CHECKS_HPP_
