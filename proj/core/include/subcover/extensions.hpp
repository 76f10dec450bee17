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

#ifndef SUBCOVER_EXTENSIONS_HPP_
#define SUBCOVER_EXTENSIONS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "subcover/oracle.hpp"

namespace subcover {

/// A point x in [0,1]^n.
struct FractionalPoint {
  std::vector<double> x;

  FractionalPoint() = default;
  explicit FractionalPoint(std::vector<double> values);
  explicit FractionalPoint(int n) : x(n, 0.0) {}

  int size() const { return static_cast<int>(x.size()); }
  double operator[](int j) const { return x[j]; }

  static FractionalPoint Indicator(int n, Mask t);
};

/// f(S) + Σ_j f_S(j) x_j, the linearization of f around S.
double Linearization(const SetFunction& f, Mask s, const FractionalPoint& x);

struct CoveringExtensionResult {
  double value = 0.0;
  Mask argmin = 0;
};

/// min over all S of the linearization; exhaustive over 2^n subsets.
CoveringExtensionResult CoveringExtensionExact(const SetFunction& f,
                                               const FractionalPoint& x);

/// Exact multilinear extension by expansion over all 2^n subsets.
double MultilinearExact(const SetFunction& f, const FractionalPoint& x);

struct MultilinearEstimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::uint64_t samples = 0;
};

/// Monte-Carlo estimate of the multilinear extension; deterministic per seed.
MultilinearEstimate MultilinearSample(const SetFunction& f,
                                      const FractionalPoint& x,
                                      std::uint64_t samples, std::uint64_t seed);

/// I_f(A; B | C) = f_C(A) + f_C(B) − f_C(A ∪ B).
double MutualCoverage(const SetFunction& f, Mask a, Mask b, Mask c = 0);

/// m-th order derivative: Σ_{B ⊆ A} (−1)^{|B|} f((S ∪ A) \ B).
double Derivative(const SetFunction& f, Mask a, Mask s);

inline SetFunctionPtr Anchored(SetFunctionPtr f, int v) {
  return std::make_shared<AnchoredFunction>(std::move(f), v);
}

}  // namespace subcover

#endif  // SUBCOVER_EXTENSIONS_HPP_
