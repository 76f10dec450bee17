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

#ifndef SUBCOVER_SEPARATION_HPP_
#define SUBCOVER_SEPARATION_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "subcover/extensions.hpp"
#include "subcover/oracle.hpp"

namespace subcover {

/// Per-element exponential times h_j with rate x_j (infinite when x_j = 0)
/// and the induced ascending ordering of the finite-clock elements.
struct ClockDraw {
  std::vector<double> times;   // +inf when x_j = 0
  std::vector<int> ordering;   // finite-clock elements, ascending by time
};

ClockDraw DrawClocks(const FractionalPoint& x, std::uint64_t seed);

struct PrefixCandidate {
  Mask set = 0;
  double value = 0.0;  // f^{#Q}(x) at the minimizing prefix
};

/// Draws clocks, evaluates the linearization at every prefix of the induced
/// ordering (including ∅ and the full finite-clock set), and returns the
/// minimizer. Ties keep the shortest prefix.
PrefixCandidate ClockPrefixCandidate(const SetFunction& f,
                                     const FractionalPoint& x,
                                     std::uint64_t seed);

struct ViolationReport {
  Mask set = 0;
  double value = 0.0;      // f^{#C}(x)
  double threshold = 0.0;  // (1 − eps/2) · f(N)
  int attempts = 0;        // candidate draws consumed, including the hit
};

/// Runs up to ceil((3/eps)·ln(1/delta)) independent candidate draws and
/// returns the first prefix violated by margin eps/2, or nullopt. Fully
/// deterministic given the seed.
std::optional<ViolationReport> FindViolated(const SetFunction& f,
                                            const FractionalPoint& x,
                                            double eps, double delta,
                                            std::uint64_t seed,
                                            double tol = 1e-9);

/// Stable per-attempt seed derivation (splitmix64 over seed, index).
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index);

}  // namespace subcover

#endif  // SUBCOVER_SEPARATION_HPP_
