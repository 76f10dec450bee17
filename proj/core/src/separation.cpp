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

#include "subcover/separation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace subcover {

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

ClockDraw DrawClocks(const FractionalPoint& x, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(
      std::numeric_limits<double>::min(), 1.0);
  ClockDraw draw;
  draw.times.resize(x.size());
  for (int j = 0; j < x.size(); ++j) {
    if (x[j] <= 0.0) {
      draw.times[j] = std::numeric_limits<double>::infinity();
    } else {
      draw.times[j] = -std::log(unif(rng)) / x[j];
      draw.ordering.push_back(j);
    }
  }
  std::sort(draw.ordering.begin(), draw.ordering.end(), [&](int a, int b) {
    if (draw.times[a] != draw.times[b]) return draw.times[a] < draw.times[b];
    return a < b;  // deterministic tie-break
  });
  return draw;
}

PrefixCandidate ClockPrefixCandidate(const SetFunction& f,
                                     const FractionalPoint& x,
                                     std::uint64_t seed) {
  if (x.size() != f.ground_size()) {
    throw std::invalid_argument("point dimension must match ground set");
  }
  const ClockDraw draw = DrawClocks(x, seed);
  PrefixCandidate best{0, Linearization(f, 0, x)};
  Mask q = 0;
  for (int j : draw.ordering) {
    q = With(q, j);
    const double v = Linearization(f, q, x);
    if (v < best.value) {
      best.set = q;
      best.value = v;
    }
  }
  return best;
}

std::optional<ViolationReport> FindViolated(const SetFunction& f,
                                            const FractionalPoint& x,
                                            double eps, double delta,
                                            std::uint64_t seed, double tol) {
  if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("eps in (0,1]");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta in (0,1)");
  const double total = f.value(f.full());
  if (total <= tol) return std::nullopt;  // nothing left to cover

  const double threshold = (1.0 - eps / 2.0) * total;
  const int attempts =
      static_cast<int>(std::ceil((3.0 / eps) * std::log(1.0 / delta)));
  for (int a = 0; a < attempts; ++a) {
    const PrefixCandidate cand =
        ClockPrefixCandidate(f, x, DeriveSeed(seed, static_cast<std::uint64_t>(a)));
    if (cand.value < threshold) {
      return ViolationReport{cand.set, cand.value, threshold, a + 1};
    }
  }
  return std::nullopt;
}

}  // namespace subcover
