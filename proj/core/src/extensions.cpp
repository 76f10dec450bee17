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

#include "subcover/extensions.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace subcover {

FractionalPoint::FractionalPoint(std::vector<double> values) : x(std::move(values)) {
  for (double v : x) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("fractional point entries must lie in [0,1]");
    }
  }
}

FractionalPoint FractionalPoint::Indicator(int n, Mask t) {
  FractionalPoint p(n);
  for (int j = 0; j < n; ++j) {
    if (Contains(t, j)) p.x[j] = 1.0;
  }
  return p;
}

namespace {

void RequireMatch(const SetFunction& f, const FractionalPoint& x) {
  if (x.size() != f.ground_size()) {
    throw std::invalid_argument("point dimension must match ground set");
  }
}

}  // namespace

double Linearization(const SetFunction& f, Mask s, const FractionalPoint& x) {
  RequireMatch(f, x);
  const double fs = f.value(s);
  double total = fs;
  for (int j = 0; j < f.ground_size(); ++j) {
    if (Contains(s, j) || x[j] == 0.0) continue;
    total += (f.value(With(s, j)) - fs) * x[j];
  }
  return total;
}

CoveringExtensionResult CoveringExtensionExact(const SetFunction& f,
                                               const FractionalPoint& x) {
  RequireMatch(f, x);
  if (f.ground_size() > kMaxTableGround) {
    throw std::invalid_argument("exhaustive covering extension limited to n <= 20");
  }
  CoveringExtensionResult best;
  const Mask full = f.full();
  for (Mask s = 0; s <= full; ++s) {
    const double v = Linearization(f, s, x);
    if (s == 0 || v < best.value) {
      best.value = v;
      best.argmin = s;
    }
  }
  return best;
}

double MultilinearExact(const SetFunction& f, const FractionalPoint& x) {
  RequireMatch(f, x);
  const int n = f.ground_size();
  if (n > kMaxTableGround) {
    throw std::invalid_argument("exact multilinear extension limited to n <= 20");
  }
  const Mask full = f.full();
  double total = 0.0;
  for (Mask s = 0; s <= full; ++s) {
    double w = 1.0;
    for (int j = 0; j < n; ++j) {
      w *= Contains(s, j) ? x[j] : 1.0 - x[j];
      if (w == 0.0) break;
    }
    if (w != 0.0) total += w * f.value(s);
  }
  return total;
}

MultilinearEstimate MultilinearSample(const SetFunction& f,
                                      const FractionalPoint& x,
                                      std::uint64_t samples, std::uint64_t seed) {
  RequireMatch(f, x);
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double sum = 0.0;
  double sumsq = 0.0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    Mask s = 0;
    for (int j = 0; j < f.ground_size(); ++j) {
      if (unif(rng) < x[j]) s = With(s, j);
    }
    const double v = f.value(s);
    sum += v;
    sumsq += v * v;
  }
  MultilinearEstimate out;
  out.samples = samples;
  out.mean = sum / static_cast<double>(samples);
  if (samples > 1) {
    const double var =
        (sumsq - sum * out.mean) / static_cast<double>(samples - 1);
    out.stderr_ = std::sqrt(std::max(var, 0.0) / static_cast<double>(samples));
  }
  return out;
}

double MutualCoverage(const SetFunction& f, Mask a, Mask b, Mask c) {
  return f.value(a | c) + f.value(b | c) - f.value(a | b | c) - f.value(c);
}

double Derivative(const SetFunction& f, Mask a, Mask s) {
  double total = 0.0;
  const Mask u = s | a;
  // Enumerate B ⊆ A via the submask walk.
  Mask b = a;
  while (true) {
    const double sign = (Popcount(b) % 2 == 0) ? 1.0 : -1.0;
    total += sign * f.value(u & ~b);
    if (b == 0) break;
    b = (b - 1) & a;
  }
  return total;
}

}  // namespace subcover
