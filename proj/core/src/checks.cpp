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

#include "subcover/checks.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "subcover/extensions.hpp"

namespace subcover {

std::string StructureReport::describe() const {
  if (pass) return "pass";
  std::ostringstream out;
  out << "fail: A=0x" << std::hex << witness_a << " S=0x" << witness_s
      << std::dec << " value=" << value;
  return out.str();
}

namespace {

StructureReport CheckMonotone(const SetFunction& f, double tol) {
  const Mask full = f.full();
  for (Mask s = 0; s <= full; ++s) {
    const double fs = f.value(s);
    for (int j = 0; j < f.ground_size(); ++j) {
      if (Contains(s, j)) continue;
      const double gain = f.value(With(s, j)) - fs;
      if (gain < -tol) {
        return {false, Single(j), s, gain};
      }
    }
  }
  return {};
}

StructureReport CheckSubmodular(const SetFunction& f, double tol) {
  // Local characterization: f(j | S) >= f(j | S ∪ {k}) for all S and j != k.
  const Mask full = f.full();
  for (Mask s = 0; s <= full; ++s) {
    for (int j = 0; j < f.ground_size(); ++j) {
      if (Contains(s, j)) continue;
      const double gain_here = f.value(With(s, j)) - f.value(s);
      for (int k = 0; k < f.ground_size(); ++k) {
        if (k == j || Contains(s, k)) continue;
        const Mask sk = With(s, k);
        const double gain_later = f.value(With(sk, j)) - f.value(sk);
        if (gain_later > gain_here + tol) {
          return {false, Single(j) | Single(k), s, gain_here - gain_later};
        }
      }
    }
  }
  return {};
}

StructureReport CheckMIncreasing(const SetFunction& f, int m, double tol) {
  if (m < 1) throw std::invalid_argument("order m must be >= 1");
  const Mask full = f.full();
  for (Mask a = 0; a <= full; ++a) {
    if (Popcount(a) != m) continue;
    const Mask rest = full & ~a;
    // The derivative only depends on S \ A.
    Mask s = 0;
    while (true) {
      const double d = Derivative(f, a, s);
      if (d < -tol) {
        return {false, a, s, d};
      }
      if (s == rest) break;
      s = (s - rest) & rest;  // next submask of rest in increasing order
    }
  }
  return {};
}

}  // namespace

StructureReport CheckStructure(const SetFunction& f, StructureProperty property,
                               int m, double tol) {
  if (f.ground_size() > kMaxCheckGround) {
    throw std::invalid_argument("exhaustive structure checks limited to n <= 14");
  }
  switch (property) {
    case StructureProperty::kMonotone:
      return CheckMonotone(f, tol);
    case StructureProperty::kSubmodular:
      return CheckSubmodular(f, tol);
    case StructureProperty::kMIncreasing:
      return CheckMIncreasing(f, m, tol);
  }
  throw std::logic_error("unknown property");
}

std::optional<TimeMonotoneWitness> CheckTimeMonotone(
    const std::vector<SetFunctionPtr>& stream, double tol) {
  for (std::size_t t = 1; t < stream.size(); ++t) {
    const SetFunction& cur = *stream[t];
    const SetFunction& prev = *stream[t - 1];
    if (cur.ground_size() != prev.ground_size()) {
      throw std::invalid_argument("stream functions must share the ground set");
    }
    const Mask full = cur.full();
    const double cur_n = cur.value(full);
    const double prev_n = prev.value(full);
    for (Mask s = 0; s <= full; ++s) {
      if (std::abs(cur.value(s) - cur_n) <= tol &&
          prev.value(s) < prev_n - tol) {
        return TimeMonotoneWitness{static_cast<int>(t), s};
      }
    }
  }
  return std::nullopt;
}

}  // namespace subcover
