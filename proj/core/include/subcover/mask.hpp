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

#ifndef SUBCOVER_MASK_HPP_
#define SUBCOVER_MASK_HPP_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace subcover {

// Subsets of the ground set are bitmasks; element j is bit j.
using Mask = std::uint64_t;

// Explicit tables and exhaustive enumerations index by mask, so the
// ground set must stay desk-scale.
inline constexpr int kMaxTableGround = 20;
inline constexpr int kMaxCheckGround = 14;

inline Mask FullMask(int n) {
  return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

inline bool Contains(Mask s, int j) { return (s >> j) & 1; }
inline Mask With(Mask s, int j) { return s | (Mask{1} << j); }
inline Mask Without(Mask s, int j) { return s & ~(Mask{1} << j); }
inline Mask Single(int j) { return Mask{1} << j; }
inline int Popcount(Mask s) { return std::popcount(s); }

struct GroundSet {
  int n = 0;
  std::vector<std::string> labels;  // optional; empty or size n

  explicit GroundSet(int n_in, std::vector<std::string> labels_in = {})
      : n(n_in), labels(std::move(labels_in)) {
    if (n < 1) throw std::invalid_argument("ground set must have n >= 1");
    if (!labels.empty() && static_cast<int>(labels.size()) != n) {
      throw std::invalid_argument("label count must match n");
    }
  }

  Mask full() const { return FullMask(n); }

  std::string label(int j) const {
    if (j < 0 || j >= n) throw std::out_of_range("element id out of range");
    return labels.empty() ? std::to_string(j) : labels[j];
  }
};

struct CostVector {
  std::vector<double> c;

  explicit CostVector(std::vector<double> costs) : c(std::move(costs)) {
    for (double v : c) {
      if (v < 0.0) throw std::invalid_argument("costs must be nonnegative");
    }
  }

  int size() const { return static_cast<int>(c.size()); }
  double operator[](int j) const { return c[j]; }

  double total() const {
    double s = 0.0;
    for (double v : c) s += v;
    return s;
  }

  double of(Mask s) const {
    double sum = 0.0;
    for (int j = 0; j < size(); ++j) {
      if (Contains(s, j)) sum += c[j];
    }
    return sum;
  }

  // Smallest strictly positive entry; 0 when all entries are zero.
  double cmin() const {
    double m = 0.0;
    for (double v : c) {
      if (v > 0.0 && (m == 0.0 || v < m)) m = v;
    }
    return m;
  }

  double cmax() const {
    double m = 0.0;
    for (double v : c) {
      if (v > m) m = v;
    }
    return m;
  }
};

}  // namespace subcover

#endif  // SUBCOVER_MASK_HPP_
