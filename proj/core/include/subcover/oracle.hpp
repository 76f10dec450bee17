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

#ifndef SUBCOVER_ORACLE_HPP_
#define SUBCOVER_ORACLE_HPP_

#include <atomic>
#include <cstdint>
#include <memory>
#include <vector>

#include "subcover/mask.hpp"

namespace subcover {

/// Value oracle for a nonnegative set function over a ground set of size n.
/// Oracles are immutable after construction; value() is safe to call from
/// concurrent readers. Every call is counted.
class SetFunction {
 public:
  explicit SetFunction(int n) : n_(n), full_(FullMask(n)) {
    if (n < 1 || n > 63) throw std::invalid_argument("ground size out of range");
  }
  virtual ~SetFunction() = default;

  int ground_size() const { return n_; }
  Mask full() const { return full_; }

  double value(Mask s) const {
    calls_.fetch_add(1, std::memory_order_relaxed);
    return eval(s & full_);
  }

  double marginal(int j, Mask s) const {
    if (j < 0 || j >= n_) throw std::out_of_range("element id out of range");
    if (Contains(s, j)) return 0.0;
    return value(With(s, j)) - value(s);
  }

  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }

 protected:
  virtual double eval(Mask s) const = 0;

 private:
  int n_;
  Mask full_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

using SetFunctionPtr = std::shared_ptr<const SetFunction>;

/// All 2^n values stored by mask. n <= 20.
class ExplicitTable : public SetFunction {
 public:
  ExplicitTable(int n, std::vector<double> values);

 protected:
  double eval(Mask s) const override { return values_[s]; }

 private:
  std::vector<double> values_;
};

/// Each element owns a set of weighted items; f(S) is the weight of the
/// union of the owned item sets. Items are global ids, weights indexed by id.
class WeightedCoverage : public SetFunction {
 public:
  WeightedCoverage(int n, std::vector<std::vector<int>> owned_items,
                   std::vector<double> item_weights);

  int item_count() const { return static_cast<int>(item_weights_.size()); }
  const std::vector<std::vector<int>>& owned_items() const { return owned_; }
  const std::vector<double>& item_weights() const { return item_weights_; }

 protected:
  double eval(Mask s) const override;

 private:
  std::vector<std::vector<int>> owned_;
  std::vector<double> item_weights_;
  int words_ = 0;
  std::vector<std::uint64_t> element_bits_;  // n * words_, item bitmask per element
};

/// Rank of a partition matroid: sum over parts of min(|S ∩ part|, capacity).
class PartitionMatroidRank : public SetFunction {
 public:
  PartitionMatroidRank(int n, std::vector<Mask> parts, std::vector<int> capacities);

  const std::vector<Mask>& parts() const { return parts_; }
  const std::vector<int>& capacities() const { return capacities_; }

 protected:
  double eval(Mask s) const override;

 private:
  std::vector<Mask> parts_;
  std::vector<int> capacities_;
};

/// Pointwise sum of oracles over the same ground set.
class SumFunction : public SetFunction {
 public:
  SumFunction(int n, std::vector<SetFunctionPtr> terms);

 protected:
  double eval(Mask s) const override;

 private:
  std::vector<SetFunctionPtr> terms_;
};

/// f_T(S) = f(S ∪ T) − f(T). Stacked contractions flatten to one set.
class ContractedFunction : public SetFunction {
 public:
  ContractedFunction(SetFunctionPtr base, Mask t);

  const SetFunctionPtr& base() const { return base_; }
  Mask contraction_set() const { return t_; }

 protected:
  double eval(Mask s) const override { return base_->value(s | t_) - base_at_t_; }

 private:
  SetFunctionPtr base_;
  Mask t_;
  double base_at_t_;
};

/// Contract `base` by `t`, flattening if base is itself a contraction.
SetFunctionPtr Contract(SetFunctionPtr base, Mask t);

/// Mutual coverage anchored at a single element: g_v(B) = I_f({v}; B).
class AnchoredFunction : public SetFunction {
 public:
  AnchoredFunction(SetFunctionPtr base, int v);

  int anchor() const { return v_; }

 protected:
  double eval(Mask s) const override {
    return f_v_ + base_->value(s) - base_->value(s | Single(v_));
  }

 private:
  SetFunctionPtr base_;
  int v_;
  double f_v_;
};

/// Lazily caches all 2^n values of a wrapped oracle. calls() on the memo
/// counts queries; calls() on the base counts distinct evaluations. Not
/// safe for concurrent writers; a memo belongs to one run.
class MemoizedFunction : public SetFunction {
 public:
  explicit MemoizedFunction(SetFunctionPtr base);

  const SetFunctionPtr& base() const { return base_; }

 protected:
  double eval(Mask s) const override;

 private:
  SetFunctionPtr base_;
  mutable std::vector<double> cache_;
  mutable std::vector<char> known_;
};

/// Wrap in a memo when the ground set is small enough for a flat table.
SetFunctionPtr MaybeMemoize(SetFunctionPtr base, int max_n = 16);

}  // namespace subcover

#endif  // SUBCOVER_ORACLE_HPP_
