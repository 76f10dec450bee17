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

#include "subcover/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace subcover {

ExplicitTable::ExplicitTable(int n, std::vector<double> values)
    : SetFunction(n), values_(std::move(values)) {
  if (n > kMaxTableGround) {
    throw std::invalid_argument("explicit table limited to n <= 20");
  }
  if (values_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("explicit table needs 2^n values");
  }
}

WeightedCoverage::WeightedCoverage(int n,
                                   std::vector<std::vector<int>> owned_items,
                                   std::vector<double> item_weights)
    : SetFunction(n),
      owned_(std::move(owned_items)),
      item_weights_(std::move(item_weights)) {
  if (static_cast<int>(owned_.size()) != n) {
    throw std::invalid_argument("owned_items needs one entry per element");
  }
  const int items = item_count();
  words_ = (items + 63) / 64;
  element_bits_.assign(static_cast<std::size_t>(n) * std::max(words_, 1), 0);
  for (int j = 0; j < n; ++j) {
    for (int it : owned_[j]) {
      if (it < 0 || it >= items) {
        throw std::invalid_argument("item id out of range");
      }
      element_bits_[static_cast<std::size_t>(j) * words_ + it / 64] |=
          std::uint64_t{1} << (it % 64);
    }
  }
}

double WeightedCoverage::eval(Mask s) const {
  if (words_ == 0) return 0.0;
  std::uint64_t covered[4] = {0, 0, 0, 0};
  // words_ <= 4 covers 256 items, far beyond any bundled stream.
  if (words_ > 4) throw std::logic_error("too many items");
  for (int j = 0; j < ground_size(); ++j) {
    if (!Contains(s, j)) continue;
    const std::uint64_t* bits = &element_bits_[static_cast<std::size_t>(j) * words_];
    for (int w = 0; w < words_; ++w) covered[w] |= bits[w];
  }
  double total = 0.0;
  for (int w = 0; w < words_; ++w) {
    std::uint64_t word = covered[w];
    while (word) {
      const int bit = std::countr_zero(word);
      total += item_weights_[w * 64 + bit];
      word &= word - 1;
    }
  }
  return total;
}

PartitionMatroidRank::PartitionMatroidRank(int n, std::vector<Mask> parts,
                                           std::vector<int> capacities)
    : SetFunction(n), parts_(std::move(parts)), capacities_(std::move(capacities)) {
  if (parts_.size() != capacities_.size()) {
    throw std::invalid_argument("parts and capacities must align");
  }
  Mask seen = 0;
  for (std::size_t p = 0; p < parts_.size(); ++p) {
    if (parts_[p] & seen) throw std::invalid_argument("parts must be disjoint");
    if (capacities_[p] < 0) throw std::invalid_argument("capacity must be >= 0");
    seen |= parts_[p];
  }
}

double PartitionMatroidRank::eval(Mask s) const {
  double rank = 0.0;
  for (std::size_t p = 0; p < parts_.size(); ++p) {
    rank += std::min(Popcount(s & parts_[p]), capacities_[p]);
  }
  return rank;
}

SumFunction::SumFunction(int n, std::vector<SetFunctionPtr> terms)
    : SetFunction(n), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (!t || t->ground_size() != n) {
      throw std::invalid_argument("sum terms must share the ground set");
    }
  }
}

double SumFunction::eval(Mask s) const {
  double total = 0.0;
  for (const auto& t : terms_) total += t->value(s);
  return total;
}

ContractedFunction::ContractedFunction(SetFunctionPtr base, Mask t)
    : SetFunction(base ? base->ground_size() : 0), base_(std::move(base)), t_(t) {
  t_ &= base_->full();
  base_at_t_ = base_->value(t_);
}

SetFunctionPtr Contract(SetFunctionPtr base, Mask t) {
  if (!base) throw std::invalid_argument("null oracle");
  if ((t & base->full()) == 0) return base;
  if (auto inner = std::dynamic_pointer_cast<const ContractedFunction>(base)) {
    return std::make_shared<ContractedFunction>(inner->base(),
                                                t | inner->contraction_set());
  }
  return std::make_shared<ContractedFunction>(std::move(base), t);
}

AnchoredFunction::AnchoredFunction(SetFunctionPtr base, int v)
    : SetFunction(base ? base->ground_size() : 0), base_(std::move(base)), v_(v) {
  if (v_ < 0 || v_ >= ground_size()) {
    throw std::out_of_range("anchor element out of range");
  }
  f_v_ = base_->value(Single(v_)) - base_->value(0);
}

MemoizedFunction::MemoizedFunction(SetFunctionPtr base)
    : SetFunction(base ? base->ground_size() : 0), base_(std::move(base)) {
  if (ground_size() > kMaxTableGround) {
    throw std::invalid_argument("memo table limited to n <= 20");
  }
  const std::size_t size = std::size_t{1} << ground_size();
  cache_.assign(size, 0.0);
  known_.assign(size, 0);
}

double MemoizedFunction::eval(Mask s) const {
  if (!known_[s]) {
    cache_[s] = base_->value(s);
    known_[s] = 1;
  }
  return cache_[s];
}

SetFunctionPtr MaybeMemoize(SetFunctionPtr base, int max_n) {
  if (!base) throw std::invalid_argument("null oracle");
  if (base->ground_size() > std::min(max_n, kMaxTableGround)) return base;
  if (std::dynamic_pointer_cast<const MemoizedFunction>(base)) return base;
  if (std::dynamic_pointer_cast<const ExplicitTable>(base)) return base;
  return std::make_shared<MemoizedFunction>(std::move(base));
}

}  // namespace subcover
