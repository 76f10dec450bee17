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

#include "subcover/instance.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "subcover/baselines.hpp"

namespace subcover {

namespace {

using nlohmann::json;

bool IsInteger(double v) { return std::floor(v) == v && std::isfinite(v); }

// Merge every coverage increment in [from, to) into one coverage oracle.
SetFunctionPtr MergeCoverage(const Instance& instance, int from, int to) {
  std::vector<std::vector<int>> owned(instance.n);
  std::vector<double> weights;
  for (int s = from; s < to; ++s) {
    const StreamEvent& ev = instance.stream[s];
    if (ev.kind != StreamEvent::Kind::kCoverageIncrement) continue;
    const int base = static_cast<int>(weights.size());
    weights.insert(weights.end(), ev.item_weights.begin(), ev.item_weights.end());
    for (int j = 0; j < instance.n; ++j) {
      for (int it : ev.sets[j]) owned[j].push_back(base + it);
    }
  }
  return std::make_shared<WeightedCoverage>(instance.n, std::move(owned),
                                            std::move(weights));
}

SetFunctionPtr SnapshotOracle(const Instance& instance, const StreamEvent& ev) {
  switch (ev.kind) {
    case StreamEvent::Kind::kExplicitTable:
      return std::make_shared<ExplicitTable>(instance.n, ev.values);
    case StreamEvent::Kind::kPartitionMatroid:
      return std::make_shared<PartitionMatroidRank>(instance.n, ev.parts,
                                                    ev.capacities);
    default:
      throw std::logic_error("not a snapshot event");
  }
}

}  // namespace

SetFunctionPtr Instance::FunctionAt(int t) const {
  if (t < 1 || t > horizon()) throw std::out_of_range("time step out of range");
  int snapshot = -1;
  for (int s = 0; s < t; ++s) {
    if (stream[s].kind != StreamEvent::Kind::kCoverageIncrement) snapshot = s;
  }
  SetFunctionPtr coverage;
  bool any_coverage = false;
  for (int s = snapshot + 1; s < t; ++s) {
    if (stream[s].kind == StreamEvent::Kind::kCoverageIncrement) {
      any_coverage = true;
      break;
    }
  }
  if (any_coverage) coverage = MergeCoverage(*this, snapshot + 1, t);
  if (snapshot < 0) {
    if (!coverage) return MergeCoverage(*this, 0, 0);  // empty stream prefix
    return coverage;
  }
  SetFunctionPtr snap = SnapshotOracle(*this, stream[snapshot]);
  if (!coverage) return snap;
  return std::make_shared<SumFunction>(
      n, std::vector<SetFunctionPtr>{std::move(snap), std::move(coverage)});
}

std::vector<SetFunctionPtr> Instance::FunctionSequence() const {
  std::vector<SetFunctionPtr> out;
  out.reserve(horizon());
  for (int t = 1; t <= horizon(); ++t) out.push_back(FunctionAt(t));
  return out;
}

bool Instance::IntegerValued() const {
  for (double c : costs) {
    if (!IsInteger(c)) return false;
  }
  for (const StreamEvent& ev : stream) {
    for (double w : ev.item_weights) {
      if (!IsInteger(w)) return false;
    }
    for (double v : ev.values) {
      if (!IsInteger(v)) return false;
    }
  }
  return true;
}

std::string ToJson(const Instance& instance) {
  json out;
  out["n"] = instance.n;
  if (!instance.labels.empty()) out["labels"] = instance.labels;
  out["costs"] = instance.costs;
  out["fmin"] = instance.fmin;
  out["fmax"] = instance.fmax;
  json stream = json::array();
  for (const StreamEvent& ev : instance.stream) {
    json e;
    switch (ev.kind) {
      case StreamEvent::Kind::kCoverageIncrement:
        e["kind"] = "coverage_increment";
        e["sets"] = ev.sets;
        e["item_weights"] = ev.item_weights;
        break;
      case StreamEvent::Kind::kExplicitTable:
        e["kind"] = "explicit_table";
        e["values"] = ev.values;
        break;
      case StreamEvent::Kind::kPartitionMatroid: {
        e["kind"] = "partition_matroid";
        json parts = json::array();
        for (Mask p : ev.parts) {
          json members = json::array();
          for (int j = 0; j < instance.n; ++j) {
            if (Contains(p, j)) members.push_back(j);
          }
          parts.push_back(members);
        }
        e["parts"] = parts;
        e["capacities"] = ev.capacities;
        break;
      }
    }
    stream.push_back(e);
  }
  out["stream"] = stream;
  return out.dump(2);
}

Instance FromJson(const std::string& text) {
  const json in = json::parse(text);
  Instance instance;
  instance.n = in.at("n").get<int>();
  if (instance.n < 1) throw std::invalid_argument("instance needs n >= 1");
  if (in.contains("labels")) {
    instance.labels = in["labels"].get<std::vector<std::string>>();
  }
  instance.costs = in.at("costs").get<std::vector<double>>();
  if (static_cast<int>(instance.costs.size()) != instance.n) {
    throw std::invalid_argument("costs must have n entries");
  }
  instance.fmin = in.at("fmin").get<double>();
  instance.fmax = in.at("fmax").get<double>();
  for (const json& e : in.at("stream")) {
    StreamEvent ev;
    const std::string kind = e.at("kind").get<std::string>();
    if (kind == "coverage_increment") {
      ev.kind = StreamEvent::Kind::kCoverageIncrement;
      ev.sets = e.at("sets").get<std::vector<std::vector<int>>>();
      ev.item_weights = e.at("item_weights").get<std::vector<double>>();
      if (static_cast<int>(ev.sets.size()) != instance.n) {
        throw std::invalid_argument("coverage event needs one set per element");
      }
    } else if (kind == "explicit_table") {
      ev.kind = StreamEvent::Kind::kExplicitTable;
      ev.values = e.at("values").get<std::vector<double>>();
    } else if (kind == "partition_matroid") {
      ev.kind = StreamEvent::Kind::kPartitionMatroid;
      for (const auto& members : e.at("parts")) {
        Mask p = 0;
        for (int j : members.get<std::vector<int>>()) p = With(p, j);
        ev.parts.push_back(p);
      }
      ev.capacities = e.at("capacities").get<std::vector<int>>();
    } else {
      throw std::invalid_argument("unknown event kind: " + kind);
    }
    instance.stream.push_back(std::move(ev));
  }
  return instance;
}

void SaveInstance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << ToJson(instance) << "\n";
}

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return FromJson(text);
}

namespace {

Instance GenerateSetCoverStream(const GeneratorParams& p) {
  std::mt19937_64 rng(p.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Instance inst;
  inst.n = p.n;
  inst.costs.assign(p.n, 1.0);
  inst.fmin = 1.0;
  inst.fmax = 1.0;
  for (int t = 0; t < p.t; ++t) {
    StreamEvent ev;
    ev.kind = StreamEvent::Kind::kCoverageIncrement;
    ev.sets.assign(p.n, {});
    ev.item_weights = {1.0};
    bool covered = false;
    while (!covered) {
      for (auto& s : ev.sets) s.clear();
      for (int j = 0; j < p.n; ++j) {
        if (unif(rng) < p.density) {
          ev.sets[j].push_back(0);
          covered = true;
        }
      }
    }
    inst.stream.push_back(std::move(ev));
  }
  // Items are unit weight, so fmin is 1; a single element can end up owning
  // one item per step, so fmax is its accumulated count.
  std::vector<int> owned_items(p.n, 0);
  for (const StreamEvent& ev : inst.stream) {
    for (int j = 0; j < p.n; ++j) {
      if (!ev.sets[j].empty()) ++owned_items[j];
    }
  }
  inst.fmax = static_cast<double>(
      *std::max_element(owned_items.begin(), owned_items.end()));
  return inst;
}

Instance GeneratePrefixCoverage(const GeneratorParams& p) {
  if (p.n > kMaxCheckGround) {
    throw std::invalid_argument(
        "prefix-coverage needs n <= 14 for exact fmin/fmax");
  }
  std::mt19937_64 rng(p.seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Instance inst;
  inst.n = p.n;
  inst.costs.resize(p.n);
  for (double& c : inst.costs) c = 1.0 + static_cast<double>(rng() % 5);
  for (int t = 0; t < p.t; ++t) {
    StreamEvent ev;
    ev.kind = StreamEvent::Kind::kCoverageIncrement;
    ev.sets.assign(p.n, {});
    const int items = 1 + static_cast<int>(rng() % 3);
    for (int it = 0; it < items; ++it) {
      ev.item_weights.push_back(1.0 + static_cast<double>(rng() % 5));
      bool covered = false;
      while (!covered) {
        for (int j = 0; j < p.n; ++j) {
          if (unif(rng) < p.density) {
            ev.sets[j].push_back(it);
            covered = true;
          }
        }
      }
    }
    inst.stream.push_back(std::move(ev));
  }
  // Declared bounds are exact: scan every marginal of every prefix.
  inst.fmin = 0.0;
  inst.fmax = 0.0;
  for (int t = 1; t <= inst.horizon(); ++t) {
    const SetFunctionPtr f = MaybeMemoize(inst.FunctionAt(t));
    const MarginalBounds b = ScanMarginalBounds(*f);
    if (b.fmax > inst.fmax) inst.fmax = b.fmax;
    if (b.fmin > 0.0 && (inst.fmin == 0.0 || b.fmin < inst.fmin)) {
      inst.fmin = b.fmin;
    }
  }
  if (inst.fmin == 0.0) inst.fmin = 1.0;
  if (inst.fmax == 0.0) inst.fmax = 1.0;
  return inst;
}

Instance GeneratePartitionMatroid(const GeneratorParams& p) {
  std::mt19937_64 rng(p.seed);
  Instance inst;
  inst.n = p.n;
  inst.costs.resize(p.n);
  for (double& c : inst.costs) c = 1.0 + static_cast<double>(rng() % 3);
  // Random partition into parts of size about 3.
  std::vector<int> order(p.n);
  for (int j = 0; j < p.n; ++j) order[j] = j;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Mask> parts;
  for (int i = 0; i < p.n; i += 3) {
    Mask part = 0;
    for (int k = i; k < std::min(i + 3, p.n); ++k) part = With(part, order[k]);
    parts.push_back(part);
  }
  std::vector<int> caps(parts.size(), 0);
  caps[rng() % parts.size()] = 1;
  for (int t = 0; t < p.t; ++t) {
    // Capacities only grow, so the stream is time-monotone.
    const std::size_t pick = rng() % parts.size();
    for (std::size_t off = 0; off < parts.size(); ++off) {
      const std::size_t idx = (pick + off) % parts.size();
      if (caps[idx] < Popcount(parts[idx])) {
        if (t > 0) ++caps[idx];
        break;
      }
    }
    StreamEvent ev;
    ev.kind = StreamEvent::Kind::kPartitionMatroid;
    ev.parts = parts;
    ev.capacities = caps;
    inst.stream.push_back(std::move(ev));
  }
  inst.fmin = 1.0;  // matroid rank marginals are 0 or 1
  inst.fmax = 1.0;
  return inst;
}

}  // namespace

Instance MakeThreeElementFixture() {
  Instance inst;
  inst.n = 3;
  inst.labels = {"a", "b", "y"};
  inst.costs = {1.0, 1.0, 1.0};
  inst.fmin = 1.0;
  inst.fmax = 9.0;
  StreamEvent ev;
  ev.kind = StreamEvent::Kind::kExplicitTable;
  // mask bits: a=1, b=2, y=4
  ev.values = {0.0, 9.0, 1.0, 10.0, 1.0, 10.0, 2.0, 10.0};
  inst.stream.push_back(std::move(ev));
  return inst;
}

Instance MakeVanishingStream() {
  Instance inst;
  inst.n = 2;
  inst.costs = {1.0, 1.0};
  inst.fmin = 1.0;
  inst.fmax = 1.0;
  StreamEvent zero;
  zero.kind = StreamEvent::Kind::kExplicitTable;
  zero.values = {0.0, 0.0, 0.0, 0.0};
  StreamEvent indicator;
  indicator.kind = StreamEvent::Kind::kExplicitTable;
  indicator.values = {0.0, 1.0, 0.0, 1.0};  // 1 iff element 0 present
  inst.stream = {zero, indicator, zero};
  return inst;
}

Instance Generate(const std::string& kind, const GeneratorParams& params) {
  if (params.n < 1) throw std::invalid_argument("n must be >= 1");
  if (kind == "set-cover-stream") {
    if (params.t < 1) throw std::invalid_argument("t must be >= 1");
    if (!(params.density > 0.0 && params.density <= 1.0)) {
      throw std::invalid_argument("density must lie in (0,1]");
    }
    return GenerateSetCoverStream(params);
  }
  if (kind == "prefix-coverage") {
    if (params.t < 1) throw std::invalid_argument("t must be >= 1");
    if (!(params.density > 0.0 && params.density <= 1.0)) {
      throw std::invalid_argument("density must lie in (0,1]");
    }
    return GeneratePrefixCoverage(params);
  }
  if (kind == "partition-matroid") {
    if (params.t < 1) throw std::invalid_argument("t must be >= 1");
    return GeneratePartitionMatroid(params);
  }
  if (kind == "three-element") return MakeThreeElementFixture();
  if (kind == "vanishing-stream") return MakeVanishingStream();
  throw std::invalid_argument("unknown generator kind: " + kind);
}

}  // namespace subcover
