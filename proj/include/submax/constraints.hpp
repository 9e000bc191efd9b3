// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Feasibility structures: cardinality, single knapsack, multi-knapsack and
// p-set systems, with the normalization preprocessing. After normalization
// every stored cost is in (0, 1] and all budgets equal 1; elements whose
// original cost exceeded the budget are dropped, elements of cost zero are
// forced (appended to solutions by the solver wrappers, never seen by the
// core algorithms).

#ifndef SUBMAX_CONSTRAINTS_HPP_
#define SUBMAX_CONSTRAINTS_HPP_

#include <algorithm>
#include <limits>
#include <memory>
#include <numeric>
#include <vector>

#include "submax/errors.hpp"
#include "submax/subset.hpp"

namespace submax {

class KnapsackInstance {
 public:
  // Costs are indexed by the original element ids; dropped elements keep a
  // +inf sentinel so they can never pass a budget check.
  static KnapsackInstance normalize(const std::vector<double>& raw_costs, double budget) {
    if (budget <= 0.0) throw InvalidParam("knapsack: budget must be positive");
    KnapsackInstance inst;
    inst.cost_.assign(raw_costs.size(), std::numeric_limits<double>::infinity());
    int kept = 0;
    for (int u = 0; u < static_cast<int>(raw_costs.size()); ++u) {
      double c = raw_costs[u];
      if (c < 0.0) throw InvalidParam("knapsack: negative cost");
      if (c == 0.0) {
        inst.cost_[u] = 0.0;
        inst.forced_.push_back(u);
      } else if (c > budget) {
        inst.dropped_.push_back(u);
      } else {
        inst.cost_[u] = c / budget;
        ++kept;
      }
    }
    if (kept == 0 && inst.forced_.empty()) {
      throw EmptyAfterNormalization("knapsack: every element exceeds the budget");
    }
    return inst;
  }

  static KnapsackInstance uniform(int n, double cost_each) {
    return normalize(std::vector<double>(n, cost_each), 1.0);
  }

  int n() const { return static_cast<int>(cost_.size()); }

  // Elements the core algorithms may consider: kept with cost in (0, 1].
  bool active(int u) const {
    double c = cost_[u];
    return c > 0.0 && c <= 1.0;
  }

  double cost(int u) const { return cost_[u]; }

  double cost_of(const Subset& s) const {
    double total = 0.0;
    for (int u : s.elements()) total += cost_[u];
    return total;
  }

  bool feasible(const Subset& s) const { return cost_of(s) <= 1.0; }

  const std::vector<int>& forced() const { return forced_; }
  const std::vector<int>& dropped() const { return dropped_; }

 private:
  std::vector<double> cost_;
  std::vector<int> forced_;
  std::vector<int> dropped_;
};

// Cardinality constraint |S| <= k; equivalent to a knapsack with
// c(u) = 1/k, but budget checks stay integral.
struct CardinalityInstance {
  int k;

  CardinalityInstance(int k_max, int n) : k(k_max) {
    if (k < 1 || k > n) throw InvalidParam("cardinality: need 1 <= k <= n");
  }

  KnapsackInstance as_knapsack(int n) const { return KnapsackInstance::uniform(n, 1.0 / k); }
};

// d knapsack constraints with budgets scaled to 1. Elements with some
// c_i(u) > 1 are dropped; elements with sum_i c_i(u) = 0 are forced.
class MultiKnapsackInstance {
 public:
  static MultiKnapsackInstance normalize(const std::vector<std::vector<double>>& raw_costs,
                                         const std::vector<double>& budgets) {
    if (raw_costs.empty()) throw InvalidParam("multi-knapsack: need d >= 1");
    if (raw_costs.size() != budgets.size()) throw InvalidParam("multi-knapsack: d mismatch");
    const int d = static_cast<int>(raw_costs.size());
    const std::size_t n = raw_costs[0].size();
    MultiKnapsackInstance inst;
    inst.cost_.assign(d, std::vector<double>(n, std::numeric_limits<double>::infinity()));
    inst.total_.assign(n, 0.0);
    std::vector<bool> drop(n, false);
    for (int i = 0; i < d; ++i) {
      if (raw_costs[i].size() != n) throw InvalidParam("multi-knapsack: ragged costs");
      if (budgets[i] <= 0.0) throw InvalidParam("multi-knapsack: budget must be positive");
      for (std::size_t u = 0; u < n; ++u) {
        double c = raw_costs[i][u];
        if (c < 0.0) throw InvalidParam("multi-knapsack: negative cost");
        if (c / budgets[i] > 1.0) drop[u] = true;
      }
    }
    for (std::size_t u = 0; u < n; ++u) {
      if (drop[u]) {
        inst.dropped_.push_back(static_cast<int>(u));
        continue;
      }
      double total = 0.0;
      for (int i = 0; i < d; ++i) {
        double c = raw_costs[i][u] / budgets[i];
        inst.cost_[i][u] = c;
        total += c;
      }
      inst.total_[u] = total;
      if (total == 0.0) inst.forced_.push_back(static_cast<int>(u));
    }
    if (inst.dropped_.size() == n) {
      throw EmptyAfterNormalization("multi-knapsack: every element exceeds some budget");
    }
    return inst;
  }

  int n() const { return static_cast<int>(total_.size()); }
  int d() const { return static_cast<int>(cost_.size()); }

  bool active(int u) const {
    return total_[u] > 0.0 && cost_[0][u] != std::numeric_limits<double>::infinity();
  }

  double cost(int i, int u) const { return cost_[i][u]; }

  // sum_i c_i(u), precomputed.
  double total_cost(int u) const { return total_[u]; }

  std::vector<double> load_of(const Subset& s) const {
    std::vector<double> load(d(), 0.0);
    for (int u : s.elements()) {
      for (int i = 0; i < d(); ++i) load[i] += cost_[i][u];
    }
    return load;
  }

  bool feasible(const Subset& s) const {
    auto load = load_of(s);
    return std::all_of(load.begin(), load.end(), [](double x) { return x <= 1.0; });
  }

  const std::vector<int>& forced() const { return forced_; }
  const std::vector<int>& dropped() const { return dropped_; }

 private:
  std::vector<std::vector<double>> cost_;  // [i][u], normalized
  std::vector<double> total_;
  std::vector<int> forced_;
  std::vector<int> dropped_;
};

// Independence oracle of a p-set system. Downward closed; the empty set is
// independent. p is caller-declared for custom systems; the shipped
// matroids compute it. The rank is a declared upper bound used only in
// complexity accounting.
class SetSystem {
 public:
  virtual ~SetSystem() = default;

  virtual bool is_independent(const Subset& s) const = 0;
  virtual bool can_add(const Subset& s, int u) const {
    if (s.contains(u)) return false;
    return is_independent(s.with(u));
  }
  virtual int p() const = 0;
  virtual int rank_bound() const = 0;
};

class UniformMatroid : public SetSystem {
 public:
  explicit UniformMatroid(int k) : k_(k) {
    if (k_ < 0) throw InvalidParam("uniform matroid: negative rank");
  }

  bool is_independent(const Subset& s) const override { return s.size() <= k_; }
  bool can_add(const Subset& s, int u) const override {
    return !s.contains(u) && s.size() < k_;
  }
  int p() const override { return 1; }
  int rank_bound() const override { return k_; }

 private:
  int k_;
};

class PartitionMatroid : public SetSystem {
 public:
  // part[u] in [0, limits.size()); at most limits[p] elements per part.
  PartitionMatroid(std::vector<int> part, std::vector<int> limits)
      : part_(std::move(part)), limits_(std::move(limits)) {
    for (int pu : part_) {
      if (pu < 0 || pu >= static_cast<int>(limits_.size())) {
        throw InvalidParam("partition matroid: part id out of range");
      }
    }
  }

  bool is_independent(const Subset& s) const override {
    std::vector<int> used(limits_.size(), 0);
    for (int u : s.elements()) {
      if (++used[part_[u]] > limits_[part_[u]]) return false;
    }
    return true;
  }

  bool can_add(const Subset& s, int u) const override {
    if (s.contains(u)) return false;
    int used = 0;
    for (int v : s.elements()) {
      if (part_[v] == part_[u]) ++used;
    }
    return used < limits_[part_[u]];
  }

  int p() const override { return 1; }
  int rank_bound() const override {
    return std::accumulate(limits_.begin(), limits_.end(), 0);
  }

 private:
  std::vector<int> part_;
  std::vector<int> limits_;
};

// Intersection of component systems; a (sum of component p)-set system.
class IntersectionSystem : public SetSystem {
 public:
  explicit IntersectionSystem(std::vector<const SetSystem*> components)
      : components_(std::move(components)) {
    if (components_.empty()) throw InvalidParam("intersection: need at least one component");
  }

  bool is_independent(const Subset& s) const override {
    for (const SetSystem* c : components_) {
      if (!c->is_independent(s)) return false;
    }
    return true;
  }

  bool can_add(const Subset& s, int u) const override {
    for (const SetSystem* c : components_) {
      if (!c->can_add(s, u)) return false;
    }
    return true;
  }

  int p() const override {
    int total = 0;
    for (const SetSystem* c : components_) total += c->p();
    return total;
  }

  int rank_bound() const override {
    int r = std::numeric_limits<int>::max();
    for (const SetSystem* c : components_) r = std::min(r, c->rank_bound());
    return r;
  }

 private:
  std::vector<const SetSystem*> components_;
};

// Downward-closed feasibility used by the generic baselines (greedy, brute
// force): the single question they ask is whether S + u stays feasible.
class Feasibility {
 public:
  virtual ~Feasibility() = default;
  virtual bool can_add(const Subset& s, int u) const = 0;
};

class CardinalityFeasibility : public Feasibility {
 public:
  explicit CardinalityFeasibility(int k) : k_(k) {}
  bool can_add(const Subset& s, int u) const override {
    return !s.contains(u) && s.size() < k_;
  }

 private:
  int k_;
};

class KnapsackFeasibility : public Feasibility {
 public:
  explicit KnapsackFeasibility(const KnapsackInstance& inst) : inst_(&inst) {}
  bool can_add(const Subset& s, int u) const override {
    if (s.contains(u) || !inst_->active(u)) return false;
    return inst_->cost_of(s) + inst_->cost(u) <= 1.0;
  }

 private:
  const KnapsackInstance* inst_;
};

class SystemFeasibility : public Feasibility {
 public:
  explicit SystemFeasibility(const SetSystem& system) : system_(&system) {}
  bool can_add(const Subset& s, int u) const override { return system_->can_add(s, u); }

 private:
  const SetSystem* system_;
};

// p-set system plus d knapsacks, the SMKS feasibility.
class SmksFeasibility : public Feasibility {
 public:
  SmksFeasibility(const SetSystem& system, const MultiKnapsackInstance& mk)
      : system_(&system), mk_(&mk) {}

  bool can_add(const Subset& s, int u) const override {
    if (s.contains(u) || !mk_->active(u)) return false;
    if (!system_->can_add(s, u)) return false;
    auto load = mk_->load_of(s);
    for (int i = 0; i < mk_->d(); ++i) {
      if (load[i] + mk_->cost(i, u) > 1.0) return false;
    }
    return true;
  }

 private:
  const SetSystem* system_;
  const MultiKnapsackInstance* mk_;
};

class NoConstraintFeasibility : public Feasibility {
 public:
  bool can_add(const Subset& s, int u) const override { return !s.contains(u); }
};

}  // namespace submax

#endif  // SUBMAX_CONSTRAINTS_HPP_
