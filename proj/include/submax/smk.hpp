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

// Deterministic linear-time maximization under a cardinality or knapsack
// constraint: a single-pass estimator of the optimum, a threshold greedy
// driven by that estimate, and the snapshot post-processing step that
// turns the threshold greedy into a (1/2 - eps)-approximation for general
// knapsacks.
//
// Conventions shared by everything in this header: elements are scanned in
// ground-set index order, ties go to the lowest index, and every candidate
// inspection costs one oracle query by threading the cached value of the
// current solution.

#ifndef SUBMAX_SMK_HPP_
#define SUBMAX_SMK_HPP_

#include <cmath>
#include <cstdint>
#include <vector>

#include "submax/constraints.hpp"
#include "submax/errors.hpp"
#include "submax/oracle.hpp"
#include "submax/solve_result.hpp"
#include "submax/subset.hpp"

namespace submax {

// Budget models plugged into the estimator and the threshold greedy. A
// model answers, for the growing solution, whether one more element fits;
// the cardinality model keeps the check integral instead of accumulating
// 1/k in floating point.

class KnapsackBudget {
 public:
  explicit KnapsackBudget(const KnapsackInstance& inst) : inst_(&inst) {}

  bool usable(int u) const { return inst_->active(u); }
  double cost(int u) const { return inst_->cost(u); }
  bool fits(int u) const { return cost(u) + load_ <= 1.0; }
  void add(int u) { load_ += cost(u); }
  double load() const { return load_; }

 private:
  const KnapsackInstance* inst_;
  double load_ = 0.0;
};

class CardinalityBudget {
 public:
  explicit CardinalityBudget(int k) : k_(k) {
    if (k_ < 1) throw InvalidParam("cardinality budget: k must be >= 1");
  }

  bool usable(int) const { return true; }
  double cost(int) const { return 1.0 / k_; }
  bool fits(int) const { return count_ < k_; }
  void add(int) { ++count_; }
  double load() const { return static_cast<double>(count_) / k_; }

 private:
  int k_;
  int count_ = 0;
};

struct EstimatorOutput {
  double gamma = 0.0;         // f(S~)/4
  Subset grown;               // the grown set S~
  double grown_value = 0.0;   // f(S~)
  double empty_value = 0.0;   // f(empty), reusable by callers
  std::vector<std::uint8_t> accepted;  // per-element accept/reject decision
  std::uint64_t queries = 0;

  explicit EstimatorOutput(int n) : grown(n), accepted(n, 0) {}
};

// Single pass over the ground set; adds an element whenever its density
// against the current set is at least the current value. The returned
// gamma satisfies gamma <= f(OPT) <= 8 * gamma. Spends n + 1 queries.
// Note the grown set ignores the budget on purpose.
template <class Costs>
EstimatorOutput estimate_opt(QueryCountingOracle& oracle, const Costs& costs) {
  const int n = oracle.n();
  EstimatorOutput out(n);
  const std::uint64_t start = oracle.count();

  Subset s(n);
  double fs = oracle.evaluate(s);
  out.empty_value = fs;
  for (int u = 0; u < n; ++u) {
    if (!costs.usable(u)) continue;
    double gain = oracle.marginal(u, s, fs);
    if (gain / costs.cost(u) >= fs) {
      s.add(u);
      fs += gain;
      out.accepted[u] = 1;
    }
  }
  out.grown = std::move(s);
  out.grown_value = fs;
  out.gamma = fs / 4.0;
  out.queries = oracle.count() - start;
  return out;
}

struct GreedyTrace {
  std::vector<int> sequence;        // u_1 .. u_l in acceptance order
  std::vector<double> prefix_cost;  // c(S_0) .. c(S_l), strictly increasing
  std::vector<double> prefix_value; // f(S_0) .. f(S_l), non-decreasing
  double gamma = 0.0;
  double final_threshold = 0.0;
  std::uint64_t queries = 0;        // includes the estimator's queries

  int steps() const { return static_cast<int>(sequence.size()); }
  double solution_value() const { return prefix_value.back(); }
  double solution_cost() const { return prefix_cost.back(); }
};

// Threshold greedy between 8*alpha*gamma and (1-eps)*gamma/e. Each outer
// round scans the ground set once and adds every element whose density
// clears the round's threshold. Outer rounds <= 3 + (4 + ln alpha)/eps.
template <class Budget>
GreedyTrace fast_threshold_greedy(QueryCountingOracle& oracle, Budget budget,
                                  double eps, double alpha) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidParam("threshold greedy: eps must be in (0,1)");
  if (!(alpha >= 1.0)) throw InvalidParam("threshold greedy: alpha must be >= 1");

  const int n = oracle.n();
  const std::uint64_t start = oracle.count();
  EstimatorOutput est = estimate_opt(oracle, budget);

  GreedyTrace trace;
  trace.gamma = est.gamma;
  trace.prefix_cost.push_back(0.0);
  trace.prefix_value.push_back(est.empty_value);

  // A zero estimate means f vanishes on every singleton; the threshold
  // window is empty and the solution stays empty.
  if (est.gamma <= 0.0) {
    trace.final_threshold = 0.0;
    trace.queries = oracle.count() - start;
    return trace;
  }

  Subset s(n);
  double fs = est.empty_value;
  double tau = 8.0 * alpha * est.gamma;
  const double floor_tau = (1.0 - eps) * est.gamma / std::exp(1.0);
  while (tau > floor_tau) {
    for (int u = 0; u < n; ++u) {
      if (s.contains(u) || !budget.usable(u) || !budget.fits(u)) continue;
      double gain = oracle.marginal(u, s, fs);
      if (gain / budget.cost(u) >= tau) {
        s.add(u);
        budget.add(u);
        fs += gain;
        detail::require(budget.load() <= 1.0, "threshold greedy: budget overrun");
        trace.sequence.push_back(u);
        trace.prefix_cost.push_back(budget.load());
        trace.prefix_value.push_back(fs);
      }
    }
    tau *= (1.0 - eps);
  }
  trace.final_threshold = tau;
  trace.queries = oracle.count() - start;
  return trace;
}

namespace detail {

inline SolveResult result_from_trace(const GreedyTrace& trace) {
  SolveResult res;
  res.set = trace.sequence;
  res.value = trace.solution_value();
  res.queries = trace.queries;
  return res;
}

}  // namespace detail

// Cardinality-constrained maximization; (1 - 1/e - eps) guarantee with
// query count independent of k.
inline SolveResult smc_maximize(QueryCountingOracle& oracle, int k, double eps,
                                GreedyTrace* trace_out = nullptr) {
  if (k < 1 || k > oracle.n()) throw InvalidParam("smc: need 1 <= k <= n");
  GreedyTrace trace = fast_threshold_greedy(oracle, CardinalityBudget(k), eps, 1.0);
  SolveResult res = detail::result_from_trace(trace);
  res.trace.push_back({"threshold_greedy", res.value, trace.queries});
  if (trace_out) *trace_out = std::move(trace);
  return res;
}

struct SmkSnapshot {
  int index = 0;            // i
  int prefix_len = 0;       // |S^(i)| as a prefix of the growth sequence
  double prefix_cost = 0.0; // c(S^(i)) <= eps * (1+eps)^i
  int augment = -1;         // u^(i), or -1 when nothing fits
  double value = 0.0;       // f(S^(i)+)
};

struct SmkDetail {
  GreedyTrace trace;
  std::vector<SmkSnapshot> snapshots;
  double cap = 0.0;  // last eps*(1+eps)^i considered
};

// Knapsack-constrained maximization, (1/2 - eps) guarantee: runs the
// threshold greedy with alpha = 1/eps, then augments O(log(1/eps)/eps)
// snapshots of the growth sequence with one element each and also sweeps
// all singletons. Forced zero-cost elements are appended at the very end.
inline SolveResult smk_maximize(QueryCountingOracle& oracle, const KnapsackInstance& knapsack,
                                double eps, SmkDetail* detail_out = nullptr) {
  if (!(eps > 0.0 && eps <= 0.5)) throw InvalidParam("smk: eps must be in (0, 1/2]");
  const int n = oracle.n();
  const std::uint64_t start = oracle.count();

  GreedyTrace trace = fast_threshold_greedy(oracle, KnapsackBudget(knapsack), eps, 1.0 / eps);
  const std::uint64_t greedy_queries = oracle.count() - start;

  // Candidate pool: the final greedy set, every singleton, and every
  // augmented snapshot. First listed wins ties.
  std::vector<int> best_set = trace.sequence;
  double best_value = trace.solution_value();

  Subset grown(n);  // rebuilt so prefixes can be materialized cheaply
  for (int u : trace.sequence) grown.add(u);

  for (int u = 0; u < n; ++u) {
    if (!knapsack.active(u)) continue;
    double fu = oracle.evaluate(Subset(n).with(u));
    if (fu > best_value) {
      best_value = fu;
      best_set = {u};
    }
  }

  std::vector<SmkSnapshot> snapshots;
  const int i_max = static_cast<int>(std::floor(std::log(1.0 / eps) / std::log1p(eps)));
  double cap = eps;
  Subset prefix(n);
  double prefix_value = trace.prefix_value[0];
  int len = 0;
  for (int i = 0; i <= i_max; ++i, cap *= (1.0 + eps)) {
    // Maximal prefix with cost <= cap; c(S_0) = 0 always qualifies.
    while (len < trace.steps() && trace.prefix_cost[len + 1] <= cap) {
      prefix.add(trace.sequence[len]);
      ++len;
      prefix_value = trace.prefix_value[len];
    }
    detail::require(trace.prefix_cost[len] <= cap, "smk: snapshot cap below c(S_0)");

    SmkSnapshot snap;
    snap.index = i;
    snap.prefix_len = len;
    snap.prefix_cost = trace.prefix_cost[len];
    snap.value = prefix_value;

    const double residual = 1.0 - snap.prefix_cost;
    double best_gain = -1.0;
    for (int u = 0; u < n; ++u) {
      if (!knapsack.active(u) || knapsack.cost(u) > residual) continue;
      double gain = oracle.marginal(u, prefix, prefix_value);
      if (gain > best_gain) {
        best_gain = gain;
        snap.augment = u;
      }
    }
    if (snap.augment >= 0) snap.value = prefix_value + best_gain;

    if (snap.value > best_value) {
      best_value = snap.value;
      best_set.assign(trace.sequence.begin(), trace.sequence.begin() + len);
      if (snap.augment >= 0 && !prefix.contains(snap.augment)) {
        best_set.push_back(snap.augment);
      }
    }
    snapshots.push_back(snap);
  }

  SolveResult res;
  res.set = std::move(best_set);
  res.value = best_value;
  res.queries = oracle.count() - start;
  res.trace.push_back({"threshold_greedy", trace.solution_value(), greedy_queries});
  res.trace.push_back({"post_processing", best_value, res.queries - greedy_queries});

  // Zero-cost elements always fit and, with f monotone, never hurt.
  if (!knapsack.forced().empty()) {
    Subset final_set = Subset::of(n, res.set);
    for (int u : knapsack.forced()) {
      if (!final_set.contains(u)) final_set.add(u);
    }
    res.set = final_set.elements();
    res.value = oracle.evaluate(final_set);
    res.queries = oracle.count() - start;
  }

  if (detail_out) {
    detail_out->trace = std::move(trace);
    detail_out->snapshots = std::move(snapshots);
    detail_out->cap = cap / (1.0 + eps);
  }
  return res;
}

}  // namespace submax

#endif  // SUBMAX_SMK_HPP_
