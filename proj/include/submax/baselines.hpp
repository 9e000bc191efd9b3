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

// Comparison algorithms and the exhaustive oracle used as ground truth by
// the verification suites. Ties break toward the lowest element index
// everywhere, matching the rest of the library.

#ifndef SUBMAX_BASELINES_HPP_
#define SUBMAX_BASELINES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

#include "submax/constraints.hpp"
#include "submax/errors.hpp"
#include "submax/oracle.hpp"
#include "submax/rng.hpp"
#include "submax/solve_result.hpp"
#include "submax/subset.hpp"

namespace submax {

// Plain greedy: keep adding the feasible element of largest marginal gain
// while any feasible element remains. O(nk) queries under cardinality.
inline SolveResult greedy(QueryCountingOracle& oracle, const Feasibility& feasibility) {
  const int n = oracle.n();
  const std::uint64_t start = oracle.count();
  Subset s(n);
  double fs = oracle.evaluate(s);
  for (;;) {
    int best = -1;
    double best_gain = 0.0;
    for (int u = 0; u < n; ++u) {
      if (!feasibility.can_add(s, u)) continue;
      double gain = oracle.marginal(u, s, fs);
      if (best < 0 || gain > best_gain) {
        best = u;
        best_gain = gain;
      }
    }
    if (best < 0) break;
    s.add(best);
    fs += best_gain;
  }
  SolveResult res;
  res.set = s.elements();
  res.value = fs;
  res.queries = oracle.count() - start;
  return res;
}

// Lazy greedy under a cardinality constraint. Stale marginals are valid
// upper bounds by submodularity, so entries are refreshed only when they
// reach the top of the heap. Output matches greedy under the shared
// tie-break and never uses more queries.
inline SolveResult lazy_greedy(QueryCountingOracle& oracle, int k) {
  const int n = oracle.n();
  if (k < 0 || k > n) throw InvalidParam("lazy greedy: need 0 <= k <= n");
  const std::uint64_t start = oracle.count();

  struct Entry {
    double bound;
    int element;
    int stamp;  // |S| at which the bound was computed
  };
  // Max by bound; equal bounds pop the smaller element first.
  auto worse = [](const Entry& a, const Entry& b) {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.element > b.element;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);

  Subset s(n);
  double fs = oracle.evaluate(s);
  for (int u = 0; u < n; ++u) {
    heap.push({oracle.marginal(u, s, fs), u, 0});
  }
  while (s.size() < k && !heap.empty()) {
    Entry top = heap.top();
    heap.pop();
    if (top.stamp == s.size()) {
      s.add(top.element);
      fs += top.bound;
      continue;
    }
    top.bound = oracle.marginal(top.element, s, fs);
    top.stamp = s.size();
    if (heap.empty() || !worse(top, heap.top())) {
      s.add(top.element);
      fs += top.bound;
    } else {
      heap.push(top);
    }
  }

  SolveResult res;
  res.set = s.elements();
  res.value = fs;
  res.queries = oracle.count() - start;
  return res;
}

// SampleGreedy: k rounds, each drawing sample_size elements uniformly
// without replacement from the unpicked pool and adding the best of them.
inline SolveResult stochastic_greedy_fixed(QueryCountingOracle& oracle, int k, int sample_size,
                                           std::uint64_t seed) {
  const int n = oracle.n();
  if (k < 0 || k > n) throw InvalidParam("stochastic greedy: need 0 <= k <= n");
  if (sample_size < 1) throw InvalidParam("stochastic greedy: sample size must be >= 1");
  const std::uint64_t start = oracle.count();

  Rng rng(seed);
  Subset s(n);
  double fs = oracle.evaluate(s);
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int round = 0; round < k && !pool.empty(); ++round) {
    std::vector<int> scratch = pool;
    std::vector<int> sample = rng.sample_without_replacement(scratch, sample_size);
    std::sort(sample.begin(), sample.end());
    int best = -1;
    double best_gain = 0.0;
    for (int u : sample) {
      double gain = oracle.marginal(u, s, fs);
      if (best < 0 || gain > best_gain) {
        best = u;
        best_gain = gain;
      }
    }
    s.add(best);
    fs += best_gain;
    pool.erase(std::find(pool.begin(), pool.end(), best));
  }

  SolveResult res;
  res.set = s.elements();
  res.value = fs;
  res.queries = oracle.count() - start;
  return res;
}

// Sample size s = ceil((n/k) * ln(1/eps)), clamped to at least 1.
inline SolveResult stochastic_greedy(QueryCountingOracle& oracle, int k, double eps,
                                     std::uint64_t seed) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidParam("stochastic greedy: eps must be in (0,1)");
  if (k < 1) throw InvalidParam("stochastic greedy: k must be >= 1");
  const double raw = std::ceil(static_cast<double>(oracle.n()) / k * std::log(1.0 / eps));
  const int sample_size = std::max(1, static_cast<int>(raw));
  return stochastic_greedy_fixed(oracle, k, sample_size, seed);
}

// Density greedy for a knapsack: repeatedly add the feasible element with
// the best gain/cost ratio, skipping elements that would overflow.
inline SolveResult density_greedy(QueryCountingOracle& oracle, const KnapsackInstance& knapsack) {
  const int n = oracle.n();
  const std::uint64_t start = oracle.count();
  Subset s(n);
  double fs = oracle.evaluate(s);
  double load = 0.0;
  for (;;) {
    int best = -1;
    double best_density = 0.0;
    double best_gain = 0.0;
    for (int u = 0; u < n; ++u) {
      if (s.contains(u) || !knapsack.active(u) || load + knapsack.cost(u) > 1.0) continue;
      double gain = oracle.marginal(u, s, fs);
      double density = gain / knapsack.cost(u);
      if (best < 0 || density > best_density) {
        best = u;
        best_density = density;
        best_gain = gain;
      }
    }
    if (best < 0) break;
    fs += best_gain;
    load += knapsack.cost(best);
    s.add(best);
  }
  SolveResult res;
  res.set = s.elements();
  res.value = fs;
  res.queries = oracle.count() - start;
  return res;
}

// Deterministic double greedy for unconstrained (possibly non-monotone)
// submodular maximization; 1/3 of the optimum. Single pass keeping X
// inside Y; u stays iff f(u|X) >= f(Y-u) - f(Y).
inline SolveResult double_greedy(QueryCountingOracle& oracle) {
  const int n = oracle.n();
  const std::uint64_t start = oracle.count();
  Subset x(n);
  Subset y = Subset::full(n);
  double fx = oracle.evaluate(x);
  double fy = oracle.evaluate(y);
  for (int u = 0; u < n; ++u) {
    double a = oracle.evaluate(x.with(u)) - fx;
    double b = oracle.evaluate(y.without(u)) - fy;
    if (a >= b) {
      x.add(u);
      fx += a;
    } else {
      y.remove(u);
      fy += b;
    }
  }
  SolveResult res;
  res.set = x.elements();
  res.value = fx;
  res.queries = oracle.count() - start;
  return res;
}

// Randomized variant (1/2 in expectation): u is kept with probability
// a' / (a' + b') where a' = max(a, 0), b' = max(b, 0).
inline SolveResult double_greedy_randomized(QueryCountingOracle& oracle, std::uint64_t seed) {
  const int n = oracle.n();
  const std::uint64_t start = oracle.count();
  Rng rng(seed);
  Subset x(n);
  Subset y = Subset::full(n);
  double fx = oracle.evaluate(x);
  double fy = oracle.evaluate(y);
  for (int u = 0; u < n; ++u) {
    double a = oracle.evaluate(x.with(u)) - fx;
    double b = oracle.evaluate(y.without(u)) - fy;
    double a_pos = std::max(a, 0.0);
    double b_pos = std::max(b, 0.0);
    bool keep = (a_pos + b_pos == 0.0) ? true : rng.next_unit() < a_pos / (a_pos + b_pos);
    if (keep) {
      x.add(u);
      fx += a;
    } else {
      y.remove(u);
      fy += b;
    }
  }
  SolveResult res;
  res.set = x.elements();
  res.value = fx;
  res.queries = oracle.count() - start;
  return res;
}

// Exhaustive argmax over feasible sets; the ground truth for acceptance
// testing. DFS in index order; downward closure of the feasibility makes
// the pruning exact. Guarded to n <= 24.
inline std::pair<std::vector<int>, double> brute_force(QueryCountingOracle& oracle,
                                                       const Feasibility& feasibility) {
  const int n = oracle.n();
  if (n > 24) throw TooLarge("brute force: n must be <= 24");

  Subset s(n);
  double fs = oracle.evaluate(s);
  std::vector<int> best_set;
  double best_value = fs;

  // Recursive extension with elements above the last added index.
  auto dfs = [&](auto&& self, int next) -> void {
    for (int u = next; u < n; ++u) {
      if (!feasibility.can_add(s, u)) continue;
      double gain = oracle.marginal(u, s, fs);
      s.add(u);
      fs += gain;
      if (fs > best_value) {
        best_value = fs;
        best_set = s.elements();
      }
      self(self, u + 1);
      s.remove(u);
      fs -= gain;
    }
  };
  dfs(dfs, 0);
  return {best_set, best_value};
}

}  // namespace submax

#endif  // SUBMAX_BASELINES_HPP_
