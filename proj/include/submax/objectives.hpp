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

// Concrete monotone submodular objectives. All objectives are immutable
// after construction and safe to share read-only across runs; evaluation
// uses per-call scratch only.

#ifndef SUBMAX_OBJECTIVES_HPP_
#define SUBMAX_OBJECTIVES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <tuple>
#include <utility>
#include <vector>

#include "submax/errors.hpp"
#include "submax/oracle.hpp"
#include "submax/subset.hpp"

namespace submax {

// f(S) = |union of cover(u) over u in S| for per-element subsets of a
// finite universe.
class CoverageFunction : public SetFunction {
 public:
  CoverageFunction(std::vector<std::vector<int>> cover_sets, int universe)
      : cover_(std::move(cover_sets)), universe_(universe) {
    if (universe_ < 0) throw InvalidParam("coverage: negative universe");
    for (const auto& cs : cover_) {
      for (int v : cs) {
        if (v < 0 || v >= universe_) throw InvalidParam("coverage: item out of universe");
      }
    }
  }

  double value(const Subset& s) const override {
    std::vector<std::uint64_t> seen((universe_ + 63) / 64, 0);
    int covered = 0;
    for (int u : s.elements()) {
      for (int v : cover_[u]) {
        std::uint64_t& word = seen[static_cast<std::size_t>(v) >> 6];
        std::uint64_t bit = std::uint64_t{1} << (v & 63);
        if (!(word & bit)) {
          word |= bit;
          ++covered;
        }
      }
    }
    return static_cast<double>(covered);
  }

  int ground_size() const override { return static_cast<int>(cover_.size()); }
  int universe() const { return universe_; }
  const std::vector<int>& cover(int u) const { return cover_[u]; }

 private:
  std::vector<std::vector<int>> cover_;
  int universe_;
};

// Vertex cover objective f(S) = |N(S) u S| on an undirected graph given
// as an edge list; a coverage function with cover(u) = N(u) + u.
inline CoverageFunction vertex_cover_function(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> cover(n);
  for (int u = 0; u < n; ++u) cover[u].push_back(u);
  std::vector<std::vector<std::uint8_t>> dedup;  // avoid duplicate neighbors
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw InvalidParam("edge endpoint out of range");
    if (a == b) continue;
    cover[a].push_back(b);
    cover[b].push_back(a);
  }
  for (auto& cs : cover) {
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  }
  return CoverageFunction(std::move(cover), n);
}

// f(S) = (1/n) * sum_i max_{j in S} M[i][j], with max over the empty set
// taken as 0 so that f(empty) = 0.
class FacilityLocationFunction : public SetFunction {
 public:
  FacilityLocationFunction(std::vector<double> similarity_row_major, int n)
      : m_(std::move(similarity_row_major)), n_(n) {
    if (n_ < 1 || m_.size() != static_cast<std::size_t>(n_) * n_) {
      throw InvalidParam("facility location: similarity matrix must be n x n");
    }
    for (double x : m_) {
      if (x < 0.0) throw InvalidParam("facility location: negative similarity");
    }
  }

  double value(const Subset& s) const override {
    if (s.empty()) return 0.0;
    double total = 0.0;
    for (int i = 0; i < n_; ++i) {
      const double* row = &m_[static_cast<std::size_t>(i) * n_];
      double best = 0.0;
      for (int j : s.elements()) best = std::max(best, row[j]);
      total += best;
    }
    return total / n_;
  }

  int ground_size() const override { return n_; }

 private:
  std::vector<double> m_;
  int n_;
};

// f(S) = log det(I + alpha * M_S) for a symmetric PSD kernel M, where
// M_S is the principal submatrix on S. Evaluated by a dense Cholesky of
// the |S| x |S| submatrix.
class LogDetFunction : public SetFunction {
 public:
  LogDetFunction(std::vector<double> kernel_row_major, int n, double alpha)
      : m_(std::move(kernel_row_major)), n_(n), alpha_(alpha) {
    if (n_ < 1 || m_.size() != static_cast<std::size_t>(n_) * n_) {
      throw InvalidParam("log-det: kernel must be n x n");
    }
    if (alpha_ <= 0.0) throw InvalidParam("log-det: alpha must be positive");
  }

  double value(const Subset& s) const override {
    const auto& el = s.elements();
    const int k = static_cast<int>(el.size());
    if (k == 0) return 0.0;  // det of the empty matrix is 1
    std::vector<double> a(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        double v = alpha_ * m_[static_cast<std::size_t>(el[i]) * n_ + el[j]];
        if (i == j) v += 1.0;
        a[static_cast<std::size_t>(i) * k + j] = v;
      }
    }
    return 2.0 * cholesky_log_diag(a, k);
  }

  int ground_size() const override { return n_; }

  // In-place lower Cholesky; returns sum of log(L_ii). Since M is PSD,
  // I + alpha*M_S has eigenvalues >= 1 and the factorization must succeed;
  // a non-positive pivot beyond tolerance signals a bad kernel.
  static double cholesky_log_diag(std::vector<double>& a, int k) {
    double log_sum = 0.0;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j <= i; ++j) {
        double sum = a[static_cast<std::size_t>(i) * k + j];
        for (int t = 0; t < j; ++t) {
          sum -= a[static_cast<std::size_t>(i) * k + t] * a[static_cast<std::size_t>(j) * k + t];
        }
        if (i == j) {
          if (sum <= 1e-12) throw NotPSD("log-det: Cholesky pivot not positive");
          a[static_cast<std::size_t>(i) * k + i] = std::sqrt(sum);
          log_sum += std::log(a[static_cast<std::size_t>(i) * k + i]);
        } else {
          a[static_cast<std::size_t>(i) * k + j] = sum / a[static_cast<std::size_t>(j) * k + j];
        }
      }
    }
    return log_sum;
  }

 private:
  std::vector<double> m_;
  int n_;
  double alpha_;
};

// f(S) = sum_w sqrt(sum_{e in S} score(w, e)) over sparse nonnegative
// word/element scores.
class SqrtCoverageFunction : public SetFunction {
 public:
  // entries: (word, element, score)
  SqrtCoverageFunction(const std::vector<std::tuple<int, int, double>>& entries, int n, int words)
      : n_(n), words_(words), per_element_(n) {
    for (const auto& [w, e, score] : entries) {
      if (w < 0 || w >= words_ || e < 0 || e >= n_) throw InvalidParam("sqrt-coverage: index out of range");
      if (score < 0.0) throw InvalidParam("sqrt-coverage: negative score");
      per_element_[e].emplace_back(w, score);
    }
  }

  double value(const Subset& s) const override {
    std::vector<double> word_sum(words_, 0.0);
    std::vector<int> touched;
    for (int e : s.elements()) {
      for (const auto& [w, score] : per_element_[e]) {
        if (word_sum[w] == 0.0) touched.push_back(w);
        word_sum[w] += score;
      }
    }
    double total = 0.0;
    for (int w : touched) total += std::sqrt(word_sum[w]);
    return total;
  }

  int ground_size() const override { return n_; }

 private:
  int n_;
  int words_;
  std::vector<std::vector<std::pair<int, double>>> per_element_;
};

// f(S) = sum of nonnegative per-element weights.
class ModularFunction : public SetFunction {
 public:
  explicit ModularFunction(std::vector<double> weights) : w_(std::move(weights)) {
    for (double x : w_) {
      if (x < 0.0) throw InvalidParam("modular: negative weight");
    }
  }

  double value(const Subset& s) const override {
    double total = 0.0;
    for (int u : s.elements()) total += w_[u];
    return total;
  }

  int ground_size() const override { return static_cast<int>(w_.size()); }

 private:
  std::vector<double> w_;
};

// Directed cut f(S) = #{(u,v) in E : u in S, v not in S}. Submodular,
// non-monotone, non-negative; used with unconstrained maximization.
class DirectedCutFunction : public SetFunction {
 public:
  DirectedCutFunction(int n, std::vector<std::pair<int, int>> edges)
      : n_(n), edges_(std::move(edges)) {
    for (auto [a, b] : edges_) {
      if (a < 0 || a >= n_ || b < 0 || b >= n_) throw InvalidParam("cut: endpoint out of range");
    }
  }

  double value(const Subset& s) const override {
    int cut = 0;
    for (auto [a, b] : edges_) {
      if (s.contains(a) && !s.contains(b)) ++cut;
    }
    return static_cast<double>(cut);
  }

  int ground_size() const override { return n_; }
  bool is_monotone() const override { return false; }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
};

}  // namespace submax

#endif  // SUBMAX_OBJECTIVES_HPP_
