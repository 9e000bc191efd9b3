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

#ifndef SUBMAX_ORACLE_HPP_
#define SUBMAX_ORACLE_HPP_

#include <cstdint>
#include <limits>
#include <optional>

#include "submax/errors.hpp"
#include "submax/subset.hpp"

namespace submax {

// A set function f: 2^N -> R, f(S) >= 0. Implementations declare whether
// they are monotone and submodular; the flags are checked by property
// tests, not trusted by algorithms.
class SetFunction {
 public:
  virtual ~SetFunction() = default;

  virtual double value(const Subset& s) const = 0;
  virtual int ground_size() const = 0;

  virtual bool is_monotone() const { return true; }
  virtual bool is_submodular() const { return true; }
};

// Value-oracle access to a set function with query accounting. One run of
// an algorithm owns one oracle instance; the count is the number of
// evaluate() calls, and it never decreases. An optional cap turns the
// oracle into a hard query budget.
class QueryCountingOracle {
 public:
  explicit QueryCountingOracle(const SetFunction& f,
                               std::optional<std::uint64_t> cap = std::nullopt)
      : f_(f), cap_(cap) {}

  int n() const { return f_.ground_size(); }
  const SetFunction& inner() const { return f_; }
  std::uint64_t count() const { return count_; }

  double evaluate(const Subset& s) {
    if (cap_ && count_ >= *cap_) {
      throw QueryBudgetExceeded("query cap reached");
    }
    ++count_;
    return f_.value(s);
  }

  // f(S + u) - f(S). Costs 2 evaluations; u already in S costs none.
  double marginal(int u, const Subset& s) {
    if (s.contains(u)) return 0.0;
    double with_u = evaluate(s.with(u));
    return with_u - evaluate(s);
  }

  // Same, with f(S) supplied by the caller; costs 1 evaluation.
  double marginal(int u, const Subset& s, double known_fs) {
    if (s.contains(u)) return 0.0;
    return evaluate(s.with(u)) - known_fs;
  }

 private:
  const SetFunction& f_;
  std::uint64_t count_ = 0;
  std::optional<std::uint64_t> cap_;
};

}  // namespace submax

#endif  // SUBMAX_ORACLE_HPP_
