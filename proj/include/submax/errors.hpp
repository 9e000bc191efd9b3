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

#ifndef SUBMAX_ERRORS_HPP_
#define SUBMAX_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace submax {

// Hard query limit of a capped oracle was reached.
struct QueryBudgetExceeded : std::runtime_error {
  explicit QueryBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Kernel passed to the log-det objective is not positive semidefinite.
struct NotPSD : std::runtime_error {
  explicit NotPSD(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyAfterNormalization : std::runtime_error {
  explicit EmptyAfterNormalization(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidParam : std::invalid_argument {
  explicit InvalidParam(const std::string& what) : std::invalid_argument(what) {}
};

struct PreconditionViolated : std::invalid_argument {
  explicit PreconditionViolated(const std::string& what) : std::invalid_argument(what) {}
};

// Instance too large for exhaustive enumeration.
struct TooLarge : std::invalid_argument {
  explicit TooLarge(const std::string& what) : std::invalid_argument(what) {}
};

struct ListExhausted : std::logic_error {
  explicit ListExhausted(const std::string& what) : std::logic_error(what) {}
};

struct MatrixSearchTimeout : std::runtime_error {
  explicit MatrixSearchTimeout(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownSuite : std::invalid_argument {
  explicit UnknownSuite(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidSpec : std::invalid_argument {
  explicit InvalidSpec(const std::string& what) : std::invalid_argument(what) {}
};

namespace detail {

// Always-on internal invariant check; not compiled out in release builds.
inline void require(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

}  // namespace detail

}  // namespace submax

#endif  // SUBMAX_ERRORS_HPP_
