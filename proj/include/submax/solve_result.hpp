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

#ifndef SUBMAX_SOLVE_RESULT_HPP_
#define SUBMAX_SOLVE_RESULT_HPP_

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace submax {

struct StageStat {
  std::string label;
  double value = 0.0;
  std::uint64_t queries = 0;
};

// Outcome of one solver run: the chosen set (in selection order), its
// objective value, the oracle queries consumed and the wall time. The
// per-stage trace is informational; wall time is excluded from all
// determinism guarantees.
struct SolveResult {
  std::vector<int> set;
  double value = 0.0;
  std::uint64_t queries = 0;
  std::int64_t millis = 0;
  std::vector<StageStat> trace;

  // Everything that is covered by the determinism contract, i.e. all
  // fields except millis.
  std::string deterministic_repr() const {
    std::ostringstream out;
    out.precision(17);
    out << "set=";
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i) out << ',';
      out << set[i];
    }
    out << ";value=" << value << ";queries=" << queries << ";trace=";
    for (const auto& st : trace) {
      out << '[' << st.label << ':' << st.value << ':' << st.queries << ']';
    }
    return out.str();
  }
};

}  // namespace submax

#endif  // SUBMAX_SOLVE_RESULT_HPP_
