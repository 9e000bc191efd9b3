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

// Seeded randomness with fully pinned-down output. std::mt19937_64 is
// specified by the standard, but the distribution adaptors are not; the
// draws below avoid them so the same seed gives the same stream on every
// platform.

#ifndef SUBMAX_RNG_HPP_
#define SUBMAX_RNG_HPP_

#include <cstdint>
#include <random>
#include <vector>

namespace submax {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, bound) by rejection sampling.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  int next_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  double next_unit() {  // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // k distinct values from pool, removed via partial Fisher-Yates; pool
  // order is perturbed, which is fine for sampling without replacement.
  std::vector<int> sample_without_replacement(std::vector<int>& pool, int k) {
    std::vector<int> out;
    out.reserve(k);
    for (int i = 0; i < k && !pool.empty(); ++i) {
      std::size_t j = static_cast<std::size_t>(next_below(pool.size()));
      out.push_back(pool[j]);
      pool[j] = pool.back();
      pool.pop_back();
    }
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace submax

#endif  // SUBMAX_RNG_HPP_
