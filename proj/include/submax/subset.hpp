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

#ifndef SUBMAX_SUBSET_HPP_
#define SUBMAX_SUBSET_HPP_

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace submax {

// Ground set of n elements addressed by dense indices 0..n-1.
struct GroundSet {
  int n;

  explicit GroundSet(int n_elems) : n(n_elems) {
    if (n < 1) throw std::invalid_argument("GroundSet: n must be >= 1");
  }
};

// A subset of the ground set: membership bitmask plus the sequence of
// elements in the order they were added. Algorithms that take prefix
// snapshots rely on the insertion order being preserved.
class Subset {
 public:
  explicit Subset(int universe) : n_(universe), bits_((universe + 63) / 64, 0) {
    if (universe < 0) throw std::invalid_argument("Subset: negative universe");
  }

  static Subset full(int universe) {
    Subset s(universe);
    for (int u = 0; u < universe; ++u) s.add(u);
    return s;
  }

  int universe_size() const { return n_; }
  int size() const { return static_cast<int>(order_.size()); }
  bool empty() const { return order_.empty(); }

  bool contains(int u) const {
    return (bits_[static_cast<std::size_t>(u) >> 6] >> (u & 63)) & 1u;
  }

  void add(int u) {
    check_index(u);
    if (contains(u)) throw std::logic_error("Subset::add: duplicate element");
    bits_[static_cast<std::size_t>(u) >> 6] |= std::uint64_t{1} << (u & 63);
    order_.push_back(u);
  }

  void remove(int u) {
    check_index(u);
    if (!contains(u)) throw std::logic_error("Subset::remove: element absent");
    bits_[static_cast<std::size_t>(u) >> 6] &= ~(std::uint64_t{1} << (u & 63));
    order_.erase(std::find(order_.begin(), order_.end(), u));
  }

  Subset with(int u) const {
    Subset s(*this);
    s.add(u);
    return s;
  }

  Subset without(int u) const {
    Subset s(*this);
    s.remove(u);
    return s;
  }

  // Elements in insertion order.
  const std::vector<int>& elements() const { return order_; }

  std::vector<int> sorted_elements() const {
    std::vector<int> v = order_;
    std::sort(v.begin(), v.end());
    return v;
  }

  bool same_membership(const Subset& other) const {
    return n_ == other.n_ && bits_ == other.bits_;
  }

  static Subset of(int universe, const std::vector<int>& elements) {
    Subset s(universe);
    for (int u : elements) s.add(u);
    return s;
  }

 private:
  void check_index(int u) const {
    if (u < 0 || u >= n_) throw std::out_of_range("Subset: element out of range");
  }

  int n_;
  std::vector<std::uint64_t> bits_;
  std::vector<int> order_;
};

}  // namespace submax

#endif  // SUBMAX_SUBSET_HPP_
