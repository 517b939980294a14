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

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>
#include <vector>

#include "regflow/errors.hpp"
#include "regflow/matroid.hpp"

namespace regflow {

namespace {

struct CircuitIndex {
  std::vector<std::uint64_t> masks;
  std::unordered_set<std::uint64_t> lookup;
  // Per element: the number of circuits of each size containing it.
  std::vector<std::vector<std::size_t>> profile;
  std::vector<std::size_t> size_histogram;
  // Per element: indices of circuits containing it.
  std::vector<std::vector<std::size_t>> containing;

  CircuitIndex(const RegularMatroid& m, const Limits& limits) {
    const std::size_t n = m.size();
    profile.assign(n, std::vector<std::size_t>(n + 2, 0));
    size_histogram.assign(n + 2, 0);
    containing.assign(n, {});
    for (const auto& c : circuits(m, limits)) {
      const std::uint64_t mask = c.to_mask();
      const std::size_t idx = masks.size();
      masks.push_back(mask);
      lookup.insert(mask);
      ++size_histogram[c.size()];
      for (std::size_t e : c) {
        ++profile[e][c.size()];
        containing[e].push_back(idx);
      }
    }
  }
};

class IsomorphismSearch {
 public:
  IsomorphismSearch(const CircuitIndex& a, const CircuitIndex& b, std::size_t n)
      : a_(a), b_(b), n_(n), image_(n), used_(n, false) {
    // Circuits of the first matroid grouped by their largest element, which
    // is the step at which they become fully assigned.
    closing_.assign(n, {});
    for (std::uint64_t mask : a_.masks) {
      closing_[63 - std::countl_zero(mask)].push_back(mask);
    }
  }

  bool run() { return extend(0, 0); }
  const std::vector<std::size_t>& image() const { return image_; }

 private:
  bool extend(std::size_t i, std::uint64_t image_mask) {
    if (i == n_) return true;
    for (std::size_t y = 0; y < n_; ++y) {
      if (used_[y] || a_.profile[i] != b_.profile[y]) continue;
      image_[i] = y;
      const std::uint64_t next_mask = image_mask | (std::uint64_t{1} << y);
      if (!consistent(i, y, next_mask)) continue;
      used_[y] = true;
      if (extend(i + 1, next_mask)) return true;
      used_[y] = false;
    }
    return false;
  }

  bool consistent(std::size_t i, std::size_t y, std::uint64_t image_mask) const {
    for (std::uint64_t mask : closing_[i]) {
      std::uint64_t mapped = 0;
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        mapped |= std::uint64_t{1} << image_[std::countr_zero(rest)];
      }
      if (!b_.lookup.contains(mapped)) return false;
    }
    std::size_t closed_in_b = 0;
    for (std::size_t idx : b_.containing[y]) {
      if ((b_.masks[idx] & ~image_mask) == 0) ++closed_in_b;
    }
    return closed_in_b == closing_[i].size();
  }

  const CircuitIndex& a_;
  const CircuitIndex& b_;
  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> closing_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

}  // namespace

IsomorphismResult is_isomorphic(const RegularMatroid& m, const RegularMatroid& n,
                                const Limits& limits) {
  for (const RegularMatroid* x : {&m, &n}) {
    if (x->size() > limits.iso_elements) {
      throw Error(ErrorCode::kBoundExceeded,
                  "isomorphism search limited to " +
                      std::to_string(limits.iso_elements) + " elements, got " +
                      std::to_string(x->size()));
    }
  }
  if (m.size() != n.size() || m.rank() != n.rank()) return {};

  const CircuitIndex a(m, limits);
  const CircuitIndex b(n, limits);
  if (a.size_histogram != b.size_histogram) return {};
  auto sorted_profiles = [](std::vector<std::vector<std::size_t>> p) {
    std::sort(p.begin(), p.end());
    return p;
  };
  if (sorted_profiles(a.profile) != sorted_profiles(b.profile)) return {};

  IsomorphismSearch search(a, b, m.size());
  if (!search.run()) return {};
  return {true, search.image()};
}

}  // namespace regflow
