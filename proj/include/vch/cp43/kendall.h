// Copyright 2026 The vc-harness Authors
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

// Kendall's tau-a between two strict rankings of the same items.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "vch/core/error.h"

namespace vch::cp43 {

namespace detail {

// Inversions in v, by merge sort.
inline std::uint64_t count_inversions(std::vector<std::size_t>& v,
                                      std::vector<std::size_t>& scratch,
                                      std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::uint64_t inv = count_inversions(v, scratch, lo, mid) +
                      count_inversions(v, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      inv += mid - i;
      scratch[k++] = v[j++];
    } else {
      scratch[k++] = v[i++];
    }
  }
  while (i < mid) scratch[k++] = v[i++];
  while (j < hi) scratch[k++] = v[j++];
  for (std::size_t p = lo; p < hi; ++p) v[p] = scratch[p];
  return inv;
}

}  // namespace detail

// (concordant - discordant) / (n(n-1)/2) over all unordered item pairs,
// O(n log n). T needs operator<. Throws ValidationError when the two
// rankings do not hold the same distinct items or n < 2.
template <typename T>
double kendall_tau(std::span<const T> a, std::span<const T> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw ValidationError("rankings differ in length");
  if (n < 2) throw ValidationError("Kendall tau needs at least two items");
  std::map<T, std::size_t> pos_in_b;
  for (std::size_t i = 0; i < n; ++i) {
    if (!pos_in_b.emplace(b[i], i).second) {
      throw ValidationError("ranking contains a repeated item");
    }
  }
  std::vector<std::size_t> seq;
  seq.reserve(n);
  std::vector<bool> used(n, false);
  for (const T& item : a) {
    const auto it = pos_in_b.find(item);
    if (it == pos_in_b.end() || used[it->second]) {
      throw ValidationError("rankings do not hold the same items");
    }
    used[it->second] = true;
    seq.push_back(it->second);
  }
  std::vector<std::size_t> scratch(n);
  const std::uint64_t discordant = detail::count_inversions(seq, scratch, 0, n);
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  const double num = static_cast<double>(pairs) - 2.0 * static_cast<double>(discordant);
  return num / static_cast<double>(pairs);
}

template <typename Range>
double kendall_tau(const Range& a, const Range& b) {
  using T = typename Range::value_type;
  return kendall_tau<T>(std::span<const T>(a.data(), a.size()),
                        std::span<const T>(b.data(), b.size()));
}

}  // namespace vch::cp43
