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

#include "vch/cp43/check.h"

#include <algorithm>
#include <numeric>

#include "vch/core/error.h"
#include "vch/cp43/kendall.h"

namespace vch::cp43 {

Cp43Verdict check_run(const Cp43Run& run, const Rank& expected) {
  Cp43Verdict v;
  v.rank_ok = run.rank == expected;
  v.m6_ok = true;
  for (std::size_t i = 0; i + 1 < kLabelCount; ++i) {
    v.m6_ok = v.m6_ok && run.at(expected[i]) > run.at(expected[i + 1]);
  }
  v.sum_ok = std::accumulate(run.alloc.begin(), run.alloc.end(), 0) == 100;
  v.tau_vs_expected = kendall_tau(run.rank, expected);
  return v;
}

RankStability aggregate_stability(std::span<const Cp43Run> runs,
                                  const Rank& expected) {
  if (runs.empty()) throw ValidationError("no CP4.3 runs to aggregate");
  RankStability s;
  s.runs.assign(runs.begin(), runs.end());
  for (const auto& run : runs) {
    const Cp43Verdict v = check_run(run, expected);
    s.all_rank_ok = s.all_rank_ok && v.rank_ok;
    s.all_m6_pass = s.all_m6_pass && v.m6_ok;
    s.all_sum_ok = s.all_sum_ok && v.sum_ok;
    s.tau_vs_expected_min = std::min(s.tau_vs_expected_min, v.tau_vs_expected);
  }
  for (std::size_t i = 0; i < runs.size(); ++i) {
    for (std::size_t j = i + 1; j < runs.size(); ++j) {
      s.pairwise_tau_min =
          std::min(s.pairwise_tau_min, kendall_tau(runs[i].rank, runs[j].rank));
    }
  }
  for (Label l : kAllLabels) {
    const auto [lo, hi] = std::minmax_element(
        runs.begin(), runs.end(),
        [l](const Cp43Run& a, const Cp43Run& b) { return a.at(l) < b.at(l); });
    s.max_drift_per_label[index(l)] = hi->at(l) - lo->at(l);
    s.max_drift = std::max(s.max_drift, s.max_drift_per_label[index(l)]);
  }
  return s;
}

}  // namespace vch::cp43
