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

// Invariant checks for one run and stability across replicate runs.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vch/cp43/labels.h"

namespace vch::cp43 {

struct Cp43Verdict {
  bool rank_ok = false;
  // Allocations read in expected-rank order strictly decrease.
  bool m6_ok = false;
  bool sum_ok = false;
  double tau_vs_expected = 0.0;
};

Cp43Verdict check_run(const Cp43Run& run, const Rank& expected = kExpectedRank);

struct RankStability {
  std::vector<Cp43Run> runs;
  // Minimum tau over all run pairs; 1.0 with a single run.
  double pairwise_tau_min = 1.0;
  double tau_vs_expected_min = 1.0;
  // max - min per label, i.e. the largest pairwise |difference|.
  std::array<int, kLabelCount> max_drift_per_label{};
  int max_drift = 0;
  bool all_m6_pass = true;
  bool all_rank_ok = true;
  bool all_sum_ok = true;
};

// Throws ValidationError for an empty run list.
RankStability aggregate_stability(std::span<const Cp43Run> runs,
                                  const Rank& expected = kExpectedRank);

}  // namespace vch::cp43
