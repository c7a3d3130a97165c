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

// Study-level aggregation: every transcript in a corpus is dispatched to its
// protocol's analyzer and folded into table rows. Every row names the
// sessions it came from.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vch/core/fixed2.h"
#include "vch/core/transcript.h"
#include "vch/cp43/labels.h"
#include "vch/fdlite/invariants.h"
#include "vch/fdlite/markers.h"
#include "vch/fdlite/probe.h"

namespace vch::report {

struct VcRow {
  std::string model;
  std::string run_id;
  std::string session_id;
  core::Fixed2 t0;
  core::Fixed2 t1;
  core::Fixed2 t2;
  core::LanguageMode mode = core::LanguageMode::kEn;
  bool monotone = false;
  // Warning tags from the final turn (permissive 1.00, mode discrepancy).
  std::vector<std::string> flags;

  bool operator==(const VcRow&) const = default;
};

struct FdRow {
  std::string model;
  std::string run_id;
  std::string session_id;
  bool anchor_exact = false;
  bool trap_ack = false;
  int score = 0;
  std::vector<int> window_scores;
  std::string trajectory;
  double hedging_density = 0.0;
  double code_switch_frequency = 0.0;
  double meta_prefix_density = 0.0;
  double verbosity = 0.0;
  bool topic_drift = false;

  bool operator==(const FdRow&) const = default;
};

struct AllocRange {
  int min = 0;
  int max = 0;
  bool operator==(const AllocRange&) const = default;
};

// One group of replicate CP4.3 sessions (same model and run id).
struct Cp43Summary {
  std::string model;
  std::string run_id;
  std::vector<std::string> session_ids;
  std::size_t runs = 0;
  std::size_t excluded_runs = 0;
  // Unset when no run in the group parsed.
  std::optional<double> tau_min;
  std::optional<double> tau_vs_expected_min;
  bool m6_all_pass = false;
  bool rank_all_ok = false;
  bool sum_all_ok = false;
  int max_drift = 0;
  // Indexed by label.
  std::array<int, cp43::kLabelCount> max_drift_per_label{};
  std::array<AllocRange, cp43::kLabelCount> alloc_ranges{};

  bool operator==(const Cp43Summary&) const = default;
};

struct AblationSummary {
  std::string model;
  std::vector<std::string> session_ids;
  std::optional<core::Fixed2> t_star_a;
  std::optional<core::Fixed2> t_star_b;
  // T2 of the same model's multi-pass VC row, when there is one.
  std::optional<core::Fixed2> multipass_t2;
  std::optional<core::Fixed2> b_minus_a;
  std::optional<core::Fixed2> multipass_minus_b;

  bool operator==(const AblationSummary&) const = default;
};

struct ProbeReportRow {
  std::string model;
  std::string run_id;
  fdlite::ProbeRow row;
};

struct SessionNote {
  std::string session_id;
  std::string model;
  core::Protocol protocol = core::Protocol::kFreeform;
  std::string detail;

  bool operator==(const SessionNote&) const = default;
};

struct StudyReport {
  std::vector<VcRow> vc_rows;
  std::vector<FdRow> fd_rows;
  std::vector<Cp43Summary> cp43;
  std::vector<AblationSummary> ablation;
  std::vector<ProbeReportRow> probe_rows;
  std::vector<SessionNote> violations;
  std::vector<SessionNote> unanalyzed;

  bool has_violations() const { return !violations.empty(); }
};

bool operator==(const ProbeReportRow& a, const ProbeReportRow& b);
bool operator==(const StudyReport& a, const StudyReport& b);

struct ReportConfig {
  fdlite::MarkerConfig markers = fdlite::MarkerConfig::defaults();
  fdlite::FdInvariants invariants;
};

// Pure and deterministic: the same corpus gives the same report regardless
// of corpus order. Rows are sorted by model, run id, session id.
StudyReport build_report(std::span<const core::Transcript> corpus,
                         const ReportConfig& config = {});

}  // namespace vch::report
