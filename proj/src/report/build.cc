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

#include "vch/report/report.h"

#include <algorithm>
#include <map>
#include <tuple>

#include "vch/core/error.h"
#include "vch/cp43/engine.h"
#include "vch/fdlite/audit.h"
#include "vch/vc/engine.h"

namespace vch::report {
namespace {

auto sort_key(const core::Transcript& t) {
  return std::tie(t.model.name, t.run_id, t.session_id);
}

bool aborted(const core::Transcript& t) {
  return std::any_of(t.turns.begin(), t.turns.end(), [](const core::Turn& turn) {
    return turn.has_tag(core::tags::kSessionAborted);
  });
}

SessionNote note(const core::Transcript& t, std::string detail) {
  return {t.session_id, t.model.name, t.protocol, std::move(detail)};
}

std::vector<std::string> vc_flags(const core::Transcript& t) {
  std::vector<std::string> flags;
  for (auto it = t.turns.rbegin(); it != t.turns.rend(); ++it) {
    if (it->role != core::Role::kModel) continue;
    for (const auto& tag : it->tags) {
      if (tag.starts_with("vc:")) flags.push_back(tag);
    }
    break;
  }
  return flags;
}

struct AblationSide {
  std::string session_id;
  core::Fixed2 t_star;
};

struct AblationPair {
  std::optional<AblationSide> a;
  std::optional<AblationSide> b;
};

Cp43Summary summarize(const std::string& model, const std::string& run_id,
                      const std::vector<const core::Transcript*>& group,
                      std::vector<SessionNote>& violations) {
  std::vector<core::Transcript> copies;
  for (const auto* t : group) copies.push_back(*t);
  const cp43::Cp43Batch batch = cp43::analyze_cp43_batch(std::move(copies));

  Cp43Summary s;
  s.model = model;
  s.run_id = run_id;
  s.runs = group.size();
  s.excluded_runs = batch.excluded_runs;
  for (std::size_t i = 0; i < group.size(); ++i) {
    s.session_ids.push_back(group[i]->session_id);
    const auto& outcome = batch.outcomes[i];
    if (outcome.violation) {
      violations.push_back(note(*group[i], "excluded: " + *outcome.violation));
    } else if (outcome.verdict) {
      const auto& v = *outcome.verdict;
      std::string failed;
      if (!v.rank_ok) failed += " rank";
      if (!v.m6_ok) failed += " m6";
      if (!v.sum_ok) failed += " sum";
      if (!failed.empty()) {
        violations.push_back(note(*group[i], "CP4.3 check failed:" + failed));
      }
    }
  }
  if (batch.stability) {
    const auto& st = *batch.stability;
    s.tau_min = st.pairwise_tau_min;
    s.tau_vs_expected_min = st.tau_vs_expected_min;
    s.m6_all_pass = st.all_m6_pass;
    s.rank_all_ok = st.all_rank_ok;
    s.sum_all_ok = st.all_sum_ok;
    s.max_drift = st.max_drift;
    s.max_drift_per_label = st.max_drift_per_label;
    for (cp43::Label l : cp43::kAllLabels) {
      AllocRange r{st.runs.front().at(l), st.runs.front().at(l)};
      for (const auto& run : st.runs) {
        r.min = std::min(r.min, run.at(l));
        r.max = std::max(r.max, run.at(l));
      }
      s.alloc_ranges[cp43::index(l)] = r;
    }
  }
  return s;
}

}  // namespace

bool operator==(const ProbeReportRow& a, const ProbeReportRow& b) {
  const auto& x = a.row;
  const auto& y = b.row;
  return a.model == b.model && a.run_id == b.run_id &&
         x.session_id == y.session_id && x.turn_index == y.turn_index &&
         x.phase == y.phase && x.trust == y.trust && x.risk == y.risk &&
         x.tension == y.tension && x.markers == y.markers &&
         x.notes == y.notes && x.mismatch == y.mismatch;
}

bool operator==(const StudyReport& a, const StudyReport& b) {
  return a.vc_rows == b.vc_rows && a.fd_rows == b.fd_rows &&
         a.cp43 == b.cp43 && a.ablation == b.ablation &&
         a.probe_rows == b.probe_rows && a.violations == b.violations &&
         a.unanalyzed == b.unanalyzed;
}

StudyReport build_report(std::span<const core::Transcript> corpus,
                         const ReportConfig& config) {
  std::vector<const core::Transcript*> sessions;
  for (const auto& t : corpus) sessions.push_back(&t);
  std::sort(sessions.begin(), sessions.end(),
            [](const core::Transcript* a, const core::Transcript* b) {
              return sort_key(*a) < sort_key(*b);
            });

  StudyReport report;
  std::map<std::string, AblationPair> ablations;
  std::map<std::pair<std::string, std::string>,
           std::vector<const core::Transcript*>>
      cp43_groups;

  for (const core::Transcript* t : sessions) {
    if (aborted(*t)) {
      report.unanalyzed.push_back(note(*t, "session aborted by the transport"));
      continue;
    }
    switch (t->protocol) {
      case core::Protocol::kVc: {
        const auto out = vc::analyze_vc(*t);
        if (!out.trajectory) {
          report.violations.push_back(note(*t, *out.violation));
          break;
        }
        const auto& tr = *out.trajectory;
        report.vc_rows.push_back({t->model.name, t->run_id, t->session_id,
                                  tr.t0, tr.t1, tr.t2, tr.mode, tr.monotone,
                                  vc_flags(out.transcript)});
        break;
      }
      case core::Protocol::kVcAblationA:
      case core::Protocol::kVcAblationB: {
        const auto out = vc::analyze_ablation(*t);
        if (!out.result) {
          report.violations.push_back(note(*t, *out.violation));
          break;
        }
        auto& pair = ablations[t->model.name];
        auto& side =
            out.result->variant == vc::AblationVariant::kA ? pair.a : pair.b;
        // Sessions arrive sorted, so the first one per variant wins.
        if (!side) side = AblationSide{t->session_id, out.result->t_star};
        break;
      }
      case core::Protocol::kFdLite: {
        const auto out =
            fdlite::analyze_fdlite(*t, config.markers, config.invariants);
        const auto& a = out.audit;
        report.fd_rows.push_back(
            {t->model.name, t->run_id, t->session_id, a.anchor_exact,
             a.trap_ack, a.score.value, a.window_scores,
             fdlite::format_score_trajectory(a), a.metrics.hedging_density,
             a.metrics.code_switch_frequency, a.metrics.meta_prefix_density,
             a.metrics.verbosity, a.metrics.topic_drift});
        if (!a.passed()) {
          std::string detail = "FD-Lite invariant failed:";
          if (!a.anchor_exact) detail += " anchor";
          if (!a.trap_ack) detail += " trap";
          report.violations.push_back(note(*t, detail));
        }
        break;
      }
      case core::Protocol::kCp43:
        cp43_groups[{t->model.name, t->run_id}].push_back(t);
        break;
      case core::Protocol::kProbe: {
        try {
          for (auto& row :
               fdlite::extract_probe_rows(*t, config.markers.mismatch_threshold)) {
            report.probe_rows.push_back({t->model.name, t->run_id, std::move(row)});
          }
        } catch (const Error& e) {
          report.unanalyzed.push_back(note(*t, e.what()));
        }
        break;
      }
      case core::Protocol::kFreeform:
        report.unanalyzed.push_back(note(*t, "no analyzer for protocol"));
        break;
    }
  }

  for (const auto& [key, group] : cp43_groups) {
    report.cp43.push_back(
        summarize(key.first, key.second, group, report.violations));
  }

  for (const auto& [model, pair] : ablations) {
    AblationSummary s;
    s.model = model;
    if (pair.a) {
      s.t_star_a = pair.a->t_star;
      s.session_ids.push_back(pair.a->session_id);
    }
    if (pair.b) {
      s.t_star_b = pair.b->t_star;
      s.session_ids.push_back(pair.b->session_id);
    }
    const auto vc_row =
        std::find_if(report.vc_rows.begin(), report.vc_rows.end(),
                     [&](const VcRow& r) { return r.model == model; });
    if (vc_row != report.vc_rows.end()) {
      s.multipass_t2 = vc_row->t2;
      s.session_ids.push_back(vc_row->session_id);
    }
    if (pair.a && pair.b) {
      const vc::AblationResult a{vc::AblationVariant::kA, pair.a->t_star, {}, {}};
      const vc::AblationResult b{vc::AblationVariant::kB, pair.b->t_star, {}, {}};
      s.b_minus_a = b.t_star - a.t_star;
      if (vc_row != report.vc_rows.end()) {
        vc::VcTrajectory multipass;
        multipass.t2 = vc_row->t2;
        const auto d = vc::ablation_deltas(a, b, multipass);
        s.b_minus_a = d.b_minus_a;
        s.multipass_minus_b = d.multipass_minus_b;
      }
    } else if (pair.b && s.multipass_t2) {
      s.multipass_minus_b = *s.multipass_t2 - pair.b->t_star;
    }
    report.ablation.push_back(std::move(s));
  }

  std::sort(report.probe_rows.begin(), report.probe_rows.end(),
            [](const ProbeReportRow& a, const ProbeReportRow& b) {
              return std::tie(a.model, a.run_id, a.row.session_id,
                              a.row.turn_index) <
                     std::tie(b.model, b.run_id, b.row.session_id,
                              b.row.turn_index);
            });
  return report;
}

}  // namespace vch::report
