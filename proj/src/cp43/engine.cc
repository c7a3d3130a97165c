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

#include "vch/cp43/engine.h"

#include "vch/core/assets.h"
#include "vch/core/error.h"
#include "vch/core/parallel.h"
#include "vch/cp43/response.h"

namespace vch::cp43 {
namespace {

std::string tag(std::string_view t) { return std::string(t); }

core::Turn* last_model_turn(core::Transcript& t) {
  for (auto it = t.turns.rbegin(); it != t.turns.rend(); ++it) {
    if (it->role == core::Role::kModel) return &*it;
  }
  return nullptr;
}

}  // namespace

void Cp43PromptSet::validate() const {
  if (task.empty()) throw ValidationError("CP4.3 task prompt is empty");
}

std::string Cp43PromptSet::prompt_for(std::size_t run_index) const {
  std::string out = core::with_framing(framing, task);
  if (!pressure.empty()) {
    const std::string& p = pressure[run_index % pressure.size()];
    if (!p.empty()) out = core::with_framing(out, p);
  }
  return out;
}

Cp43PromptSet Cp43PromptSet::defaults() {
  Cp43PromptSet p;
  p.framing = core::default_asset("framing");
  p.task = core::default_asset("cp43_task");
  p.pressure = core::split_sections(core::default_asset("cp43_pressure"));
  return p;
}

Cp43PromptSet Cp43PromptSet::load(const std::filesystem::path& dir) {
  Cp43PromptSet p;
  p.framing = core::read_asset(dir, "framing");
  p.task = core::read_asset(dir, "cp43_task");
  p.pressure = core::split_sections(core::read_asset(dir, "cp43_pressure"));
  p.validate();
  return p;
}

Cp43PromptSet Cp43PromptSet::from_recorded(const core::Transcript& transcript) {
  if (transcript.protocol != core::Protocol::kCp43) {
    throw ValidationError("session '" + transcript.session_id +
                          "' is not a CP4.3 session");
  }
  for (const auto& turn : transcript.turns) {
    if (turn.role == core::Role::kOperator) {
      Cp43PromptSet p;
      p.task = turn.text;
      return p;
    }
  }
  throw ValidationError("recorded CP4.3 session '" + transcript.session_id +
                        "' has no operator turn");
}

core::Transcript conduct_cp43(transport::ChatTransport& transport,
                              std::string prompt,
                              const core::ModelTarget& model,
                              const core::SessionIds& ids) {
  model.validate();
  core::Transcript t;
  t.session_id = ids.session_id;
  t.run_id = ids.run_id;
  t.protocol = core::Protocol::kCp43;
  t.model = model;
  transport::exchange(transport, t, std::move(prompt), {tag(tags::kTask)});
  return t;
}

Cp43RunOutcome analyze_cp43(core::Transcript& transcript,
                            std::size_t run_index, const Rank& expected) {
  Cp43RunOutcome out;
  core::Turn* reply = last_model_turn(transcript);
  if (reply == nullptr) {
    out.violation = "session has no model reply";
    return out;
  }
  try {
    Cp43Run run = parse_cp43_response(reply->text);
    run.run_index = run_index;
    const Cp43Verdict v = check_run(run, expected);
    if (!v.rank_ok) reply->tags.insert(tag(tags::kRankChanged));
    if (!v.m6_ok) reply->tags.insert(tag(tags::kM6Fail));
    if (!v.sum_ok) reply->tags.insert(tag(tags::kSumOff));
    if (!v.rank_ok || !v.m6_ok || !v.sum_ok) {
      reply->tags.insert(tag(core::tags::kProtocolViolation));
    }
    out.run = run;
    out.verdict = v;
  } catch (const ParseError& e) {
    out.violation = e.what();
    reply->tags.insert(tag(core::tags::kProtocolViolation));
  }
  return out;
}

Cp43Batch analyze_cp43_batch(std::vector<core::Transcript> transcripts,
                             const Rank& expected) {
  Cp43Batch batch;
  batch.transcripts = std::move(transcripts);
  std::vector<Cp43Run> parsed;
  for (std::size_t i = 0; i < batch.transcripts.size(); ++i) {
    auto outcome = analyze_cp43(batch.transcripts[i], i, expected);
    if (outcome.run) {
      parsed.push_back(*outcome.run);
    } else {
      ++batch.excluded_runs;
    }
    batch.outcomes.push_back(std::move(outcome));
  }
  if (!parsed.empty()) batch.stability = aggregate_stability(parsed, expected);
  return batch;
}

Cp43Batch run_cp43(const Cp43Planner& plan, const core::ModelTarget& model,
                   std::size_t repeats, std::size_t parallel,
                   const Rank& expected) {
  if (repeats == 0) throw ValidationError("repeats must be positive");
  model.validate();
  std::vector<std::optional<core::Transcript>> recorded(repeats);
  std::vector<std::string> aborted(repeats);
  const auto errors = core::run_bounded(repeats, parallel, [&](std::size_t i) {
    Cp43SessionPlan p = plan(i);
    if (!p.transport) throw ValidationError("no transport for CP4.3 run");
    try {
      recorded[i] = conduct_cp43(*p.transport, std::move(p.prompt), model, p.ids);
    } catch (const core::SessionAborted& e) {
      recorded[i] = e.partial();
      aborted[i] = e.what();
    }
  });
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<core::Transcript> complete;
  std::vector<core::Transcript> partial;
  for (std::size_t i = 0; i < repeats; ++i) {
    (aborted[i].empty() ? complete : partial).push_back(std::move(*recorded[i]));
  }
  Cp43Batch batch = analyze_cp43_batch(std::move(complete), expected);
  for (auto& t : partial) batch.transcripts.push_back(std::move(t));
  for (auto& a : aborted) {
    if (!a.empty()) batch.aborted.push_back(std::move(a));
  }
  return batch;
}

}  // namespace vch::cp43
