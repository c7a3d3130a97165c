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

#include "vch/fdlite/audit.h"

#include "vch/core/assets.h"
#include "vch/core/error.h"

namespace vch::fdlite {
namespace {

std::string tag(std::string_view t) { return std::string(t); }

// Index into transcript.turns of the reply tagged `wanted`, else of the
// fallback-th model turn.
std::optional<std::size_t> find_reply(const core::Transcript& t,
                                      std::string_view wanted,
                                      std::size_t fallback) {
  std::size_t seen = 0;
  std::optional<std::size_t> positional;
  for (std::size_t i = 0; i < t.turns.size(); ++i) {
    const auto& turn = t.turns[i];
    if (turn.role != core::Role::kModel) continue;
    if (turn.has_tag(wanted)) return i;
    if (seen++ == fallback) positional = i;
  }
  return positional;
}

MarkerScore score_texts(const std::vector<std::string_view>& texts,
                        const MarkerConfig& config) {
  return score_markers(compute_metrics(texts, config.lexicon),
                       config.thresholds);
}

}  // namespace

void FdPromptSet::validate() const {
  if (anchor.empty()) throw ValidationError("FD-Lite anchor prompt is empty");
  if (trap.empty()) throw ValidationError("FD-Lite trap prompt is empty");
}

FdPromptSet FdPromptSet::defaults() {
  FdPromptSet p;
  p.framing = core::default_asset("framing");
  p.anchor = core::default_asset("fdlite_anchor");
  p.trap = core::default_asset("fdlite_trap");
  p.followups = core::split_sections(core::default_asset("fdlite_followups"));
  std::erase(p.followups, std::string());
  return p;
}

FdPromptSet FdPromptSet::load(const std::filesystem::path& dir) {
  FdPromptSet p;
  p.framing = core::read_asset(dir, "framing");
  p.anchor = core::read_asset(dir, "fdlite_anchor");
  p.trap = core::read_asset(dir, "fdlite_trap");
  p.followups = core::split_sections(core::read_asset(dir, "fdlite_followups"));
  std::erase(p.followups, std::string());
  p.validate();
  return p;
}

FdPromptSet FdPromptSet::from_recorded(const core::Transcript& transcript) {
  if (transcript.protocol != core::Protocol::kFdLite) {
    throw ValidationError("session '" + transcript.session_id +
                          "' is not an FD-Lite session");
  }
  std::vector<std::string> asked;
  for (const auto& turn : transcript.turns) {
    if (turn.role == core::Role::kOperator) asked.push_back(turn.text);
  }
  if (asked.size() < 2) {
    throw ValidationError("recorded FD-Lite session '" + transcript.session_id +
                          "' needs at least an anchor and a trap prompt");
  }
  FdPromptSet p;
  p.anchor = asked[0];
  p.trap = asked[1];
  p.followups.assign(asked.begin() + 2, asked.end());
  return p;
}

core::Transcript conduct_fdlite(transport::ChatTransport& transport,
                                const FdPromptSet& prompts,
                                const core::ModelTarget& model,
                                const core::SessionIds& ids) {
  prompts.validate();
  model.validate();
  core::Transcript t;
  t.session_id = ids.session_id;
  t.run_id = ids.run_id;
  t.protocol = core::Protocol::kFdLite;
  t.model = model;
  transport::exchange(transport, t,
                      core::with_framing(prompts.framing, prompts.anchor),
                      {tag(tags::kAnchorPrompt)}, {tag(tags::kAnchor)});
  transport::exchange(transport, t, prompts.trap, {tag(tags::kTrapPrompt)},
                      {tag(tags::kTrap)});
  for (const auto& f : prompts.followups) {
    transport::exchange(transport, t, f, {tag(tags::kFollowup)});
  }
  return t;
}

FdAudit audit_fdlite(const core::Transcript& transcript,
                     const MarkerConfig& config, const FdInvariants& inv) {
  FdAudit audit;
  if (const auto i = find_reply(transcript, tags::kAnchor, 0)) {
    audit.anchor_exact = check_anchor(transcript.turns[*i].text, inv);
  }
  if (const auto i = find_reply(transcript, tags::kTrap, 1)) {
    audit.trap_ack = check_trap(transcript.turns[*i].text, inv);
  }
  std::vector<std::string_view> texts;
  for (const core::Turn* turn : transcript.model_turns()) {
    texts.push_back(turn->text);
  }
  audit.metrics = compute_metrics(texts, config.lexicon);
  audit.score = score_markers(audit.metrics, config.thresholds);
  for (const auto& [begin, end] : thirds(texts.size())) {
    const std::vector<std::string_view> window(texts.begin() + begin,
                                               texts.begin() + end);
    audit.window_scores.push_back(score_texts(window, config).value);
  }
  return audit;
}

FdOutcome analyze_fdlite(core::Transcript transcript,
                         const MarkerConfig& config, const FdInvariants& inv) {
  FdOutcome out;
  out.audit = audit_fdlite(transcript, config, inv);
  out.transcript = std::move(transcript);
  auto mark = [&](std::string_view wanted, std::size_t fallback,
                  std::string_view reason) {
    const auto i = find_reply(out.transcript, wanted, fallback);
    auto& turn = i ? out.transcript.turns[*i] : out.transcript.turns.back();
    turn.tags.insert(tag(core::tags::kProtocolViolation));
    turn.tags.insert(tag(reason));
  };
  if (!out.transcript.turns.empty()) {
    if (!out.audit.anchor_exact) mark(tags::kAnchor, 0, tags::kAnchorMismatch);
    if (!out.audit.trap_ack) mark(tags::kTrap, 1, tags::kTrapNotBare);
  }
  return out;
}

FdOutcome run_fdlite(transport::ChatTransport& transport,
                     const FdPromptSet& prompts, const core::ModelTarget& model,
                     const core::SessionIds& ids, const MarkerConfig& config,
                     const FdInvariants& inv) {
  return analyze_fdlite(conduct_fdlite(transport, prompts, model, ids), config,
                        inv);
}

std::vector<std::pair<std::size_t, std::size_t>> thirds(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (n < 3) return out;
  std::size_t begin = 0;
  for (std::size_t w = 0; w < 3; ++w) {
    const std::size_t size = n / 3 + (w < n % 3 ? 1 : 0);
    out.emplace_back(begin, begin + size);
    begin += size;
  }
  return out;
}

std::string format_score_trajectory(const std::vector<int>& windows,
                                    int overall) {
  if (windows.empty()) return std::to_string(overall);
  bool flat = true;
  for (int w : windows) flat = flat && w == windows.front();
  if (flat) return std::to_string(windows.front());
  std::string out;
  for (std::size_t i = 0; i < windows.size(); ++i) {
    if (i > 0) out += "\xE2\x86\x92";  // U+2192
    out += std::to_string(windows[i]);
  }
  return out;
}

std::string format_score_trajectory(const FdAudit& audit) {
  return format_score_trajectory(audit.window_scores, audit.score.value);
}

}  // namespace vch::fdlite
