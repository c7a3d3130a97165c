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

#include "vch/vc/engine.h"

#include "vch/core/error.h"
#include "vch/core/text.h"

namespace vch::vc {
namespace {

core::Transcript new_session(const core::ModelTarget& model,
                             const core::SessionIds& ids,
                             core::Protocol protocol) {
  model.validate();
  core::Transcript t;
  t.session_id = ids.session_id;
  t.run_id = ids.run_id;
  t.protocol = protocol;
  t.model = model;
  return t;
}

core::Turn* last_model_turn(core::Transcript& t) {
  for (auto it = t.turns.rbegin(); it != t.turns.rend(); ++it) {
    if (it->role == core::Role::kModel) return &*it;
  }
  return nullptr;
}

std::string tag(std::string_view t) { return std::string(t); }

}  // namespace

std::string_view to_string(AblationVariant variant) {
  return variant == AblationVariant::kA ? "A" : "B";
}

std::optional<core::LanguageMode> observed_language_mode(std::string_view text) {
  bool latin = false;
  bool cyrillic = false;
  for (std::string_view token : core::split_whitespace(text)) {
    switch (core::dominant_script(token)) {
      case core::Script::kLatin:
        latin = true;
        break;
      case core::Script::kCyrillic:
        cyrillic = true;
        break;
      case core::Script::kNone:
        break;
    }
  }
  if (latin && cyrillic) return core::LanguageMode::kMix;
  if (cyrillic) return core::LanguageMode::kRu;
  if (latin) return core::LanguageMode::kEn;
  return std::nullopt;
}

core::Transcript conduct_vc(transport::ChatTransport& transport,
                            const VcPromptSet& prompts,
                            const core::ModelTarget& model,
                            const core::SessionIds& ids) {
  core::Transcript t = new_session(model, ids, core::Protocol::kVc);
  transport::exchange(transport, t, with_framing(prompts.framing, prompts.pass1),
                      {"vc:pass1"});
  transport::exchange(transport, t, prompts.pass2, {"vc:pass2"});
  transport::exchange(transport, t, prompts.pass3, {"vc:pass3"});
  return t;
}

VcOutcome analyze_vc(core::Transcript transcript) {
  VcOutcome out;
  out.transcript = std::move(transcript);
  core::Turn* final_turn = last_model_turn(out.transcript);
  if (final_turn == nullptr) {
    out.violation = "session has no model reply";
    return out;
  }
  try {
    VcTrajectory traj = parse_vc_output(final_turn->text);
    if (!traj.monotone) final_turn->tags.insert(tag(tags::kNonMonotone));
    if (traj.uses_one) final_turn->tags.insert(tag(tags::kPermissiveOne));
    // Declared mode vs. the scripts actually used around the line.
    std::string rest = final_turn->text;
    rest.erase(traj.offset, traj.length);
    const auto observed = observed_language_mode(rest);
    if (observed && *observed != traj.mode) {
      out.observed_mode = observed;
      final_turn->tags.insert(tag(tags::kModeDiscrepancy));
    }
    out.trajectory = traj;
  } catch (const ParseError& e) {
    out.violation = e.what();
    final_turn->tags.insert(tag(core::tags::kProtocolViolation));
  }
  return out;
}

VcOutcome run_vc(transport::ChatTransport& transport,
                 const VcPromptSet& prompts, const core::ModelTarget& model,
                 const core::SessionIds& ids) {
  return analyze_vc(conduct_vc(transport, prompts, model, ids));
}

core::Transcript conduct_ablation(transport::ChatTransport& transport,
                                  const VcPromptSet& prompts,
                                  const core::ModelTarget& model,
                                  AblationVariant variant,
                                  const core::SessionIds& ids) {
  const bool is_a = variant == AblationVariant::kA;
  core::Transcript t = new_session(
      model, ids,
      is_a ? core::Protocol::kVcAblationA : core::Protocol::kVcAblationB);
  transport::exchange(
      transport, t,
      with_framing(prompts.framing,
                   is_a ? prompts.single_pass_a : prompts.single_pass_b),
      {is_a ? "vc:single-pass-a" : "vc:single-pass-b"});
  return t;
}

AblationOutcome analyze_ablation(core::Transcript transcript) {
  AblationVariant variant;
  if (transcript.protocol == core::Protocol::kVcAblationA) {
    variant = AblationVariant::kA;
  } else if (transcript.protocol == core::Protocol::kVcAblationB) {
    variant = AblationVariant::kB;
  } else {
    throw ValidationError("session '" + transcript.session_id +
                          "' is not an ablation session");
  }
  AblationOutcome out;
  out.transcript = std::move(transcript);
  core::Turn* reply = last_model_turn(out.transcript);
  if (reply == nullptr) {
    out.violation = "session has no model reply";
    return out;
  }
  try {
    AblationResult r;
    r.variant = variant;
    r.t_star = parse_single_value(reply->text);
    if (r.t_star.hundredths() == 100) reply->tags.insert(tag(tags::kPermissiveOne));
    out.result = r;
  } catch (const ParseError& e) {
    out.violation = e.what();
    reply->tags.insert(tag(core::tags::kProtocolViolation));
  }
  return out;
}

AblationOutcome run_ablation(transport::ChatTransport& transport,
                             const VcPromptSet& prompts,
                             const core::ModelTarget& model,
                             AblationVariant variant,
                             const core::SessionIds& ids) {
  return analyze_ablation(
      conduct_ablation(transport, prompts, model, variant, ids));
}

AblationDeltas ablation_deltas(const AblationResult& a,
                               const AblationResult& b,
                               const VcTrajectory& multipass) {
  if (a.variant != AblationVariant::kA || b.variant != AblationVariant::kB) {
    throw ValidationError("ablation_deltas expects (variant A, variant B)");
  }
  // Operands are exact hundredths, so these differences need no rounding.
  return {b.t_star - a.t_star, multipass.t2 - b.t_star};
}

}  // namespace vch::vc
