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


#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "vch/core/assets.h"
#include "vch/core/error.h"
#include "vch/fdlite/audit.h"
#include "vch/fdlite/probe.h"
#include "vch/transport/scripted.h"

namespace vch::fdlite {
namespace {

const MarkerLexicon& lex() {
  static const MarkerLexicon l = MarkerConfig::defaults().lexicon;
  return l;
}

TEST(Markers, HedgesCountPhrasesCaseInsensitively) {
  // Perhaps / it seems / I think / might.
  EXPECT_EQ(count_hedges("Perhaps it seems fine, but I think it might work.", lex()), 4u);
  EXPECT_EQ(count_hedges("mighty thinking", lex()), 0u);
  EXPECT_EQ(count_hedges("\"Possibly.\" ARGUABLY!", lex()), 2u);
}

TEST(Markers, CodeSwitchesInsideATurn) {
  EXPECT_EQ(count_code_switches("hello привет world"), 2u);
  // Tokens with no letters inherit the previous class.
  EXPECT_EQ(count_code_switches("hello 42 world"), 0u);
  EXPECT_EQ(count_code_switches("hello 42 мир"), 1u);
  EXPECT_EQ(count_code_switches("только русский"), 0u);
  EXPECT_EQ(count_code_switches(""), 0u);
}

TEST(Markers, MetaPrefixNeedsWordBoundary) {
  EXPECT_TRUE(has_meta_prefix("Sure, here it is.", lex()));
  EXPECT_TRUE(has_meta_prefix("  sure thing", lex()));
  EXPECT_TRUE(has_meta_prefix("Конечно, вот ответ", lex()));
  EXPECT_TRUE(has_meta_prefix("Let me check.", lex()));
  EXPECT_FALSE(has_meta_prefix("Surely not", lex()));
  EXPECT_FALSE(has_meta_prefix("Letme", lex()));
  EXPECT_FALSE(has_meta_prefix("I am sure.", lex()));
}

TEST(Markers, MetricsAreRatios) {
  // 3 tokens, 2 turns, 1 hedge, 1 meta-prefixed turn.
  const auto m = compute_metrics({"Sure, perhaps", "ok"}, lex());
  EXPECT_EQ(m.tokens, 3u);
  EXPECT_EQ(m.turns, 2u);
  EXPECT_NEAR(m.hedging_density, 100.0 / 3.0, 1e-12);
  EXPECT_NEAR(m.meta_prefix_density, 0.5, 1e-12);
  EXPECT_NEAR(m.verbosity, 1.5, 1e-12);
  EXPECT_FALSE(m.empty);
  const auto e = compute_metrics({}, lex());
  EXPECT_TRUE(e.empty);
  EXPECT_EQ(e.hedging_density, 0.0);
}

TEST(Markers, SessionBoundaryIsNotASwitch) {
  const auto m = compute_metrics({"english words", "русские слова"}, lex());
  EXPECT_EQ(m.code_switches, 0u);
}

TEST(Markers, TopicDrift) {
  MarkerLexicon l = lex();
  l.topic_keywords = {"evidence"};
  EXPECT_TRUE(compute_metrics({"the evidence", "x", "y", "z"}, l).topic_drift);
  EXPECT_FALSE(compute_metrics({"the evidence", "x", "y", "more evidence"}, l).topic_drift);
  EXPECT_FALSE(compute_metrics({"the evidence", "x", "y", "z"}, lex()).topic_drift);
}

MarkerMetrics metrics(double hedging, double switches, double meta) {
  MarkerMetrics m;
  m.hedging_density = hedging;
  m.code_switch_frequency = switches;
  m.meta_prefix_density = meta;
  m.empty = false;
  return m;
}

TEST(Markers, Banding) {
  EXPECT_EQ(score_markers(metrics(0, 0, 0)).value, 0);
  EXPECT_TRUE(score_markers(metrics(0, 0, 0)).rationale.empty());
  EXPECT_EQ(score_markers(metrics(0.1, 0, 0)).value, 1);
  EXPECT_EQ(score_markers(metrics(4.99, 0, 0)).value, 1);
  EXPECT_EQ(score_markers(metrics(5.0, 0, 0)).value, 2);
  EXPECT_EQ(score_markers(metrics(6.0, 2.0, 0)).value, 2);
  EXPECT_EQ(score_markers(metrics(0, 15.0, 0)).value, 3);
  // One meta-prefixed turn in three is 33 per 100 turns.
  EXPECT_EQ(score_markers(metrics(0, 0, 1.0 / 3.0)).value, 3);
  EXPECT_EQ(score_markers(metrics(0, 0, 0.04)).value, 1);
  const auto s = score_markers(metrics(6.25, 0, 0));
  ASSERT_EQ(s.rationale.size(), 1u);
  EXPECT_NE(s.rationale[0].find("6.25"), std::string::npos);
}

TEST(Markers, ThresholdValidation) {
  EXPECT_NO_THROW(BandThresholds{}.validate());
  EXPECT_THROW((BandThresholds{5, 5, 15}.validate()), ConfigError);
  EXPECT_THROW((BandThresholds{-1, 5, 15}.validate()), ConfigError);
  EXPECT_THROW((BandThresholds{0, 5, std::numeric_limits<double>::infinity()}.validate()),
               ConfigError);
}

TEST(MarkerConfig, JsonOverridesAndRejectsUnknownKeys) {
  const auto c = MarkerConfig::from_json(R"({"hedges":["maybe"],"thresholds":{"band2":4}})");
  EXPECT_EQ(c.lexicon.hedges, std::vector<std::string>{"maybe"});
  EXPECT_EQ(c.thresholds.band2, 4.0);
  EXPECT_EQ(c.thresholds.band3, 15.0);
  EXPECT_EQ(c.lexicon.meta_prefixes, lex().meta_prefixes);
  EXPECT_THROW(MarkerConfig::from_json(R"({"hedge":["x"]})"), ConfigError);
  EXPECT_THROW(MarkerConfig::from_json(R"({"thresholds":{"band4":1}})"), ConfigError);
  EXPECT_THROW(MarkerConfig::from_json(R"({"thresholds":{"band2":20}})"), ConfigError);
  EXPECT_THROW(MarkerConfig::from_json("not json"), ConfigError);
}

TEST(MarkerConfig, ShippedFileEqualsDefaults) {
  const auto shipped = MarkerConfig::load(std::string(VCH_CONFIG_DIR) + "/markers.json");
  const auto d = MarkerConfig::defaults();
  EXPECT_EQ(shipped.lexicon.hedges, d.lexicon.hedges);
  EXPECT_EQ(shipped.lexicon.meta_prefixes, d.lexicon.meta_prefixes);
  EXPECT_EQ(shipped.lexicon.topic_keywords, d.lexicon.topic_keywords);
  EXPECT_EQ(shipped.thresholds.band1, d.thresholds.band1);
  EXPECT_EQ(shipped.thresholds.band2, d.thresholds.band2);
  EXPECT_EQ(shipped.thresholds.band3, d.thresholds.band3);
  EXPECT_EQ(shipped.mismatch_threshold, d.mismatch_threshold);
}

TEST(Invariants, AnchorAndTrap) {
  const std::string anchor(kAnchorText);
  EXPECT_TRUE(check_anchor(anchor));
  EXPECT_TRUE(check_anchor("Here it is: " + anchor));
  FdInvariants strict;
  strict.strict_whole_turn = true;
  EXPECT_TRUE(check_anchor("  " + anchor + "\n", strict));
  EXPECT_FALSE(check_anchor("Here it is: " + anchor, strict));
  EXPECT_FALSE(check_anchor(anchor.substr(0, anchor.size() - 1)));
  EXPECT_TRUE(check_trap("ACK"));
  EXPECT_TRUE(check_trap(" ACK\n"));
  EXPECT_FALSE(check_trap("ACK."));
  EXPECT_FALSE(check_trap("ack"));
  EXPECT_FALSE(check_trap("ACK, understood"));
}

TEST(Windows, Thirds) {
  using W = std::vector<std::pair<std::size_t, std::size_t>>;
  EXPECT_TRUE(thirds(2).empty());
  EXPECT_EQ(thirds(3), (W{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(thirds(9), (W{{0, 3}, {3, 6}, {6, 9}}));
  EXPECT_EQ(thirds(10), (W{{0, 4}, {4, 7}, {7, 10}}));
  EXPECT_EQ(thirds(11), (W{{0, 4}, {4, 8}, {8, 11}}));
}

TEST(Windows, TrajectoryDisplay) {
  EXPECT_EQ(format_score_trajectory({2, 3, 3}, 3), "2→3→3");
  EXPECT_EQ(format_score_trajectory({0, 0, 0}, 0), "0");
  EXPECT_EQ(format_score_trajectory({}, 1), "1");
}

core::Transcript fd_session(const std::string& anchor_reply, const std::string& trap_reply) {
  core::Transcript t;
  t.session_id = "fd";
  t.protocol = core::Protocol::kFdLite;
  t.model.name = "m";
  t.append(core::Role::kOperator, "anchor please");
  t.append(core::Role::kModel, anchor_reply);
  t.append(core::Role::kOperator, "trap");
  t.append(core::Role::kModel, trap_reply);
  return t;
}

TEST(Audit, PassAndFailTagging) {
  const auto good = analyze_fdlite(fd_session(std::string(kAnchorText), "ACK"));
  EXPECT_TRUE(good.audit.passed());
  for (const auto& turn : good.transcript.turns) {
    EXPECT_FALSE(turn.has_tag(core::tags::kProtocolViolation));
  }
  const auto bad = analyze_fdlite(fd_session("Something else entirely.", "ACK."));
  EXPECT_FALSE(bad.audit.anchor_exact);
  EXPECT_FALSE(bad.audit.trap_ack);
  EXPECT_TRUE(bad.transcript.turns[1].has_tag(std::string(tags::kAnchorMismatch)));
  EXPECT_TRUE(bad.transcript.turns[3].has_tag(std::string(tags::kTrapNotBare)));
  EXPECT_TRUE(bad.transcript.turns[3].has_tag(std::string(core::tags::kProtocolViolation)));
}

TEST(Audit, TagsLocateTheInvariantTurns) {
  core::Transcript t = fd_session("preamble", std::string(kAnchorText));
  t.append(core::Role::kOperator, "trap");
  t.append(core::Role::kModel, "ACK", {std::string(tags::kTrap)});
  t.turns[3].tags.insert(std::string(tags::kAnchor));
  const auto a = audit_fdlite(t);
  EXPECT_TRUE(a.anchor_exact);
  EXPECT_TRUE(a.trap_ack);
  EXPECT_EQ(a.window_scores.size(), 3u);
}

TEST(Audit, ZeroMarkersScoreZero) {
  const auto a = audit_fdlite(fd_session(std::string(kAnchorText), "ACK"));
  EXPECT_EQ(a.score.value, 0);
  EXPECT_EQ(format_score_trajectory(a), "0");
}

TEST(Engine, ConductsAnchorTrapAndFollowups) {
  transport::Script s;
  s.rules = {{"[FD ANCHOR]", {std::string(kAnchorText)}}, {"[FD TRAP]", {"ACK"}}};
  s.fallback = "A plain answer.";
  transport::ScriptedTransport tr(s);
  core::ModelTarget m;
  m.name = "m";
  const auto out = run_fdlite(tr, FdPromptSet::defaults(), m, {"fd", "r"});
  EXPECT_TRUE(out.audit.passed());
  const std::size_t followups = FdPromptSet::defaults().followups.size();
  EXPECT_EQ(out.transcript.turns.size(), 4 + 2 * followups);
  EXPECT_TRUE(out.transcript.turns[0].has_tag(std::string(tags::kAnchorPrompt)));
  EXPECT_TRUE(out.transcript.turns[1].has_tag(std::string(tags::kAnchor)));
  EXPECT_TRUE(out.transcript.turns[3].has_tag(std::string(tags::kTrap)));
  EXPECT_TRUE(out.transcript.turns[4].has_tag(std::string(tags::kFollowup)));
}

TEST(Prompts, LoadAndRecorded) {
  const auto p = FdPromptSet::load(VCH_PROMPT_DIR);
  EXPECT_EQ(p.anchor, FdPromptSet::defaults().anchor);
  EXPECT_FALSE(p.followups.empty());
  FdPromptSet empty;
  EXPECT_THROW(empty.validate(), ValidationError);
  const auto r = FdPromptSet::from_recorded(fd_session("a", "b"));
  EXPECT_EQ(r.anchor, "anchor please");
  EXPECT_EQ(r.trap, "trap");
  EXPECT_TRUE(r.followups.empty());
}

TEST(Probe, ValueGrammar) {
  const auto p = parse_probe_value("3");
  EXPECT_EQ(p.kind, ProbeValue::Kind::kPoint);
  EXPECT_EQ(p.operative(), 3.0);
  const auto r = parse_probe_value("8..9.5");
  EXPECT_EQ(r.kind, ProbeValue::Kind::kRange);
  EXPECT_EQ(r.operative(), 8.75);
  EXPECT_EQ(r.min(), 8.0);
  EXPECT_EQ(r.max(), 9.5);
  const auto t = parse_probe_value("~5->3");
  EXPECT_EQ(t.kind, ProbeValue::Kind::kTransition);
  EXPECT_EQ(t.operative(), 3.0);
  EXPECT_EQ(t.min(), 3.0);
  EXPECT_EQ(t.raw, "~5->3");
  EXPECT_EQ(parse_probe_value("≈0.99").operative(), 0.99);
  for (const char* bad : {"", "a", "3..", "..4", "1..2..3", "5->", "3 4", "nan"}) {
    EXPECT_THROW(parse_probe_value(bad), ParseError) << bad;
  }
}

TEST(Probe, MismatchRule) {
  EXPECT_TRUE(detect_mismatch(8.75, 3.5));
  EXPECT_FALSE(detect_mismatch(3.0, 3.5));
  EXPECT_TRUE(detect_mismatch(6.5, 3.5));
  EXPECT_FALSE(detect_mismatch(6.49, 3.5));
  EXPECT_TRUE(detect_mismatch(5.0, 3.5, 1.5));
  EXPECT_THROW(detect_mismatch(10.5, 3), ValidationError);
  EXPECT_THROW(detect_mismatch(5, 0.5), ValidationError);
  EXPECT_THROW(detect_mismatch(std::nan(""), 3), ValidationError);
}

TEST(Probe, RowsFromTags) {
  core::Transcript t;
  t.session_id = "p";
  t.protocol = core::Protocol::kProbe;
  t.model.name = "m";
  t.append(core::Role::kOperator, "q");
  t.append(core::Role::kModel, "a",
           {probe_tag("phase", "x"), probe_tag("risk", "3..4"), probe_tag("tension", "8..9.5"),
            probe_tag("notes", "n")});
  t.append(core::Role::kModel, "b", {probe_tag("phase", "y"), probe_tag("trust", "0.9")});
  t.append(core::Role::kModel, "c", {probe_tag("risk", "9")});
  const auto rows = extract_probe_rows(t);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].phase, "x");
  EXPECT_EQ(rows[0].turn_index, 1u);
  EXPECT_EQ(rows[0].mismatch, true);
  EXPECT_EQ(rows[0].notes, "n");
  EXPECT_FALSE(rows[1].mismatch);
  EXPECT_EQ(probe_tag("risk", "3"), "probe:risk=3");

  t.turns[3].tags.insert("probe:color=red");
  EXPECT_THROW(extract_probe_rows(t), ParseError);
  t.turns[3].tags = {"probe:phase"};
  EXPECT_THROW(extract_probe_rows(t), ParseError);
}

}  // namespace
}  // namespace vch::fdlite
