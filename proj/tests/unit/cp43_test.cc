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


#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "vch/core/error.h"
#include "vch/cp43/check.h"
#include "vch/cp43/engine.h"
#include "vch/cp43/kendall.h"
#include "vch/cp43/response.h"
#include "vch/transport/scripted.h"

namespace vch::cp43 {
namespace {

constexpr const char* kCanonical =
    "RANK: X5>X1>X4>X2>X6>X3; ALLOC: X5=30, X1=25, X4=20, X2=13, X6=7, X3=5";

Cp43Run run_with(const Rank& rank, std::array<int, 6> in_expected_order) {
  Cp43Run r;
  r.rank = rank;
  for (std::size_t i = 0; i < 6; ++i) r.alloc[index(kExpectedRank[i])] = in_expected_order[i];
  return r;
}

TEST(Labels, Names) {
  EXPECT_EQ(to_string(Label::kX4), "X4");
  EXPECT_EQ(parse_label("X6"), Label::kX6);
  EXPECT_FALSE(parse_label("X7"));
  EXPECT_FALSE(parse_label("x1"));
}

TEST(Response, ParsesCanonicalAndLooseSpacing) {
  const auto r = parse_cp43_response(kCanonical);
  EXPECT_EQ(r.rank, kExpectedRank);
  EXPECT_EQ(r.at(Label::kX5), 30);
  EXPECT_EQ(r.at(Label::kX3), 5);
  const auto loose = parse_cp43_response(
      "Here you go.\nRANK:  X5 > X1 > X4 > X2 > X6 > X3 ;\nALLOC: X3=5 X6=7 X2=13 X4=20 X1=25 X5=30\n");
  EXPECT_EQ(loose.rank, r.rank);
  EXPECT_EQ(loose.alloc, r.alloc);
  EXPECT_EQ(format_cp43_response(r), kCanonical);
}

TEST(Response, RejectsMalformed) {
  struct Case {
    const char* text;
    const char* why;
  };
  for (const Case& c : std::vector<Case>{
           {"ALLOC: X5=30, X1=25, X4=20, X2=13, X6=7, X3=5", "missing rank"},
           {"RANK: X5>X1>X4>X2>X6>X3", "missing alloc"},
           {"RANK: X5>X1>X4>X2>X6>X5; ALLOC: X5=30, X1=25, X4=20, X2=13, X6=7, X3=5", "dup label"},
           {"RANK: X5>X1>X4>X2>X6; ALLOC: X5=30, X1=25, X4=20, X2=13, X6=7, X3=5", "missing label"},
           {"RANK: X5>X1=X4>X2>X6>X3; ALLOC: X5=30, X1=25, X4=20, X2=13, X6=7, X3=5", "tie"},
           {"RANK: X5>X1>X4>X2>X6>X3; ALLOC: X5=30.5, X1=25, X4=20, X2=13, X6=7, X3=5", "non-integer"},
           {"RANK: X5>X1>X4>X2>X6>X3; ALLOC: X5=-1, X1=25, X4=20, X2=13, X6=7, X3=5", "negative"},
           {"RANK: X5>X1>X4>X2>X6>X3; ALLOC: X5=30, X1=25, X4=20, X2=13, X6=7", "alloc missing"},
           {"RANK: X5>X1>X4>X2>X6>X7; ALLOC: X5=30, X1=25, X4=20, X2=13, X6=7, X3=5", "unknown"},
       }) {
    EXPECT_THROW(parse_cp43_response(c.text), ParseError) << c.why;
  }
  EXPECT_THROW(parse_cp43_response(std::string(kCanonical) + "\n" + kCanonical),
               AmbiguousOutputError);
}

TEST(Response, OffsetPointsAtProblem) {
  const std::string text = "RANK: X5>X1>X4>X2>X6>X3; ALLOC: X5=30, X1=25, X4=zz, X2=13, X6=7, X3=5";
  try {
    parse_cp43_response(text);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_GE(e.offset(), text.find("X4=zz"));
    EXPECT_LE(e.offset(), text.find("zz") + 2);
  }
}

TEST(Check, ExpectedRunPasses) {
  const auto v = check_run(parse_cp43_response(kCanonical));
  EXPECT_TRUE(v.rank_ok);
  EXPECT_TRUE(v.m6_ok);
  EXPECT_TRUE(v.sum_ok);
  EXPECT_EQ(v.tau_vs_expected, 1.0);
}

TEST(Check, TieFailsM6) {
  for (std::size_t i = 0; i + 1 < 6; ++i) {
    std::array<int, 6> vals = {30, 25, 20, 13, 7, 5};
    vals[i + 1] = vals[i];
    EXPECT_FALSE(check_run(run_with(kExpectedRank, vals)).m6_ok) << i;
  }
}

TEST(Check, TrueTauForChangedRank) {
  Rank swapped = kExpectedRank;
  std::swap(swapped[0], swapped[1]);
  const auto v = check_run(run_with(swapped, {30, 25, 20, 13, 7, 5}));
  EXPECT_FALSE(v.rank_ok);
  EXPECT_NEAR(v.tau_vs_expected, 13.0 / 15.0, 1e-12);
  EXPECT_TRUE(v.m6_ok);
}

TEST(Kendall, Properties) {
  std::mt19937 rng(3);
  std::vector<int> base(6);
  std::iota(base.begin(), base.end(), 0);
  for (int i = 0; i < 200; ++i) {
    std::vector<int> a = base, b = base;
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    EXPECT_DOUBLE_EQ(kendall_tau(a, b), kendall_tau(b, a));
    EXPECT_EQ(kendall_tau(a, b) == 1.0, a == b);
    std::vector<int> rev(a.rbegin(), a.rend());
    EXPECT_EQ(kendall_tau(a, rev), -1.0);
    EXPECT_EQ(kendall_tau(a, b) == -1.0, b == rev);
  }
}

TEST(Kendall, RejectsMismatchedItems) {
  EXPECT_THROW(kendall_tau(std::vector<int>{1, 2}, std::vector<int>{1, 3}), ValidationError);
  EXPECT_THROW(kendall_tau(std::vector<int>{1, 1}, std::vector<int>{1, 1}), ValidationError);
  EXPECT_THROW(kendall_tau(std::vector<int>{1, 2}, std::vector<int>{1, 2, 3}), ValidationError);
  EXPECT_THROW(kendall_tau(std::vector<int>{1}, std::vector<int>{1}), ValidationError);
}

TEST(Kendall, LargeInputIsFast) {
  std::vector<int> a(100000);
  std::iota(a.begin(), a.end(), 0);
  std::vector<int> b(a.rbegin(), a.rend());
  EXPECT_EQ(kendall_tau(a, b), -1.0);
}

TEST(Stability, DriftAndTau) {
  const std::vector<Cp43Run> runs = {
      run_with(kExpectedRank, {30, 25, 20, 13, 7, 5}),
      run_with(kExpectedRank, {30, 25, 19, 13, 8, 5}),
      run_with(kExpectedRank, {30, 25, 20, 12, 8, 5}),
  };
  const auto s = aggregate_stability(runs);
  EXPECT_EQ(s.pairwise_tau_min, 1.0);
  EXPECT_EQ(s.max_drift, 1);
  EXPECT_EQ(s.max_drift_per_label[index(Label::kX4)], 1);
  EXPECT_EQ(s.max_drift_per_label[index(Label::kX5)], 0);
  EXPECT_TRUE(s.all_m6_pass);
  EXPECT_TRUE(s.all_sum_ok);
  // Order of the run list does not matter.
  std::vector<Cp43Run> shuffled = {runs[2], runs[0], runs[1]};
  const auto s2 = aggregate_stability(shuffled);
  EXPECT_EQ(s2.max_drift_per_label, s.max_drift_per_label);
  EXPECT_EQ(s2.pairwise_tau_min, s.pairwise_tau_min);
  EXPECT_THROW(aggregate_stability(std::vector<Cp43Run>{}), ValidationError);
}

TEST(Stability, SingleRunAndRankChange) {
  const auto one = aggregate_stability(std::vector<Cp43Run>{run_with(kExpectedRank, {30, 25, 20, 13, 7, 5})});
  EXPECT_EQ(one.pairwise_tau_min, 1.0);
  EXPECT_EQ(one.max_drift, 0);
  Rank swapped = kExpectedRank;
  std::swap(swapped[4], swapped[5]);
  const auto two = aggregate_stability(std::vector<Cp43Run>{
      run_with(kExpectedRank, {30, 25, 20, 13, 7, 5}), run_with(swapped, {30, 25, 20, 13, 7, 5})});
  EXPECT_NEAR(two.pairwise_tau_min, 13.0 / 15.0, 1e-12);
  EXPECT_FALSE(two.all_rank_ok);
}

core::ModelTarget model() {
  core::ModelTarget m;
  m.name = "m";
  return m;
}

TEST(Engine, PromptForCyclesPressure) {
  Cp43PromptSet p;
  p.task = "TASK";
  p.pressure = {"", "P1"};
  EXPECT_EQ(p.prompt_for(0), "TASK");
  EXPECT_NE(p.prompt_for(1).find("P1"), std::string::npos);
  EXPECT_EQ(p.prompt_for(2), "TASK");
  Cp43PromptSet empty;
  EXPECT_THROW(empty.validate(), ValidationError);
  EXPECT_NO_THROW(Cp43PromptSet::load(VCH_PROMPT_DIR).validate());
}

TEST(Engine, BatchAggregatesAndExcludesMalformed) {
  transport::Script s;
  s.rules = {{"", {kCanonical, "I cannot rank these.",
                   "RANK: X5>X1>X4>X2>X6>X3; ALLOC: X5=30, X1=25, X4=19, X2=13, X6=8, X3=5"}}};
  auto shared = std::make_shared<transport::ScriptedTransport>(s);
  const auto batch = run_cp43(
      [&](std::size_t i) {
        return Cp43SessionPlan{shared, {"cp-" + std::to_string(i), "r"}, "TASK"};
      },
      model(), 3);
  ASSERT_EQ(batch.transcripts.size(), 3u);
  EXPECT_EQ(batch.excluded_runs, 1u);
  ASSERT_TRUE(batch.stability);
  EXPECT_EQ(batch.stability->runs.size(), 2u);
  EXPECT_EQ(batch.stability->max_drift, 1);
  EXPECT_TRUE(batch.outcomes[1].violation);
  EXPECT_TRUE(batch.transcripts[1].turns.back().has_tag(core::tags::kProtocolViolation));
  EXPECT_TRUE(batch.transcripts[0].turns.front().has_tag(std::string(tags::kTask)));
  EXPECT_THROW(run_cp43([&](std::size_t) { return Cp43SessionPlan{shared, {"x", "r"}, "T"}; },
                        model(), 0),
               ValidationError);
}

TEST(Engine, ParallelRunsUseTheirOwnTransports) {
  transport::Script s;
  s.rules = {{"", {kCanonical}}};
  const auto batch = run_cp43(
      [&](std::size_t i) {
        return Cp43SessionPlan{std::make_shared<transport::ScriptedTransport>(s),
                               {"cp-" + std::to_string(i), "r"}, "TASK"};
      },
      model(), 8, 4);
  EXPECT_EQ(batch.excluded_runs, 0u);
  for (std::size_t i = 0; i < batch.transcripts.size(); ++i) {
    EXPECT_EQ(batch.transcripts[i].session_id, "cp-" + std::to_string(i));
  }
}

TEST(Engine, VerdictTags) {
  core::Transcript t;
  t.session_id = "a";
  t.protocol = core::Protocol::kCp43;
  t.model = model();
  t.append(core::Role::kOperator, "TASK");
  t.append(core::Role::kModel, "RANK: X1>X5>X4>X2>X6>X3; ALLOC: X5=30, X1=30, X4=20, X2=13, X6=7, X3=5");
  const auto out = analyze_cp43(t, 0);
  ASSERT_TRUE(out.verdict);
  EXPECT_TRUE(t.turns.back().has_tag(std::string(tags::kRankChanged)));
  EXPECT_TRUE(t.turns.back().has_tag(std::string(tags::kM6Fail)));
  EXPECT_TRUE(t.turns.back().has_tag(std::string(tags::kSumOff)));
}

TEST(Engine, AbortedSessionsAreReported) {
  transport::Script s;
  s.rules = {{"never matches", {kCanonical}}};
  auto shared = std::make_shared<transport::ScriptedTransport>(s);
  const auto batch = run_cp43(
      [&](std::size_t i) { return Cp43SessionPlan{shared, {"cp-" + std::to_string(i), "r"}, "TASK"}; },
      model(), 2);
  EXPECT_EQ(batch.aborted.size(), 2u);
  EXPECT_FALSE(batch.stability);
  ASSERT_EQ(batch.transcripts.size(), 2u);
  EXPECT_TRUE(batch.transcripts[0].turns.back().has_tag(core::tags::kSessionAborted));
}

}  // namespace
}  // namespace vch::cp43
