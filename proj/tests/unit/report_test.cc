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
#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "vch/core/corpus.h"
#include "vch/core/error.h"
#include "vch/report/emit.h"
#include "vch/report/report.h"

namespace vch::report {
namespace {

const std::vector<core::Transcript>& fixtures() {
  static const auto c = core::load_corpus(VCH_FIXTURE_DIR);
  return c;
}

TEST(Report, FixtureCorpusFillsEveryTable) {
  const auto r = build_report(fixtures());
  EXPECT_EQ(r.vc_rows.size(), 4u);
  EXPECT_EQ(r.fd_rows.size(), 4u);
  EXPECT_EQ(r.cp43.size(), 1u);
  EXPECT_EQ(r.ablation.size(), 1u);
  EXPECT_EQ(r.probe_rows.size(), 3u);
  EXPECT_TRUE(r.violations.empty());
  EXPECT_TRUE(r.unanalyzed.empty());
  // Sorted by model name.
  EXPECT_TRUE(std::is_sorted(r.vc_rows.begin(), r.vc_rows.end(),
                             [](const VcRow& a, const VcRow& b) { return a.model < b.model; }));
}

TEST(Report, IndependentOfCorpusOrder) {
  auto shuffled = fixtures();
  std::mt19937 rng(11);
  for (int i = 0; i < 5; ++i) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    EXPECT_EQ(emit(build_report(shuffled), Format::kJson),
              emit(build_report(fixtures()), Format::kJson));
  }
}

TEST(Report, JsonRoundTrips) {
  const auto r = build_report(fixtures());
  const std::string json = emit(r, Format::kJson);
  EXPECT_EQ(report_from_json(json), r);
  EXPECT_THROW(report_from_json("{}x"), ParseError);
  EXPECT_THROW(report_from_json("[]"), ParseError);
}

TEST(Report, JsonKeepsTwoDecimalStrings) {
  const auto j = nlohmann::json::parse(emit(build_report(fixtures()), Format::kJson));
  EXPECT_EQ(j["vc"][0]["t0"], "0.35");
  EXPECT_EQ(j["ablation"][0]["delta_b_minus_a"], "+0.04");
  EXPECT_EQ(j["ablation"][0]["delta_multipass_minus_b"], "+0.02");
  for (const char* key : {"vc", "fdlite", "cp43", "ablation", "probe", "violations", "unanalyzed"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Report, EveryRowNamesSessionsFromTheCorpus) {
  std::set<std::string> ids;
  for (const auto& t : fixtures()) ids.insert(t.session_id);
  const auto r = build_report(fixtures());
  for (const auto& row : r.vc_rows) EXPECT_TRUE(ids.count(row.session_id));
  for (const auto& row : r.fd_rows) EXPECT_TRUE(ids.count(row.session_id));
  for (const auto& s : r.cp43) {
    EXPECT_EQ(s.session_ids.size(), s.runs);
    for (const auto& id : s.session_ids) EXPECT_TRUE(ids.count(id));
  }
  for (const auto& a : r.ablation) {
    EXPECT_EQ(a.session_ids.size(), 3u);
    for (const auto& id : a.session_ids) EXPECT_TRUE(ids.count(id));
  }
  for (const auto& p : r.probe_rows) EXPECT_TRUE(ids.count(p.row.session_id));
}

TEST(Report, FigureCsv) {
  const std::string csv = emit_figure_csv(build_report(fixtures()));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "model,pass,T");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 12);
  EXPECT_NE(csv.find("Claude Haiku 4.5,0,0.35"), std::string::npos);
  EXPECT_NE(csv.find("\nClaude Opus 4.1 (UI session),2,0.95\n"), std::string::npos) << csv;
}

TEST(Report, MarkdownAndCsvViews) {
  const auto r = build_report(fixtures());
  const std::string md = emit(r, Format::kMarkdown);
  EXPECT_NE(md.find("| Claude Haiku 4.5 | 0.35 | 0.94 | 0.98 | EN | Yes |"), std::string::npos);
  EXPECT_NE(md.find("2→3→3"), std::string::npos);
  EXPECT_NE(md.find("30>25>19–20>12–13>7–8>5"), std::string::npos);
  EXPECT_NE(md.find("+0.04"), std::string::npos);
  const std::string csv = emit(r, Format::kCsv);
  EXPECT_NE(csv.find("# vc"), std::string::npos);
  EXPECT_NE(csv.find("# cp43"), std::string::npos);
}

TEST(Report, ViolationsAndAbortedSessions) {
  auto corpus = fixtures();
  core::Transcript bad;
  bad.session_id = "bad-vc";
  bad.protocol = core::Protocol::kVc;
  bad.model.name = "Model Z";
  bad.append(core::Role::kOperator, "p");
  bad.append(core::Role::kModel, "no line here");
  corpus.push_back(bad);
  core::Transcript aborted = bad;
  aborted.session_id = "aborted";
  aborted.turns.pop_back();
  aborted.turns.back().tags.insert(std::string(core::tags::kSessionAborted));
  corpus.push_back(aborted);
  const auto r = build_report(corpus);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].session_id, "bad-vc");
  EXPECT_TRUE(r.has_violations());
  ASSERT_EQ(r.unanalyzed.size(), 1u);
  EXPECT_EQ(r.unanalyzed[0].session_id, "aborted");
  EXPECT_EQ(r.vc_rows.size(), 4u);
}

TEST(Report, FdInvariantFailureIsAViolation) {
  auto corpus = fixtures();
  for (auto& t : corpus) {
    if (t.protocol == core::Protocol::kFdLite) {
      t.turns[3].text = "ACK!";
      break;
    }
  }
  const auto r = build_report(corpus);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].protocol, core::Protocol::kFdLite);
}

TEST(Report, MalformedCp43RunIsExcluded) {
  auto corpus = fixtures();
  for (auto& t : corpus) {
    if (t.session_id.ends_with("-3") && t.protocol == core::Protocol::kCp43) {
      t.turns.back().text = "RANK: X5>X1";
    }
  }
  const auto r = build_report(corpus);
  ASSERT_EQ(r.cp43.size(), 1u);
  EXPECT_EQ(r.cp43[0].excluded_runs, 1u);
  EXPECT_EQ(r.cp43[0].runs, 7u);
  EXPECT_TRUE(r.has_violations());
}

TEST(Emit, FormatHelpers) {
  EXPECT_EQ(parse_format("md"), Format::kMarkdown);
  EXPECT_EQ(parse_format("markdown"), Format::kMarkdown);
  EXPECT_EQ(parse_format("json"), Format::kJson);
  EXPECT_FALSE(parse_format("xml"));
  EXPECT_EQ(file_extension(Format::kCsv), "csv");
  EXPECT_EQ(format_tau(1.0), "1.0");
  EXPECT_EQ(format_tau(-1.0), "-1.0");
  EXPECT_EQ(format_tau(13.0 / 15.0), "0.8667");
}

TEST(Emit, Cp43SummaryJsonLeadsWithHeadlineFields) {
  const auto r = build_report(fixtures());
  const auto j = nlohmann::ordered_json::parse(cp43_summary_json(r.cp43.at(0)));
  EXPECT_EQ(j["tau_min"], 1.0);
  EXPECT_EQ(j["m6_all_pass"], true);
  EXPECT_EQ(j["max_drift"], 1);
  EXPECT_EQ(j["excluded_runs"], 0);
}

}  // namespace
}  // namespace vch::report
