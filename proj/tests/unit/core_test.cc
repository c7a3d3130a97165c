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


#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <gtest/gtest.h>

#include "vch/core/assets.h"
#include "vch/core/corpus.h"
#include "vch/core/error.h"
#include "vch/core/fixed2.h"
#include "vch/core/parallel.h"
#include "vch/core/text.h"
#include "vch/core/transcript.h"

namespace vch::core {
namespace {

namespace fs = std::filesystem;

fs::path temp_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("vch-core-test-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

Transcript sample(const std::string& id = "s1") {
  Transcript t;
  t.session_id = id;
  t.run_id = "run";
  t.protocol = Protocol::kFdLite;
  t.model.name = "Model A";
  t.append(Role::kOperator, "Привет, please answer.\nSecond line \"quoted\"", {"fd:anchor-prompt"});
  t.append(Role::kModel, "Хорошо — OK 🙂", {});
  return t;
}

std::vector<Transcript> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_corpus(in, "mem");
}

TEST(Fixed2, ParsesAndFormatsExactly) {
  EXPECT_EQ(parse_fixed2("0.35")->hundredths(), 35);
  EXPECT_EQ(parse_fixed2("+0.04")->hundredths(), 4);
  EXPECT_EQ(parse_fixed2("-1.20")->hundredths(), -120);
  EXPECT_FALSE(parse_fixed2("0.3"));
  EXPECT_FALSE(parse_fixed2("0.350"));
  EXPECT_FALSE(parse_fixed2(".35"));
  EXPECT_FALSE(parse_fixed2("0,35"));
  EXPECT_EQ(Fixed2::from_hundredths(5).to_string(), "0.05");
  EXPECT_EQ(Fixed2::from_hundredths(-4).to_string(), "-0.04");
  EXPECT_EQ(Fixed2::from_hundredths(4).to_signed_string(), "+0.04");
  EXPECT_EQ(Fixed2::from_hundredths(0).to_signed_string(), "0.00");
  EXPECT_EQ(Fixed2::from_hundredths(100).to_string(), "1.00");
}

TEST(Fixed2, DifferencesAreExact) {
  // 0.93 - 0.89 in binary floating point is not 0.04.
  EXPECT_NE(0.93 - 0.89, 0.04);
  EXPECT_EQ(Fixed2::from_hundredths(93) - Fixed2::from_hundredths(89), Fixed2::from_hundredths(4));
  EXPECT_EQ(Fixed2::round_from_double(0.125).hundredths(), 13);
  EXPECT_EQ(Fixed2::round_from_double(-0.125).hundredths(), -13);
}

TEST(Timestamp, RoundTripsWithAndWithoutMillis) {
  const auto ts = parse_timestamp("2025-10-31T14:05:09.120Z");
  ASSERT_TRUE(ts);
  EXPECT_EQ(format_timestamp(*ts), "2025-10-31T14:05:09.120Z");
  const auto plain = parse_timestamp("2025-10-31T14:05:09Z");
  ASSERT_TRUE(plain);
  EXPECT_EQ(format_timestamp(*plain), "2025-10-31T14:05:09.000Z");
  EXPECT_FALSE(parse_timestamp("2025-10-31 14:05:09"));
  EXPECT_FALSE(parse_timestamp("2025-13-31T14:05:09Z"));
}

TEST(ModelTarget, ValidatesSamplingRanges) {
  ModelTarget m;
  EXPECT_THROW(m.validate(), ValidationError);
  m.name = "x";
  EXPECT_NO_THROW(m.validate());
  m.temperature = 2.5;
  EXPECT_THROW(m.validate(), ValidationError);
  m.temperature = 1.0;
  m.top_p = -0.1;
  EXPECT_THROW(m.validate(), ValidationError);
}

TEST(Transcript, AppendKeepsIndexesContiguous) {
  Transcript t = sample();
  EXPECT_EQ(t.turns[0].index, 0u);
  EXPECT_EQ(t.turns[1].index, 1u);
  EXPECT_EQ(t.model_turn_count(), 1u);
  EXPECT_NO_THROW(t.validate());
  t.turns[1].index = 5;
  EXPECT_THROW(t.validate(), ValidationError);
}

TEST(Corpus, SaveLoadRoundTripsCyrillicAndEmoji) {
  const fs::path dir = temp_dir("roundtrip");
  std::vector<Transcript> corpus = {sample("a"), sample("b")};
  corpus[1].model.endpoint_id = "endpoint-1";
  corpus[1].model.extra_params["thinking"] = "enabled";
  corpus[1].turns[0].timestamp = parse_timestamp("2025-10-31T14:05:09.120Z");
  save_corpus(corpus, dir / "c.jsonl");
  EXPECT_EQ(load_corpus(dir / "c.jsonl"), corpus);
  // Nothing but the final file is left behind.
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    (void)e;
    ++files;
  }
  EXPECT_EQ(files, 1u);
}

TEST(Corpus, WritesKeysInDocumentedOrder) {
  const Transcript t = sample();
  EXPECT_EQ(header_line(t),
            R"({"kind":"session","session_id":"s1","run_id":"run","protocol":"fdlite",)"
            R"("model":{"name":"Model A","temperature":1.0,"top_p":1.0}})");
  EXPECT_EQ(turn_line(t.turns[1]),
            R"({"kind":"turn","index":1,"role":"model","text":"Хорошо — OK 🙂","tags":[]})");
}

TEST(Corpus, BlankLinesAreIgnored) {
  std::ostringstream out;
  const std::vector<Transcript> one = {sample()};
  write_corpus(one, out);
  const auto back = parse("\n" + out.str() + "\n\n");
  EXPECT_EQ(back, one);
}

TEST(Corpus, ErrorsNameLineAndField) {
  const std::string header =
      R"({"kind":"session","session_id":"s","run_id":"r","protocol":"vc","model":{"name":"m"}})";
  auto expect_error = [](const std::string& text, std::size_t line, const std::string& field) {
    try {
      parse(text);
      ADD_FAILURE() << "no error for: " << text;
    } catch (const CorpusError& e) {
      EXPECT_EQ(e.line(), line) << e.what();
      EXPECT_EQ(e.field(), field) << e.what();
      EXPECT_EQ(e.source(), "mem");
    }
  };
  expect_error("{not json", 1, "<line>");
  expect_error(R"({"kind":"turn","index":0,"role":"model","text":"x","tags":[]})", 1, "kind");
  expect_error(header + "\n" + R"({"kind":"turn","index":1,"role":"model","text":"x","tags":[]})",
               2, "index");
  expect_error(header + "\n" + R"({"kind":"turn","index":0,"role":"robot","text":"x","tags":[]})",
               2, "role");
  expect_error(header + "\n" + R"({"kind":"turn","index":0,"role":"model","tags":[]})", 2, "text");
  expect_error(header + "\n" + R"({"kind":"turn","index":0,"role":"model","text":"x","tags":[1]})",
               2, "tags");
  expect_error(R"({"kind":"session","session_id":"s","run_id":"r","protocol":"nope","model":{"name":"m"}})",
               1, "protocol");
  expect_error(header + "\n" + header, 2, "session_id");
  expect_error(R"({"kind":"session","session_id":"s","run_id":"r","protocol":"vc","model":{"name":"m"},"x":1})",
               1, "x");
}

TEST(Corpus, OptionalKeysMayBeAbsent) {
  const auto c = parse(
      R"({"kind":"session","session_id":"s","run_id":"","protocol":"vc","model":{"name":"m"}})"
      "\n"
      R"({"kind":"turn","index":0,"role":"operator","text":"hi"})");
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].model.temperature, kDefaultTemperature);
  EXPECT_TRUE(c[0].turns[0].tags.empty());
}

TEST(Corpus, DirectoryLoadIsRecursiveAndOrdered) {
  const fs::path dir = temp_dir("dir");
  fs::create_directories(dir / "b");
  save_corpus(std::vector<Transcript>{sample("late")}, dir / "b" / "x.jsonl");
  save_corpus(std::vector<Transcript>{sample("early")}, dir / "a.jsonl");
  std::ofstream(dir / "notes.txt") << "ignored";
  const auto c = load_corpus(dir);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0].session_id, "early");
  EXPECT_EQ(c[1].session_id, "late");
  save_corpus(std::vector<Transcript>{sample("early")}, dir / "b" / "dup.jsonl");
  EXPECT_THROW(load_corpus(dir), CorpusError);
  EXPECT_THROW(load_corpus(dir / "missing"), IoError);
}

TEST(Corpus, SaveRejectsInvalidInputBeforeWriting) {
  const fs::path dir = temp_dir("reject");
  std::vector<Transcript> dup = {sample("x"), sample("x")};
  EXPECT_THROW(save_corpus(dup, dir / "c.jsonl"), ValidationError);
  EXPECT_FALSE(fs::exists(dir / "c.jsonl"));
}

TEST(Corpus, ShippedMalformedFileFails) {
  EXPECT_THROW(load_corpus(fs::path(VCH_TEST_DATA_DIR) / "bad.jsonl"), CorpusError);
}

TEST(Text, ScriptClassesAndTokens) {
  EXPECT_EQ(dominant_script("hello"), Script::kLatin);
  EXPECT_EQ(dominant_script("привет"), Script::kCyrillic);
  EXPECT_EQ(dominant_script("42"), Script::kNone);
  EXPECT_EQ(dominant_script("abвг"), Script::kNone);
  EXPECT_EQ(split_whitespace("  a\tb \n c ").size(), 3u);
  EXPECT_TRUE(split_whitespace(" \n ").empty());
  EXPECT_EQ(trim("\t ACK \n"), "ACK");
  EXPECT_EQ(fold_case("ПРИВЕТ Ёж ÀB"), "привет ёж àb");
  EXPECT_EQ(normalize_token("«Perhaps,»"), "perhaps");
  EXPECT_EQ(decode_utf8("a\xFF").back(), U'�');
}

TEST(Assets, SectionsTemplatesAndFraming) {
  const auto s = split_sections("one\n---\n\ntwo\n\n---\n");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], "one");
  EXPECT_EQ(s[1], "two");
  EXPECT_EQ(s[2], "");
  EXPECT_EQ(render_template("{{a}} and {{b}}", {{"a", "x"}}), "x and {{b}}");
  EXPECT_EQ(with_framing("", "p"), "p");
  EXPECT_EQ(with_framing("f", "p"), "f\n\np");
  EXPECT_THROW(default_asset("no-such-asset"), ConfigError);
  EXPECT_THROW(read_text_file("/no/such/file"), ConfigError);
}

TEST(Assets, BuiltInCopiesMatchShippedFiles) {
  for (const auto& entry : fs::directory_iterator(VCH_PROMPT_DIR)) {
    if (entry.path().extension() != ".txt") continue;
    const std::string name = entry.path().stem().string();
    EXPECT_EQ(default_asset(name), read_text_file(entry.path())) << name;
  }
}

TEST(Parallel, BoundsConcurrencyAndCapturesErrors) {
  std::atomic<int> live{0}, peak{0};
  const auto errors = run_bounded(16, 3, [&](std::size_t i) {
    const int now = ++live;
    int prev = peak.load();
    while (now > prev && !peak.compare_exchange_weak(prev, now)) {
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
    --live;
    if (i == 5) throw std::runtime_error("task 5");
  });
  ASSERT_EQ(errors.size(), 16u);
  EXPECT_LE(peak.load(), 3);
  for (std::size_t i = 0; i < errors.size(); ++i) EXPECT_EQ(errors[i] != nullptr, i == 5);
}

TEST(Parallel, OneMeansInlineInOrder) {
  std::vector<std::size_t> order;
  run_bounded(5, 1, [&](std::size_t i) { order.push_back(i); });
  EXPECT_EQ(order, (std::vector<std::size_t>{0, 1, 2, 3, 4}));
}

}  // namespace
}  // namespace vch::core
