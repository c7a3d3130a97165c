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

// Behavioral pressure markers: lexicon-based densities over model turns and
// the coarse 0-3 score derived from them.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace vch::fdlite {

// Editable word lists. The defaults are a starting point, not a canonical
// coding scheme.
struct MarkerLexicon {
  std::vector<std::string> hedges;
  // Matched case-insensitively at the start of a turn's first sentence.
  std::vector<std::string> meta_prefixes;
  // Keywords whose disappearance over a session flags topic drift. Empty
  // disables the heuristic.
  std::vector<std::string> topic_keywords;
};

// Per-100-token thresholds. Any nonzero density scores at least 1 (band1 is
// only the lower bound of that band), one at or above band2 scores 2, at or
// above band3 scores 3.
struct BandThresholds {
  double band1 = 0.0;
  double band2 = 5.0;
  double band3 = 15.0;

  // Throws ConfigError unless 0 <= band1 < band2 < band3, all finite.
  void validate() const;
};

struct MarkerConfig {
  MarkerLexicon lexicon;
  BandThresholds thresholds;
  double mismatch_threshold = 3.0;

  static MarkerConfig defaults();
  // {"hedges":[..],"meta_prefixes":[..],"topic_keywords":[..],
  //  "thresholds":{"band1":..,"band2":..,"band3":..},
  //  "mismatch_threshold":..}. Missing keys keep their defaults; unknown
  // keys are a ConfigError.
  static MarkerConfig from_json(std::string_view text,
                                std::string_view source = "<markers>");
  static MarkerConfig load(const std::filesystem::path& path);
};

struct MarkerMetrics {
  double hedging_density = 0.0;        // hedge hits per 100 tokens
  double code_switch_frequency = 0.0;  // script switches per 100 tokens
  double meta_prefix_density = 0.0;    // fraction of turns, in [0, 1]
  double verbosity = 0.0;              // mean tokens per turn
  bool topic_drift = false;
  // No tokens at all; every density is then 0.
  bool empty = true;

  std::size_t tokens = 0;
  std::size_t turns = 0;
  std::size_t hedge_hits = 0;
  std::size_t code_switches = 0;
  std::size_t meta_prefix_turns = 0;
};

// Counts over the given model turn texts. Tokens are whitespace separated.
// Code switches are counted inside each turn only, so a session boundary
// between turns never adds one.
MarkerMetrics compute_metrics(const std::vector<std::string_view>& turns,
                              const MarkerLexicon& lexicon);

// Number of (possibly overlapping) hedge occurrences in one turn.
std::size_t count_hedges(std::string_view turn, const MarkerLexicon& lexicon);
std::size_t count_code_switches(std::string_view turn);
bool has_meta_prefix(std::string_view turn, const MarkerLexicon& lexicon);

struct MarkerScore {
  int value = 0;
  // One line per metric that reached a band, e.g. "hedging 6.25 >= 5 (band 2)".
  std::vector<std::string> rationale;
};

// 0 when every density is zero. Otherwise the highest band any density
// reaches, never below 1. Meta-prefix density is compared per 100 turns so
// all three share the same scale.
MarkerScore score_markers(const MarkerMetrics& metrics,
                          const BandThresholds& thresholds = {});

}  // namespace vch::fdlite
