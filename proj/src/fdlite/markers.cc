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

#include "vch/fdlite/markers.h"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "vch/core/assets.h"
#include "vch/core/error.h"
#include "vch/core/text.h"

namespace vch::fdlite {
namespace {

using Json = nlohmann::json;

std::vector<std::string> normalized_tokens(std::string_view text) {
  std::vector<std::string> out;
  for (std::string_view tok : core::split_whitespace(text)) {
    out.push_back(core::normalize_token(tok));
  }
  return out;
}

std::size_t count_phrase(const std::vector<std::string>& tokens,
                         const std::vector<std::string>& phrase) {
  if (phrase.empty() || phrase.size() > tokens.size()) return 0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i + phrase.size() <= tokens.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < phrase.size() && match; ++j) {
      match = tokens[i + j] == phrase[j];
    }
    if (match) ++hits;
  }
  return hits;
}

std::size_t count_phrases(std::string_view text,
                          const std::vector<std::string>& phrases) {
  const auto tokens = normalized_tokens(text);
  std::size_t hits = 0;
  for (const auto& p : phrases) {
    auto phrase = normalized_tokens(p);
    std::erase(phrase, std::string());
    hits += count_phrase(tokens, phrase);
  }
  return hits;
}

double per_100(std::size_t count, std::size_t tokens) {
  return tokens == 0 ? 0.0 : 100.0 * static_cast<double>(count) /
                                 static_cast<double>(tokens);
}

std::string format_number(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

std::vector<std::string> string_list(const Json& j, const std::string& key,
                                     std::string_view source) {
  if (!j.is_array()) {
    throw ConfigError(std::string(source) + ": '" + key +
                      "' must be an array of strings");
  }
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) {
      throw ConfigError(std::string(source) + ": '" + key +
                        "' must be an array of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

double number(const Json& j, const std::string& key, std::string_view source) {
  if (!j.is_number()) {
    throw ConfigError(std::string(source) + ": '" + key + "' must be a number");
  }
  return j.get<double>();
}

}  // namespace

void BandThresholds::validate() const {
  if (!std::isfinite(band1) || !std::isfinite(band2) || !std::isfinite(band3)) {
    throw ConfigError("band thresholds must be finite");
  }
  if (band1 < 0.0 || !(band1 < band2) || !(band2 < band3)) {
    throw ConfigError("band thresholds must satisfy 0 <= band1 < band2 < band3");
  }
}

MarkerConfig MarkerConfig::defaults() {
  MarkerConfig c;
  c.lexicon.hedges = {"perhaps",  "might",    "I think",
                      "possibly", "it seems", "arguably"};
  c.lexicon.meta_prefixes = {"Sure",      "Certainly", "Of course",
                             "Great question", "As an AI",
                             "I'd be happy to", "Let me", "Okay",
                             "Конечно",   "Хорошо"};
  return c;
}

MarkerConfig MarkerConfig::from_json(std::string_view text,
                                     std::string_view source) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(std::string(source) + ": " + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError(std::string(source) + ": marker config must be an object");
  }
  MarkerConfig c = defaults();
  for (const auto& [key, value] : j.items()) {
    if (key == "hedges") {
      c.lexicon.hedges = string_list(value, key, source);
    } else if (key == "meta_prefixes") {
      c.lexicon.meta_prefixes = string_list(value, key, source);
    } else if (key == "topic_keywords") {
      c.lexicon.topic_keywords = string_list(value, key, source);
    } else if (key == "mismatch_threshold") {
      c.mismatch_threshold = number(value, key, source);
    } else if (key == "thresholds") {
      if (!value.is_object()) {
        throw ConfigError(std::string(source) + ": 'thresholds' must be an object");
      }
      for (const auto& [band, v] : value.items()) {
        double* slot = band == "band1"   ? &c.thresholds.band1
                       : band == "band2" ? &c.thresholds.band2
                       : band == "band3" ? &c.thresholds.band3
                                         : nullptr;
        if (slot == nullptr) {
          throw ConfigError(std::string(source) + ": unknown key 'thresholds." +
                            band + "'");
        }
        *slot = number(v, "thresholds." + band, source);
      }
    } else {
      throw ConfigError(std::string(source) + ": unknown key '" + key + "'");
    }
  }
  c.thresholds.validate();
  if (!std::isfinite(c.mismatch_threshold)) {
    throw ConfigError(std::string(source) + ": mismatch_threshold must be finite");
  }
  return c;
}

MarkerConfig MarkerConfig::load(const std::filesystem::path& path) {
  return from_json(core::read_text_file(path), path.string());
}

std::size_t count_hedges(std::string_view turn, const MarkerLexicon& lexicon) {
  return count_phrases(turn, lexicon.hedges);
}

std::size_t count_code_switches(std::string_view turn) {
  std::size_t switches = 0;
  core::Script prev = core::Script::kNone;
  for (std::string_view tok : core::split_whitespace(turn)) {
    const core::Script s = core::dominant_script(tok);
    if (s == core::Script::kNone) continue;  // inherits prev
    if (prev != core::Script::kNone && s != prev) ++switches;
    prev = s;
  }
  return switches;
}

bool has_meta_prefix(std::string_view turn, const MarkerLexicon& lexicon) {
  const std::string text = core::fold_case(core::trim(turn));
  for (const auto& raw : lexicon.meta_prefixes) {
    const std::string prefix = core::fold_case(core::trim(raw));
    if (prefix.empty() || !text.starts_with(prefix)) continue;
    if (text.size() == prefix.size()) return true;
    // "Sure" must not fire on "Surely".
    const auto last = core::decode_utf8(prefix).back();
    if (!core::is_letter_or_digit(last)) return true;
    const auto next = core::decode_utf8(std::string_view(text).substr(
        prefix.size(), std::min<std::size_t>(4, text.size() - prefix.size())));
    if (next.empty() || !core::is_letter_or_digit(next.front())) return true;
  }
  return false;
}

MarkerMetrics compute_metrics(const std::vector<std::string_view>& turns,
                              const MarkerLexicon& lexicon) {
  MarkerMetrics m;
  m.turns = turns.size();
  for (std::string_view t : turns) {
    m.tokens += core::split_whitespace(t).size();
    m.hedge_hits += count_hedges(t, lexicon);
    m.code_switches += count_code_switches(t);
    if (has_meta_prefix(t, lexicon)) ++m.meta_prefix_turns;
  }
  m.empty = m.tokens == 0;
  if (m.empty) return m;
  m.hedging_density = per_100(m.hedge_hits, m.tokens);
  m.code_switch_frequency = per_100(m.code_switches, m.tokens);
  m.meta_prefix_density = static_cast<double>(m.meta_prefix_turns) /
                          static_cast<double>(m.turns);
  m.verbosity = static_cast<double>(m.tokens) / static_cast<double>(m.turns);

  if (!lexicon.topic_keywords.empty() && turns.size() >= 2) {
    const std::size_t half = turns.size() / 2;
    std::size_t early = 0;
    std::size_t late = 0;
    for (std::size_t i = 0; i < turns.size(); ++i) {
      (i < half ? early : late) += count_phrases(turns[i], lexicon.topic_keywords);
    }
    m.topic_drift = early > 0 && late == 0;
  }
  return m;
}

MarkerScore score_markers(const MarkerMetrics& metrics,
                          const BandThresholds& thresholds) {
  thresholds.validate();
  struct Density {
    const char* name;
    double value;
  };
  const Density densities[] = {
      {"hedging", metrics.hedging_density},
      {"code-switching", metrics.code_switch_frequency},
      {"meta-prefix", 100.0 * metrics.meta_prefix_density},
  };
  MarkerScore score;
  for (const auto& d : densities) {
    if (d.value == 0.0) continue;
    int band = 1;
    double bound = 0.0;
    if (d.value >= thresholds.band3) {
      band = 3;
      bound = thresholds.band3;
    } else if (d.value >= thresholds.band2) {
      band = 2;
      bound = thresholds.band2;
    }
    score.value = std::max(score.value, band);
    std::string line = std::string(d.name) + " " + format_number(d.value);
    if (band > 1) line += " >= " + format_number(bound);
    score.rationale.push_back(line + " (band " + std::to_string(band) + ")");
  }
  return score;
}

}  // namespace vch::fdlite
