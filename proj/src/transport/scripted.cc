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

#include "vch/transport/scripted.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "vch/core/error.h"
#include "vch/transport/sequential.h"

namespace vch::transport {

Script parse_script(const std::string& json_text) {
  using nlohmann::json;
  const json j = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    throw ConfigError("mock script is not a JSON object");
  }
  Script script;
  if (j.contains("rules")) {
    if (!j["rules"].is_array()) throw ConfigError("mock script: rules must be an array");
    for (const auto& r : j["rules"]) {
      if (!r.is_object() || !r.contains("contains") || !r["contains"].is_string()) {
        throw ConfigError("mock script: every rule needs a string 'contains'");
      }
      ScriptRule rule;
      rule.contains = r["contains"].get<std::string>();
      if (r.contains("reply") && r["reply"].is_string()) {
        rule.replies.push_back(r["reply"].get<std::string>());
      }
      if (r.contains("replies") && r["replies"].is_array()) {
        for (const auto& reply : r["replies"]) {
          if (!reply.is_string()) throw ConfigError("mock script: replies must be strings");
          rule.replies.push_back(reply.get<std::string>());
        }
      }
      if (rule.replies.empty()) {
        throw ConfigError("mock script: rule '" + rule.contains + "' has no reply");
      }
      script.rules.push_back(std::move(rule));
    }
  }
  if (j.contains("fallback")) {
    if (!j["fallback"].is_string()) throw ConfigError("mock script: fallback must be a string");
    script.fallback = j["fallback"].get<std::string>();
  }
  return script;
}

Script load_script(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read mock script " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_script(buf.str());
}

ScriptedTransport::ScriptedTransport(Script script,
                                     std::optional<std::uint64_t> seed)
    : script_(std::move(script)), cursor_(script_.rules.size(), 0) {
  for (const auto& rule : script_.rules) {
    if (rule.replies.empty()) {
      throw ValidationError("scripted rule '" + rule.contains + "' has no replies");
    }
  }
  if (seed) rng_.emplace(*seed);
}

std::string ScriptedTransport::send(const ChatRequest& request) {
  SequentialSection section(busy_, "scripted transport");
  request.validate();
  ++calls_;
  requests_.push_back(request);
  const std::string& prompt = request.prompt();
  for (std::size_t i = 0; i < script_.rules.size(); ++i) {
    const ScriptRule& rule = script_.rules[i];
    if (prompt.find(rule.contains) == std::string::npos) continue;
    std::size_t pick;
    if (rng_) {
      std::uniform_int_distribution<std::size_t> dist(0, rule.replies.size() - 1);
      pick = dist(*rng_);
    } else {
      pick = cursor_[i]++ % rule.replies.size();
    }
    return rule.replies[pick];
  }
  if (script_.fallback) return *script_.fallback;
  throw TransportError("scripted transport has no reply for prompt: " +
                       prompt.substr(0, 80));
}

}  // namespace vch::transport
