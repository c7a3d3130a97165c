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

#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vch/transport/chat.h"

namespace vch::transport {

// One mapping of the scripted mock: when the prompt contains `contains`,
// answer with the next of `replies`.
struct ScriptRule {
  std::string contains;
  std::vector<std::string> replies;
};

struct Script {
  std::vector<ScriptRule> rules;
  // Used when no rule matches; if unset an unmatched prompt is an error.
  std::optional<std::string> fallback;
};

// Script file format:
//   {"rules":[{"contains":"PASS1","reply":"0.35"},
//             {"contains":"PASS3","replies":["a","b"]}],
//    "fallback":"..."}
Script load_script(const std::filesystem::path& path);
Script parse_script(const std::string& json_text);

// Deterministic mock backend. The first rule whose `contains` occurs in the
// request prompt wins. Without a seed, a rule's replies are served in
// rotation; with a seed they are drawn from a seeded generator.
// Sequential by contract: concurrent send() throws ConcurrentUseError.
class ScriptedTransport : public ChatTransport {
 public:
  explicit ScriptedTransport(Script script,
                             std::optional<std::uint64_t> seed = std::nullopt);

  std::string send(const ChatRequest& request) override;

  std::size_t calls() const { return calls_; }
  const std::vector<ChatRequest>& requests() const { return requests_; }

 private:
  Script script_;
  std::optional<std::mt19937_64> rng_;
  std::vector<std::size_t> cursor_;
  std::size_t calls_ = 0;
  std::vector<ChatRequest> requests_;
  std::atomic<bool> busy_{false};
};

}  // namespace vch::transport
