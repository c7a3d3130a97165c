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

#include "vch/core/corpus.h"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "vch/core/error.h"

namespace vch::core {
namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

class LineReader {
 public:
  LineReader(std::string_view source, std::size_t line)
      : source_(source), line_(line) {}

  [[noreturn]] void fail(const std::string& field,
                         const std::string& detail) const {
    throw CorpusError(std::string(source_), line_, field, detail);
  }

  void only_keys(const Json& obj, std::initializer_list<std::string_view> keys,
                 const std::string& prefix = "") const {
    for (const auto& [key, _] : obj.items()) {
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        fail(prefix + key, "unknown key");
      }
    }
  }

  const Json& require(const Json& obj, const std::string& key,
                      const std::string& prefix = "") const {
    const auto it = obj.find(key);
    if (it == obj.end()) fail(prefix + key, "missing");
    return *it;
  }

  std::string string_field(const Json& obj, const std::string& key,
                           const std::string& prefix = "") const {
    const Json& v = require(obj, key, prefix);
    if (!v.is_string()) fail(prefix + key, "expected a string");
    return v.get<std::string>();
  }

  double number_field(const Json& obj, const std::string& key, double fallback,
                      const std::string& prefix = "") const {
    const auto it = obj.find(key);
    if (it == obj.end()) return fallback;
    if (!it->is_number()) fail(prefix + key, "expected a number");
    return it->get<double>();
  }

 private:
  std::string_view source_;
  std::size_t line_;
};

ModelTarget read_model(const LineReader& r, const Json& m) {
  if (!m.is_object()) r.fail("model", "expected an object");
  r.only_keys(m, {"name", "endpoint_id", "temperature", "top_p",
                  "extra_params"},
              "model.");
  ModelTarget model;
  model.name = r.string_field(m, "name", "model.");
  if (m.contains("endpoint_id")) {
    model.endpoint_id = r.string_field(m, "endpoint_id", "model.");
  }
  model.temperature =
      r.number_field(m, "temperature", kDefaultTemperature, "model.");
  model.top_p = r.number_field(m, "top_p", kDefaultTopP, "model.");
  if (const auto it = m.find("extra_params"); it != m.end()) {
    if (!it->is_object()) r.fail("model.extra_params", "expected an object");
    for (const auto& [k, v] : it->items()) {
      if (!v.is_string()) r.fail("model.extra_params." + k, "expected a string");
      model.extra_params.emplace(k, v.get<std::string>());
    }
  }
  try {
    model.validate();
  } catch (const ValidationError& e) {
    r.fail("model", e.what());
  }
  return model;
}

Transcript read_header(const LineReader& r, const Json& obj) {
  r.only_keys(obj, {"kind", "session_id", "run_id", "protocol", "model"});
  Transcript t;
  t.session_id = r.string_field(obj, "session_id");
  if (t.session_id.empty()) r.fail("session_id", "must be non-empty");
  t.run_id = r.string_field(obj, "run_id");
  const std::string protocol = r.string_field(obj, "protocol");
  const auto p = parse_protocol(protocol);
  if (!p) r.fail("protocol", "unknown protocol '" + protocol + "'");
  t.protocol = *p;
  t.model = read_model(r, r.require(obj, "model"));
  return t;
}

Turn read_turn(const LineReader& r, const Json& obj, std::size_t expected) {
  r.only_keys(obj, {"kind", "index", "role", "text", "timestamp", "tags"});
  Turn turn;
  const Json& index = r.require(obj, "index");
  if (!index.is_number_integer() || index.get<long long>() < 0) {
    r.fail("index", "expected a non-negative integer");
  }
  turn.index = index.get<std::size_t>();
  if (turn.index != expected) {
    r.fail("index", "non-contiguous turn index " + std::to_string(turn.index) +
                        " (expected " + std::to_string(expected) + ")");
  }
  const std::string role = r.string_field(obj, "role");
  const auto parsed = parse_role(role);
  if (!parsed) r.fail("role", "unknown role '" + role + "'");
  turn.role = *parsed;
  turn.text = r.string_field(obj, "text");
  if (obj.contains("timestamp")) {
    const std::string ts = r.string_field(obj, "timestamp");
    turn.timestamp = parse_timestamp(ts);
    if (!turn.timestamp) r.fail("timestamp", "not an ISO-8601 UTC instant");
  }
  if (const auto it = obj.find("tags"); it != obj.end()) {
    if (!it->is_array()) r.fail("tags", "expected an array of strings");
    for (const auto& tag : *it) {
      if (!tag.is_string()) r.fail("tags", "expected an array of strings");
      turn.tags.insert(tag.get<std::string>());
    }
  }
  return turn;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

std::vector<fs::path> corpus_files(const fs::path& path) {
  std::error_code ec;
  if (!fs::exists(path, ec)) {
    throw IoError("corpus path does not exist: " + path.string());
  }
  if (!fs::is_directory(path, ec)) return {path};
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(path)) {
    if (entry.is_regular_file() && entry.path().extension() == ".jsonl") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

Json model_json(const ModelTarget& m) {
  Json j;
  j["name"] = m.name;
  j["temperature"] = m.temperature;
  j["top_p"] = m.top_p;
  if (!m.endpoint_id.empty()) j["endpoint_id"] = m.endpoint_id;
  if (!m.extra_params.empty()) {
    Json extra = Json::object();
    for (const auto& [k, v] : m.extra_params) extra[k] = v;
    j["extra_params"] = std::move(extra);
  }
  return j;
}

std::string dump(const Json& j) {
  try {
    return j.dump();
  } catch (const nlohmann::json::type_error& e) {
    throw ValidationError(std::string("text is not valid UTF-8: ") + e.what());
  }
}

struct ParsedSession {
  Transcript transcript;
  std::size_t header_line;
};

std::vector<ParsedSession> parse_sessions(std::istream& in,
                                          std::string_view source_name) {
  std::vector<ParsedSession> out;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_blank(line)) continue;
    const LineReader r(source_name, line_no);
    Json obj;
    try {
      obj = Json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      r.fail("<line>", std::string("malformed JSON: ") + e.what());
    }
    if (!obj.is_object()) r.fail("<line>", "expected a JSON object");
    const std::string kind = r.string_field(obj, "kind");
    if (kind == "session") {
      Transcript t = read_header(r, obj);
      if (!seen.insert(t.session_id).second) {
        r.fail("session_id", "duplicate session id '" + t.session_id + "'");
      }
      out.push_back({std::move(t), line_no});
    } else if (kind == "turn") {
      if (out.empty()) r.fail("kind", "turn line before any session header");
      Transcript& t = out.back().transcript;
      t.turns.push_back(read_turn(r, obj, t.turns.size()));
    } else {
      r.fail("kind", "unknown kind '" + kind + "'");
    }
  }
  return out;
}

}  // namespace

std::vector<Transcript> parse_corpus(std::istream& in,
                                     std::string_view source_name) {
  std::vector<Transcript> out;
  for (auto& s : parse_sessions(in, source_name)) {
    out.push_back(std::move(s.transcript));
  }
  return out;
}

std::vector<Transcript> load_corpus(const fs::path& path) {
  std::vector<Transcript> all;
  std::unordered_map<std::string, std::string> owner;
  for (const auto& file : corpus_files(path)) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot open corpus file: " + file.string());
    for (auto& s : parse_sessions(in, file.string())) {
      const auto [it, fresh] =
          owner.emplace(s.transcript.session_id, file.string());
      if (!fresh) {
        throw CorpusError(file.string(), s.header_line, "session_id",
                          "duplicate session id '" + s.transcript.session_id +
                              "' (first seen in " + it->second + ")");
      }
      all.push_back(std::move(s.transcript));
    }
  }
  return all;
}

std::string header_line(const Transcript& t) {
  Json j;
  j["kind"] = "session";
  j["session_id"] = t.session_id;
  j["run_id"] = t.run_id;
  j["protocol"] = std::string(to_string(t.protocol));
  j["model"] = model_json(t.model);
  return dump(j);
}

std::string turn_line(const Turn& turn) {
  Json j;
  j["kind"] = "turn";
  j["index"] = turn.index;
  j["role"] = std::string(to_string(turn.role));
  j["text"] = turn.text;
  if (turn.timestamp) j["timestamp"] = format_timestamp(*turn.timestamp);
  j["tags"] = Json::array();
  for (const auto& tag : turn.tags) j["tags"].push_back(tag);
  return dump(j);
}

void validate_corpus(std::span<const Transcript> transcripts) {
  std::set<std::string> seen;
  for (const auto& t : transcripts) {
    t.validate();
    if (!seen.insert(t.session_id).second) {
      throw ValidationError("duplicate session id '" + t.session_id + "'");
    }
  }
}

void write_corpus(std::span<const Transcript> transcripts, std::ostream& out) {
  validate_corpus(transcripts);
  // Serialize everything first so an encoding failure writes nothing.
  std::ostringstream buf;
  for (const auto& t : transcripts) {
    buf << header_line(t) << '\n';
    for (const auto& turn : t.turns) buf << turn_line(turn) << '\n';
  }
  out << buf.str();
}

void save_corpus(std::span<const Transcript> transcripts,
                 const fs::path& path) {
  std::ostringstream buf;
  write_corpus(transcripts, buf);
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write corpus file: " + path.string());
    out << buf.str();
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move corpus file into place: " + path.string());
  }
}

}  // namespace vch::core
