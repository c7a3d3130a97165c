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

#include "vch/report/emit.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "vch/core/error.h"

namespace vch::report {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kEnDash = "\xE2\x80\x93";   // U+2013
constexpr std::string_view kLeftRight = "\xE2\x86\x94";  // U+2194

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

Json fixed2_json(const std::optional<core::Fixed2>& v, bool signed_form = false) {
  if (!v) return nullptr;
  return signed_form ? v->to_signed_string() : v->to_string();
}

Json strings_json(const std::vector<std::string>& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

Json value_json(const std::optional<fdlite::ProbeValue>& v) {
  if (!v) return nullptr;
  const char* kind = v->kind == fdlite::ProbeValue::Kind::kPoint   ? "point"
                     : v->kind == fdlite::ProbeValue::Kind::kRange ? "range"
                                                                   : "transition";
  return Json{{"raw", v->raw},
              {"kind", kind},
              {"first", v->first},
              {"last", v->last},
              {"operative", v->operative()}};
}

Json note_json(const SessionNote& n) {
  return Json{{"session_id", n.session_id},
              {"model", n.model},
              {"protocol", std::string(core::to_string(n.protocol))},
              {"detail", n.detail}};
}

Json cp43_json(const Cp43Summary& s) {
  Json j;
  j["model"] = s.model;
  j["run_id"] = s.run_id;
  j["session_ids"] = strings_json(s.session_ids);
  j["runs"] = s.runs;
  j["tau_min"] = s.tau_min ? Json(*s.tau_min) : Json(nullptr);
  j["m6_all_pass"] = s.m6_all_pass;
  j["max_drift"] = s.max_drift;
  j["excluded_runs"] = s.excluded_runs;
  j["tau_vs_expected_min"] =
      s.tau_vs_expected_min ? Json(*s.tau_vs_expected_min) : Json(nullptr);
  j["rank_all_ok"] = s.rank_all_ok;
  j["sum_all_ok"] = s.sum_all_ok;
  Json drift = Json::object();
  Json ranges = Json::object();
  for (cp43::Label l : cp43::kAllLabels) {
    const std::string name(cp43::to_string(l));
    drift[name] = s.max_drift_per_label[cp43::index(l)];
    const auto& r = s.alloc_ranges[cp43::index(l)];
    ranges[name] = Json::array({r.min, r.max});
  }
  j["max_drift_per_label"] = drift;
  j["alloc_ranges"] = ranges;
  return j;
}

Json to_json(const StudyReport& r) {
  Json j;
  Json vc = Json::array();
  for (const auto& row : r.vc_rows) {
    vc.push_back(Json{{"model", row.model},
                      {"run_id", row.run_id},
                      {"session_id", row.session_id},
                      {"t0", row.t0.to_string()},
                      {"t1", row.t1.to_string()},
                      {"t2", row.t2.to_string()},
                      {"mode", std::string(core::to_string(row.mode))},
                      {"monotone", row.monotone},
                      {"flags", strings_json(row.flags)}});
  }
  j["vc"] = vc;

  Json fd = Json::array();
  for (const auto& row : r.fd_rows) {
    fd.push_back(Json{{"model", row.model},
                      {"run_id", row.run_id},
                      {"session_id", row.session_id},
                      {"anchor_exact", row.anchor_exact},
                      {"trap_ack", row.trap_ack},
                      {"score", row.score},
                      {"window_scores", row.window_scores},
                      {"trajectory", row.trajectory},
                      {"metrics",
                       Json{{"hedging_density", row.hedging_density},
                            {"code_switch_frequency", row.code_switch_frequency},
                            {"meta_prefix_density", row.meta_prefix_density},
                            {"verbosity", row.verbosity},
                            {"topic_drift", row.topic_drift}}}});
  }
  j["fdlite"] = fd;

  Json cp = Json::array();
  for (const auto& s : r.cp43) cp.push_back(cp43_json(s));
  j["cp43"] = cp;

  Json ab = Json::array();
  for (const auto& s : r.ablation) {
    ab.push_back(Json{{"model", s.model},
                      {"session_ids", strings_json(s.session_ids)},
                      {"t_star_a", fixed2_json(s.t_star_a)},
                      {"t_star_b", fixed2_json(s.t_star_b)},
                      {"multipass_t2", fixed2_json(s.multipass_t2)},
                      {"delta_b_minus_a", fixed2_json(s.b_minus_a, true)},
                      {"delta_multipass_minus_b",
                       fixed2_json(s.multipass_minus_b, true)}});
  }
  j["ablation"] = ab;

  Json probe = Json::array();
  for (const auto& p : r.probe_rows) {
    probe.push_back(Json{{"model", p.model},
                         {"run_id", p.run_id},
                         {"session_id", p.row.session_id},
                         {"turn_index", p.row.turn_index},
                         {"phase", p.row.phase},
                         {"trust", value_json(p.row.trust)},
                         {"risk", value_json(p.row.risk)},
                         {"tension", value_json(p.row.tension)},
                         {"markers", p.row.markers},
                         {"notes", p.row.notes},
                         {"mismatch", p.row.mismatch ? Json(*p.row.mismatch)
                                                     : Json(nullptr)}});
  }
  j["probe"] = probe;

  Json v = Json::array();
  for (const auto& n : r.violations) v.push_back(note_json(n));
  j["violations"] = v;
  Json u = Json::array();
  for (const auto& n : r.unanalyzed) u.push_back(note_json(n));
  j["unanalyzed"] = u;
  return j;
}

[[noreturn]] void bad(const std::string& what, std::string_view text) {
  throw ParseError("report JSON: " + what, std::string(text));
}

core::Fixed2 fixed2_from(const Json& j, std::string_view text) {
  if (!j.is_string()) bad("expected a two-decimal string", text);
  const auto v = core::parse_fixed2(j.get<std::string>());
  if (!v) bad("bad two-decimal value '" + j.get<std::string>() + "'", text);
  return *v;
}

std::optional<core::Fixed2> opt_fixed2_from(const Json& j, std::string_view text) {
  if (j.is_null()) return std::nullopt;
  return fixed2_from(j, text);
}

std::optional<fdlite::ProbeValue> probe_value_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  fdlite::ProbeValue v;
  v.raw = j.at("raw").get<std::string>();
  const auto kind = j.at("kind").get<std::string>();
  v.kind = kind == "point"   ? fdlite::ProbeValue::Kind::kPoint
           : kind == "range" ? fdlite::ProbeValue::Kind::kRange
                             : fdlite::ProbeValue::Kind::kTransition;
  v.first = j.at("first").get<double>();
  v.last = j.at("last").get<double>();
  return v;
}

SessionNote note_from(const Json& j, std::string_view text) {
  SessionNote n;
  n.session_id = j.at("session_id").get<std::string>();
  n.model = j.at("model").get<std::string>();
  const auto p = core::parse_protocol(j.at("protocol").get<std::string>());
  if (!p) bad("unknown protocol", text);
  n.protocol = *p;
  n.detail = j.at("detail").get<std::string>();
  return n;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

std::string md_cell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) out += " " + md_cell(c) + " |";
  return out + "\n";
}

std::string md_table(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  std::string out = md_row(header);
  out += "|";
  for (std::size_t i = 0; i < header.size(); ++i) out += "---|";
  out += "\n";
  for (const auto& r : rows) out += md_row(r);
  return out;
}

std::string yes_no(bool b) { return b ? "Yes" : "No"; }

std::string join(const std::vector<std::string>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += v[i];
  }
  return out;
}

std::string opt_fixed(const std::optional<core::Fixed2>& v, bool sign = false) {
  if (!v) return "--";
  return sign ? v->to_signed_string() : v->to_string();
}

std::string range_text(const AllocRange& r) {
  if (r.min == r.max) return std::to_string(r.min);
  return std::to_string(r.min) + std::string(kEnDash) + std::to_string(r.max);
}

// "30>25>19–20>12–13>7–8>5", in expected rank order.
std::string m6_note(const Cp43Summary& s) {
  std::string out;
  for (std::size_t i = 0; i < cp43::kLabelCount; ++i) {
    if (i > 0) out += '>';
    out += range_text(s.alloc_ranges[cp43::index(cp43::kExpectedRank[i])]);
  }
  return out;
}

// "e.g., X4: 20 ↔ 19" for the first label with the largest drift.
std::string drift_note(const Cp43Summary& s) {
  if (s.max_drift == 0) return "no drift";
  for (cp43::Label l : cp43::kExpectedRank) {
    if (s.max_drift_per_label[cp43::index(l)] == s.max_drift) {
      const auto& r = s.alloc_ranges[cp43::index(l)];
      return "e.g., " + std::string(cp43::to_string(l)) + ": " +
             std::to_string(r.max) + " " + std::string(kLeftRight) + " " +
             std::to_string(r.min);
    }
  }
  return "";
}

std::string probe_cell(const std::optional<fdlite::ProbeValue>& v) {
  return v ? v->raw : "--";
}

std::string mismatch_cell(const std::optional<bool>& m) {
  return m ? yes_no(*m) : "--";
}

std::string emit_csv(const StudyReport& r) {
  std::string out = "# vc\n";
  out += csv_row({"model", "run_id", "session_id", "t0", "t1", "t2", "mode",
                  "monotone", "flags"});
  for (const auto& row : r.vc_rows) {
    out += csv_row({row.model, row.run_id, row.session_id, row.t0.to_string(),
                    row.t1.to_string(), row.t2.to_string(),
                    std::string(core::to_string(row.mode)),
                    row.monotone ? "true" : "false", join(row.flags, ";")});
  }
  out += "\n# fdlite\n";
  out += csv_row({"model", "run_id", "session_id", "anchor_exact", "trap_ack",
                  "score", "trajectory", "hedging_density",
                  "code_switch_frequency", "meta_prefix_density", "verbosity",
                  "topic_drift"});
  for (const auto& row : r.fd_rows) {
    out += csv_row({row.model, row.run_id, row.session_id,
                    row.anchor_exact ? "true" : "false",
                    row.trap_ack ? "true" : "false", std::to_string(row.score),
                    row.trajectory, fixed(row.hedging_density, 4),
                    fixed(row.code_switch_frequency, 4),
                    fixed(row.meta_prefix_density, 4), fixed(row.verbosity, 4),
                    row.topic_drift ? "true" : "false"});
  }
  out += "\n# cp43\n";
  out += csv_row({"model", "run_id", "runs", "tau_min", "m6_all_pass",
                  "max_drift", "excluded_runs", "session_ids"});
  for (const auto& s : r.cp43) {
    out += csv_row({s.model, s.run_id, std::to_string(s.runs),
                    s.tau_min ? format_tau(*s.tau_min) : "",
                    s.m6_all_pass ? "true" : "false",
                    std::to_string(s.max_drift),
                    std::to_string(s.excluded_runs), join(s.session_ids, ";")});
  }
  out += "\n# ablation\n";
  out += csv_row({"model", "t_star_a", "t_star_b", "multipass_t2",
                  "delta_b_minus_a", "delta_multipass_minus_b", "session_ids"});
  for (const auto& s : r.ablation) {
    auto cell = [](const std::optional<core::Fixed2>& v, bool sign) {
      return v ? (sign ? v->to_signed_string() : v->to_string()) : "";
    };
    out += csv_row({s.model, cell(s.t_star_a, false), cell(s.t_star_b, false),
                    cell(s.multipass_t2, false), cell(s.b_minus_a, true),
                    cell(s.multipass_minus_b, true), join(s.session_ids, ";")});
  }
  out += "\n# probe\n";
  out += csv_row({"model", "session_id", "turn_index", "phase", "trust",
                  "risk", "risk_min", "risk_max", "tension", "tension_min",
                  "tension_max", "markers", "notes", "mismatch"});
  for (const auto& p : r.probe_rows) {
    const auto& row = p.row;
    auto lo = [](const std::optional<fdlite::ProbeValue>& v) {
      return v ? fixed(v->min(), 2) : "";
    };
    auto hi = [](const std::optional<fdlite::ProbeValue>& v) {
      return v ? fixed(v->max(), 2) : "";
    };
    out += csv_row({p.model, row.session_id, std::to_string(row.turn_index),
                    row.phase, row.trust ? row.trust->raw : "",
                    row.risk ? row.risk->raw : "", lo(row.risk), hi(row.risk),
                    row.tension ? row.tension->raw : "", lo(row.tension),
                    hi(row.tension), row.markers, row.notes,
                    row.mismatch ? (*row.mismatch ? "true" : "false") : ""});
  }
  out += "\n# violations\n";
  out += csv_row({"session_id", "model", "protocol", "detail"});
  for (const auto& n : r.violations) {
    out += csv_row({n.session_id, n.model, std::string(core::to_string(n.protocol)),
                    n.detail});
  }
  out += "\n# unanalyzed\n";
  out += csv_row({"session_id", "model", "protocol", "detail"});
  for (const auto& n : r.unanalyzed) {
    out += csv_row({n.session_id, n.model, std::string(core::to_string(n.protocol)),
                    n.detail});
  }
  return out;
}

std::string emit_markdown(const StudyReport& r) {
  std::string out = "# Study report\n\n## VC trajectories\n\n";
  {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : r.vc_rows) {
      rows.push_back({row.model, row.t0.to_string(), row.t1.to_string(),
                      row.t2.to_string(), std::string(core::to_string(row.mode)),
                      yes_no(row.monotone), row.session_id});
    }
    out += md_table({"Model", "T0", "T1", "T2", "Mode", "Monotone", "Session"},
                    rows);
  }

  out += "\n## CP4.3 stability\n";
  for (const auto& s : r.cp43) {
    out += "\n### " + s.model + " (" + s.run_id + ", " +
           std::to_string(s.runs) + " runs)\n\n";
    std::vector<std::vector<std::string>> rows;
    if (s.tau_min) {
      rows.push_back({"Rank invariance (Kendall's τ)", format_tau(*s.tau_min),
                      s.rank_all_ok ? "Identical order across runs"
                                    : "Order differs from expected"});
      rows.push_back({"M6 monotonicity", s.m6_all_pass ? "Pass" : "Fail",
                      m6_note(s)});
      rows.push_back({"Max allocation drift (any label)",
                      std::to_string(s.max_drift), drift_note(s)});
    }
    rows.push_back({"Excluded runs", std::to_string(s.excluded_runs), ""});
    out += md_table({"Metric", "Value", "Note"}, rows);
    out += "\nSessions: " + join(s.session_ids, ", ") + "\n";
  }

  out += "\n## FD-Lite audits\n\n";
  {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : r.fd_rows) {
      rows.push_back({row.model, yes_no(row.anchor_exact), yes_no(row.trap_ack),
                      row.trajectory, row.session_id});
    }
    out += md_table({"Model", "Anchor exact", "Trap (ACK)", "Pressure markers",
                     "Session"},
                    rows);
  }

  if (!r.ablation.empty()) {
    out += "\n## Single-pass ablation\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& s : r.ablation) {
      rows.push_back({s.model, opt_fixed(s.t_star_a), opt_fixed(s.t_star_b),
                      opt_fixed(s.multipass_t2), opt_fixed(s.b_minus_a, true),
                      opt_fixed(s.multipass_minus_b, true),
                      join(s.session_ids, ", ")});
    }
    out += md_table({"Model", "T* (A)", "T* (B)", "Multi-pass T2", "Δ(B−A)",
                     "T2 − T*(B)", "Sessions"},
                    rows);
  }

  if (!r.probe_rows.empty()) {
    out += "\n## Pressure-risk probe\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : r.probe_rows) {
      const auto& row = p.row;
      rows.push_back({row.phase, probe_cell(row.trust), probe_cell(row.risk),
                      probe_cell(row.tension),
                      row.markers.empty() ? "--" : row.markers, row.notes,
                      mismatch_cell(row.mismatch), row.session_id});
    }
    out += md_table({"Phase", "Trust T", "Topic risk (1-10)",
                     "Self-reported tension (0-10)", "FD-Lite markers", "Notes",
                     "Mismatch", "Session"},
                    rows);
  }

  auto notes = [&](const char* title, const std::vector<SessionNote>& v) {
    if (v.empty()) return;
    out += std::string("\n## ") + title + "\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& n : v) {
      rows.push_back({n.session_id, n.model,
                      std::string(core::to_string(n.protocol)), n.detail});
    }
    out += md_table({"Session", "Model", "Protocol", "Detail"}, rows);
  };
  notes("Protocol violations", r.violations);
  notes("Unanalyzed sessions", r.unanalyzed);
  return out;
}

}  // namespace

std::optional<Format> parse_format(std::string_view text) {
  if (text == "json") return Format::kJson;
  if (text == "csv") return Format::kCsv;
  if (text == "markdown" || text == "md") return Format::kMarkdown;
  return std::nullopt;
}

std::string_view to_string(Format format) {
  switch (format) {
    case Format::kJson:
      return "json";
    case Format::kCsv:
      return "csv";
    case Format::kMarkdown:
      return "markdown";
  }
  return "?";
}

std::string_view file_extension(Format format) {
  return format == Format::kMarkdown ? "md" : to_string(format);
}

std::string format_tau(double tau) {
  if (std::floor(tau) == tau) return fixed(tau, 1);
  return fixed(tau, 4);
}

std::string emit(const StudyReport& report, Format format) {
  switch (format) {
    case Format::kJson:
      return to_json(report).dump(2) + "\n";
    case Format::kCsv:
      return emit_csv(report);
    case Format::kMarkdown:
      return emit_markdown(report);
  }
  return {};
}

std::string cp43_summary_json(const Cp43Summary& summary) {
  return cp43_json(summary).dump(2) + "\n";
}

std::string emit_figure_csv(const StudyReport& report) {
  std::string out = "model,pass,T\n";
  for (const auto& row : report.vc_rows) {
    const core::Fixed2 ts[] = {row.t0, row.t1, row.t2};
    for (int pass = 0; pass < 3; ++pass) {
      out += csv_row({row.model, std::to_string(pass), ts[pass].to_string()});
    }
  }
  return out;
}

StudyReport report_from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(e.what(), text);
  }
  StudyReport r;
  try {
    for (const auto& v : j.at("vc")) {
      VcRow row;
      row.model = v.at("model").get<std::string>();
      row.run_id = v.at("run_id").get<std::string>();
      row.session_id = v.at("session_id").get<std::string>();
      row.t0 = fixed2_from(v.at("t0"), text);
      row.t1 = fixed2_from(v.at("t1"), text);
      row.t2 = fixed2_from(v.at("t2"), text);
      const auto mode = core::parse_language_mode(v.at("mode").get<std::string>());
      if (!mode) bad("bad language mode", text);
      row.mode = *mode;
      row.monotone = v.at("monotone").get<bool>();
      row.flags = v.at("flags").get<std::vector<std::string>>();
      r.vc_rows.push_back(std::move(row));
    }
    for (const auto& v : j.at("fdlite")) {
      FdRow row;
      row.model = v.at("model").get<std::string>();
      row.run_id = v.at("run_id").get<std::string>();
      row.session_id = v.at("session_id").get<std::string>();
      row.anchor_exact = v.at("anchor_exact").get<bool>();
      row.trap_ack = v.at("trap_ack").get<bool>();
      row.score = v.at("score").get<int>();
      row.window_scores = v.at("window_scores").get<std::vector<int>>();
      row.trajectory = v.at("trajectory").get<std::string>();
      const auto& m = v.at("metrics");
      row.hedging_density = m.at("hedging_density").get<double>();
      row.code_switch_frequency = m.at("code_switch_frequency").get<double>();
      row.meta_prefix_density = m.at("meta_prefix_density").get<double>();
      row.verbosity = m.at("verbosity").get<double>();
      row.topic_drift = m.at("topic_drift").get<bool>();
      r.fd_rows.push_back(std::move(row));
    }
    for (const auto& v : j.at("cp43")) {
      Cp43Summary s;
      s.model = v.at("model").get<std::string>();
      s.run_id = v.at("run_id").get<std::string>();
      s.session_ids = v.at("session_ids").get<std::vector<std::string>>();
      s.runs = v.at("runs").get<std::size_t>();
      if (!v.at("tau_min").is_null()) s.tau_min = v.at("tau_min").get<double>();
      s.m6_all_pass = v.at("m6_all_pass").get<bool>();
      s.max_drift = v.at("max_drift").get<int>();
      s.excluded_runs = v.at("excluded_runs").get<std::size_t>();
      if (!v.at("tau_vs_expected_min").is_null()) {
        s.tau_vs_expected_min = v.at("tau_vs_expected_min").get<double>();
      }
      s.rank_all_ok = v.at("rank_all_ok").get<bool>();
      s.sum_all_ok = v.at("sum_all_ok").get<bool>();
      for (cp43::Label l : cp43::kAllLabels) {
        const std::string name(cp43::to_string(l));
        s.max_drift_per_label[cp43::index(l)] =
            v.at("max_drift_per_label").at(name).get<int>();
        const auto& range = v.at("alloc_ranges").at(name);
        s.alloc_ranges[cp43::index(l)] = {range.at(0).get<int>(),
                                          range.at(1).get<int>()};
      }
      r.cp43.push_back(std::move(s));
    }
    for (const auto& v : j.at("ablation")) {
      AblationSummary s;
      s.model = v.at("model").get<std::string>();
      s.session_ids = v.at("session_ids").get<std::vector<std::string>>();
      s.t_star_a = opt_fixed2_from(v.at("t_star_a"), text);
      s.t_star_b = opt_fixed2_from(v.at("t_star_b"), text);
      s.multipass_t2 = opt_fixed2_from(v.at("multipass_t2"), text);
      s.b_minus_a = opt_fixed2_from(v.at("delta_b_minus_a"), text);
      s.multipass_minus_b = opt_fixed2_from(v.at("delta_multipass_minus_b"), text);
      r.ablation.push_back(std::move(s));
    }
    for (const auto& v : j.at("probe")) {
      ProbeReportRow p;
      p.model = v.at("model").get<std::string>();
      p.run_id = v.at("run_id").get<std::string>();
      p.row.session_id = v.at("session_id").get<std::string>();
      p.row.turn_index = v.at("turn_index").get<std::size_t>();
      p.row.phase = v.at("phase").get<std::string>();
      p.row.trust = probe_value_from(v.at("trust"));
      p.row.risk = probe_value_from(v.at("risk"));
      p.row.tension = probe_value_from(v.at("tension"));
      p.row.markers = v.at("markers").get<std::string>();
      p.row.notes = v.at("notes").get<std::string>();
      if (!v.at("mismatch").is_null()) p.row.mismatch = v.at("mismatch").get<bool>();
      r.probe_rows.push_back(std::move(p));
    }
    for (const auto& v : j.at("violations")) r.violations.push_back(note_from(v, text));
    for (const auto& v : j.at("unanalyzed")) r.unanalyzed.push_back(note_from(v, text));
  } catch (const Json::exception& e) {
    bad(e.what(), text);
  }
  return r;
}

}  // namespace vch::report
