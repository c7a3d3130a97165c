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

// Serializations of a StudyReport. JSON is canonical and round-trips through
// report_from_json; CSV and markdown are derived views.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "vch/report/report.h"

namespace vch::report {

enum class Format { kJson, kCsv, kMarkdown };

std::optional<Format> parse_format(std::string_view text);
std::string_view to_string(Format format);
// "json", "csv", "md".
std::string_view file_extension(Format format);

std::string emit(const StudyReport& report, Format format);

// Throws ParseError when text is not a report emitted by emit(kJson).
StudyReport report_from_json(std::string_view text);

// Plot-ready trajectory data: "model,pass,T" then one row per VC row and
// pass index 0..2.
std::string emit_figure_csv(const StudyReport& report);

// {"tau_min":..,"m6_all_pass":..,"max_drift":..,"excluded_runs":..} plus
// the remaining summary fields.
std::string cp43_summary_json(const Cp43Summary& summary);

// "1.0" for exact integers, otherwise four decimals.
std::string format_tau(double tau);

}  // namespace vch::report
