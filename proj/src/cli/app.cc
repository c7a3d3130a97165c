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

#include "vch/cli/app.h"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <ctime>
#include <fstream>
#include <memory>
#include <map>
#include <set>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "vch/cli/config.h"
#include "vch/core/assets.h"
#include "vch/core/corpus.h"
#include "vch/core/error.h"
#include "vch/core/parallel.h"
#include "vch/core/session.h"
#include "vch/cp43/engine.h"
#include "vch/fdlite/audit.h"
#include "vch/report/emit.h"
#include "vch/report/report.h"
#include "vch/transport/live.h"
#include "vch/transport/replay.h"
#include "vch/transport/scripted.h"
#include "vch/vc/engine.h"

namespace vch::cli {
namespace {

namespace fs = std::filesystem;
using core::Protocol;
using core::Transcript;

struct Options {
  std::string config;
  std::string transport;
  std::string fixtures;
  std::string mock_script;
  std::string model;
  std::string prompts;
  std::string markers;
  std::string out;
  std::string run_id;
  std::string evidence;
  std::string options_text;
  std::string endpoint;
  std::string api_key_env;
  std::string ablation;
  std::string in;
  std::string format = "markdown";
  std::size_t parallel = 0;
  std::optional<std::uint64_t> seed;
  std::size_t repeats = 7;
};

std::string slug(std::string_view text) {
  std::string out;
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      out += static_cast<char>(std::tolower(c));
    } else if (!out.empty() && out.back() != '-') {
      out += '-';
    }
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out.empty() ? "model" : out;
}

std::string file_safe(std::string_view id) {
  std::string out;
  for (unsigned char c : id) {
    out += (std::isalnum(c) || c == '-' || c == '_' || c == '.') ? static_cast<char>(c)
                                                                 : '_';
  }
  return out;
}

std::string default_run_id() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "run-%Y%m%dT%H%M%SZ", &tm);
  return buf;
}

std::string text_or_file(const std::string& value) {
  if (value.starts_with("@")) return core::read_text_file(value.substr(1));
  return value;
}

// Everything a subcommand needs once flags and config are merged.
class Context {
 public:
  Context(const Options& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out(out), err(err) {
    if (!opt.config.empty()) cfg = load_harness_config(opt.config);
    if (!opt.endpoint.empty()) cfg.transport.endpoint_url = opt.endpoint;
    if (!opt.api_key_env.empty()) cfg.transport.auth_env = opt.api_key_env;
    if (!opt.prompts.empty()) cfg.prompt_dir = fs::path(opt.prompts);
    if (!opt.markers.empty()) cfg.marker_config = fs::path(opt.markers);
    if (!opt.out.empty()) cfg.output_dir = opt.out;
    if (opt.seed) cfg.seed = opt.seed;
    if (opt.parallel > 0) cfg.parallel = opt.parallel;
    cfg.validate();
    markers = cfg.marker_config ? fdlite::MarkerConfig::load(*cfg.marker_config)
                                : fdlite::MarkerConfig::defaults();
    vars = cfg.template_vars;
    if (!opt.evidence.empty()) vars["evidence"] = text_or_file(opt.evidence);
    if (!opt.options_text.empty()) vars["options"] = text_or_file(opt.options_text);
    run_id = opt.run_id.empty() ? default_run_id() : opt.run_id;
  }

  void open_transport() {
    const auto parsed = transport::parse_transport_kind(opt_.transport);
    if (!parsed) throw ConfigError("unknown transport '" + opt_.transport + "'");
    kind = *parsed;
    switch (kind) {
      case transport::TransportKind::kMock:
        if (opt_.mock_script.empty()) {
          throw ConfigError("--transport mock needs --mock-script <json>");
        }
        mock = std::make_shared<transport::ScriptedTransport>(
            transport::load_script(opt_.mock_script), cfg.seed);
        break;
      case transport::TransportKind::kReplay:
        if (opt_.fixtures.empty()) {
          throw ConfigError("--transport replay needs --fixtures <path>");
        }
        fixtures = core::load_corpus(opt_.fixtures);
        break;
      case transport::TransportKind::kLive:
        live = std::make_shared<transport::LiveTransport>(cfg.transport);
        break;
    }
  }

  bool replay() const { return kind == transport::TransportKind::kReplay; }

  // One mock serves every session so its replies rotate across runs; it is
  // sequential, so mock runs ignore --parallel.
  std::shared_ptr<transport::ChatTransport> transport() const {
    if (kind == transport::TransportKind::kLive) return live;
    return mock;
  }

  std::size_t parallel() const {
    return kind == transport::TransportKind::kMock ? 1 : cfg.parallel;
  }

  std::vector<core::ModelTarget> models() const {
    if (!opt_.model.empty()) {
      for (const auto& m : cfg.models) {
        if (m.name == opt_.model) return {m};
      }
      core::ModelTarget m;
      m.name = opt_.model;
      return {m};
    }
    if (cfg.models.empty()) {
      throw ConfigError("no model given: pass --model or list models in the config");
    }
    return cfg.models;
  }

  // Recorded sessions of the wanted protocols, narrowed by --model.
  std::vector<const Transcript*> recorded(std::initializer_list<Protocol> wanted) const {
    std::vector<const Transcript*> out;
    for (const auto& t : fixtures) {
      if (std::find(wanted.begin(), wanted.end(), t.protocol) == wanted.end()) continue;
      if (!opt_.model.empty() && t.model.name != opt_.model) continue;
      out.push_back(&t);
    }
    return out;
  }

  core::SessionIds ids_for(const Transcript& recorded) const {
    return {recorded.session_id, opt_.run_id.empty() ? recorded.run_id : run_id};
  }

  core::SessionIds ids_for(std::string_view what, const core::ModelTarget& m,
                           std::optional<std::size_t> n = std::nullopt) const {
    std::string id = run_id + "-" + std::string(what) + "-" + slug(m.name);
    if (n) id += "-" + std::to_string(*n + 1);
    return {id, run_id};
  }

  vc::VcPromptSet vc_prompts() const {
    auto p = cfg.prompt_dir ? vc::VcPromptSet::load(*cfg.prompt_dir)
                            : vc::VcPromptSet::defaults();
    return p.rendered(vars);
  }

  fdlite::FdPromptSet fd_prompts() const {
    auto p = cfg.prompt_dir ? fdlite::FdPromptSet::load(*cfg.prompt_dir)
                            : fdlite::FdPromptSet::defaults();
    p.framing = core::render_template(p.framing, vars);
    p.anchor = core::render_template(p.anchor, vars);
    p.trap = core::render_template(p.trap, vars);
    for (auto& f : p.followups) f = core::render_template(f, vars);
    return p;
  }

  cp43::Cp43PromptSet cp43_prompts() const {
    auto p = cfg.prompt_dir ? cp43::Cp43PromptSet::load(*cfg.prompt_dir)
                            : cp43::Cp43PromptSet::defaults();
    p.framing = core::render_template(p.framing, vars);
    p.task = core::render_template(p.task, vars);
    for (auto& v : p.pressure) v = core::render_template(v, vars);
    return p;
  }

  fs::path session_dir() const { return cfg.output_dir / "sessions"; }

  void write_session(const Transcript& t) const {
    const Transcript one[] = {t};
    core::save_corpus(one, session_dir() / (file_safe(t.session_id) + ".jsonl"));
  }

  HarnessConfig cfg;
  fdlite::MarkerConfig markers;
  std::map<std::string, std::string> vars;
  std::string run_id;
  transport::TransportKind kind = transport::TransportKind::kMock;
  std::shared_ptr<transport::ScriptedTransport> mock;
  std::vector<Transcript> fixtures;
  std::shared_ptr<transport::ChatTransport> live;

 private:
  const Options& opt_;

 public:
  std::ostream& out;
  std::ostream& err;
};

using Job = std::function<Transcript()>;

struct Conducted {
  std::vector<Transcript> sessions;
  std::size_t aborted = 0;
};

// Runs every job (bounded parallelism) and writes each transcript to disk
// the moment its session ends, aborted ones included.
Conducted conduct_all(Context& ctx, const std::vector<Job>& jobs) {
  fs::create_directories(ctx.session_dir());
  std::vector<std::optional<Transcript>> done(jobs.size());
  std::vector<std::string> aborted(jobs.size());
  const auto errors = core::run_bounded(jobs.size(), ctx.parallel(), [&](std::size_t i) {
    try {
      done[i] = jobs[i]();
      ctx.write_session(*done[i]);
    } catch (const core::SessionAborted& e) {
      ctx.write_session(e.partial());
      aborted[i] = e.what();
    }
  });
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Conducted c;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    if (!aborted[i].empty()) {
      ctx.err << "error: " << aborted[i] << "\n";
      ++c.aborted;
    } else {
      c.sessions.push_back(std::move(*done[i]));
    }
  }
  return c;
}

// Analysis tags, written back over the raw transcripts.
Transcript tagged(Transcript t, const Context& ctx, std::size_t run_index = 0) {
  switch (t.protocol) {
    case Protocol::kVc:
      return vc::analyze_vc(std::move(t)).transcript;
    case Protocol::kVcAblationA:
    case Protocol::kVcAblationB:
      return vc::analyze_ablation(std::move(t)).transcript;
    case Protocol::kFdLite:
      return fdlite::analyze_fdlite(std::move(t), ctx.markers).transcript;
    case Protocol::kCp43:
      cp43::analyze_cp43(t, run_index);
      return t;
    case Protocol::kProbe:
    case Protocol::kFreeform:
      return t;
  }
  return t;
}

// Tags, report.json, and the exit status shared by every run-* command.
int finish(Context& ctx, const Conducted& c, report::StudyReport* out_report = nullptr) {
  for (std::size_t i = 0; i < c.sessions.size(); ++i) {
    ctx.write_session(tagged(c.sessions[i], ctx, i));
  }
  report::ReportConfig rc;
  rc.markers = ctx.markers;
  const auto rep = report::build_report(c.sessions, rc);
  {
    std::ofstream f(ctx.cfg.output_dir / "report.json", std::ios::binary);
    f << report::emit(rep, report::Format::kJson);
    if (!f) throw IoError("cannot write " + (ctx.cfg.output_dir / "report.json").string());
  }
  for (const auto& v : rep.violations) {
    ctx.err << "protocol violation: " << v.session_id << ": " << v.detail << "\n";
  }
  if (out_report) *out_report = rep;
  if (c.aborted > 0) return kExitError;
  return rep.has_violations() ? kExitViolation : kExitOk;
}

std::optional<vc::AblationVariant> parse_variant(const std::string& s) {
  if (s == "A" || s == "a") return vc::AblationVariant::kA;
  if (s == "B" || s == "b") return vc::AblationVariant::kB;
  return std::nullopt;
}

Job vc_replay_job(const Context& ctx, const Transcript& t) {
  return [&ctx, &t] {
    transport::ReplayTransport rt(t);
    const auto prompts = vc::VcPromptSet::from_recorded(t);
    if (t.protocol == Protocol::kVc) {
      return vc::conduct_vc(rt, prompts, t.model, ctx.ids_for(t));
    }
    const auto variant = t.protocol == Protocol::kVcAblationA
                             ? vc::AblationVariant::kA
                             : vc::AblationVariant::kB;
    return vc::conduct_ablation(rt, prompts, t.model, variant, ctx.ids_for(t));
  };
}

void print_vc(const Context& ctx, const report::StudyReport& rep) {
  for (const auto& row : rep.vc_rows) {
    ctx.out << row.session_id << "\t" << row.model << "\t" << row.t0.to_string()
            << "/" << row.t1.to_string() << "/" << row.t2.to_string() << "|"
            << core::to_string(row.mode)
            << (row.monotone ? "\tmonotone" : "\tNOT monotone") << "\n";
  }
  for (const auto& s : rep.ablation) {
    ctx.out << s.model;
    if (s.t_star_a) ctx.out << "\tT*(A)=" << s.t_star_a->to_string();
    if (s.t_star_b) ctx.out << "\tT*(B)=" << s.t_star_b->to_string();
    if (s.b_minus_a) ctx.out << "\tB-A=" << s.b_minus_a->to_signed_string();
    if (s.multipass_minus_b) {
      ctx.out << "\tT2-B=" << s.multipass_minus_b->to_signed_string();
    }
    ctx.out << "\n";
  }
}

int cmd_run_vc(Context& ctx, const Options& opt) {
  ctx.open_transport();
  std::optional<vc::AblationVariant> variant;
  if (!opt.ablation.empty()) {
    variant = parse_variant(opt.ablation);
    if (!variant) throw ConfigError("--ablation must be A or B");
  }
  const Protocol protocol = !variant ? Protocol::kVc
                            : *variant == vc::AblationVariant::kA
                                ? Protocol::kVcAblationA
                                : Protocol::kVcAblationB;
  std::vector<Job> jobs;
  if (ctx.replay()) {
    for (const Transcript* t : ctx.recorded({protocol})) {
      jobs.push_back(vc_replay_job(ctx, *t));
    }
    if (jobs.empty()) throw ConfigError("no recorded sessions to replay");
  } else {
    const auto prompts = ctx.vc_prompts();
    for (const auto& m : ctx.models()) {
      jobs.push_back([&ctx, prompts, m, variant] {
        auto tr = ctx.transport();
        if (!variant) return vc::conduct_vc(*tr, prompts, m, ctx.ids_for("vc", m));
        return vc::conduct_ablation(
            *tr, prompts, m, *variant,
            ctx.ids_for(*variant == vc::AblationVariant::kA ? "ablation-a"
                                                            : "ablation-b",
                        m));
      });
    }
  }
  report::StudyReport rep;
  const int status = finish(ctx, conduct_all(ctx, jobs), &rep);
  print_vc(ctx, rep);
  return status;
}

int cmd_run_ablation(Context& ctx) {
  ctx.open_transport();
  std::vector<Job> jobs;
  if (ctx.replay()) {
    std::set<std::string> models;
    for (const Transcript* t :
         ctx.recorded({Protocol::kVcAblationA, Protocol::kVcAblationB})) {
      models.insert(t->model.name);
      jobs.push_back(vc_replay_job(ctx, *t));
    }
    if (jobs.empty()) throw ConfigError("no recorded ablation sessions to replay");
    // The multi-pass session the deltas are taken against.
    for (const Transcript* t : ctx.recorded({Protocol::kVc})) {
      if (models.count(t->model.name)) jobs.push_back(vc_replay_job(ctx, *t));
    }
  } else {
    const auto prompts = ctx.vc_prompts();
    for (const auto& m : ctx.models()) {
      for (int k = 0; k < 3; ++k) {
        jobs.push_back([&ctx, prompts, m, k] {
          auto tr = ctx.transport();
          if (k == 0) {
            return vc::conduct_ablation(*tr, prompts, m, vc::AblationVariant::kA,
                                        ctx.ids_for("ablation-a", m));
          }
          if (k == 1) {
            return vc::conduct_ablation(*tr, prompts, m, vc::AblationVariant::kB,
                                        ctx.ids_for("ablation-b", m));
          }
          return vc::conduct_vc(*tr, prompts, m, ctx.ids_for("vc", m));
        });
      }
    }
  }
  report::StudyReport rep;
  const int status = finish(ctx, conduct_all(ctx, jobs), &rep);
  print_vc(ctx, rep);
  return status;
}

int cmd_run_fdlite(Context& ctx) {
  ctx.open_transport();
  std::vector<Job> jobs;
  if (ctx.replay()) {
    for (const Transcript* t : ctx.recorded({Protocol::kFdLite})) {
      jobs.push_back([&ctx, t] {
        transport::ReplayTransport rt(*t);
        return fdlite::conduct_fdlite(rt, fdlite::FdPromptSet::from_recorded(*t),
                                      t->model, ctx.ids_for(*t));
      });
    }
    if (jobs.empty()) throw ConfigError("no recorded FD-Lite sessions to replay");
  } else {
    const auto prompts = ctx.fd_prompts();
    for (const auto& m : ctx.models()) {
      jobs.push_back([&ctx, prompts, m] {
        auto tr = ctx.transport();
        return fdlite::conduct_fdlite(*tr, prompts, m, ctx.ids_for("fdlite", m));
      });
    }
  }
  report::StudyReport rep;
  const int status = finish(ctx, conduct_all(ctx, jobs), &rep);
  for (const auto& row : rep.fd_rows) {
    ctx.out << row.session_id << "\t" << row.model
            << "\tanchor=" << (row.anchor_exact ? "yes" : "no")
            << "\ttrap=" << (row.trap_ack ? "yes" : "no")
            << "\tmarkers=" << row.trajectory << "\n";
  }
  return status;
}

int cmd_run_cp43(Context& ctx, const Options& opt) {
  if (opt.repeats == 0) throw ValidationError("--repeats must be positive");
  ctx.open_transport();
  std::vector<Job> jobs;
  if (ctx.replay()) {
    std::map<std::string, std::vector<const Transcript*>> by_model;
    for (const Transcript* t : ctx.recorded({Protocol::kCp43})) {
      by_model[t->model.name].push_back(t);
    }
    if (by_model.empty()) throw ConfigError("no recorded CP4.3 sessions to replay");
    for (auto& [model, runs] : by_model) {
      if (runs.size() < opt.repeats) {
        throw ConfigError("only " + std::to_string(runs.size()) +
                          " recorded CP4.3 runs for '" + model + "', " +
                          std::to_string(opt.repeats) + " requested");
      }
      std::sort(runs.begin(), runs.end(), [](const Transcript* a, const Transcript* b) {
        return a->session_id < b->session_id;
      });
      for (std::size_t i = 0; i < opt.repeats; ++i) {
        const Transcript* t = runs[i];
        jobs.push_back([&ctx, t] {
          transport::ReplayTransport rt(*t);
          return cp43::conduct_cp43(
              rt, cp43::Cp43PromptSet::from_recorded(*t).prompt_for(0), t->model,
              ctx.ids_for(*t));
        });
      }
    }
  } else {
    const auto prompts = ctx.cp43_prompts();
    for (const auto& m : ctx.models()) {
      for (std::size_t i = 0; i < opt.repeats; ++i) {
        jobs.push_back([&ctx, prompts, m, i] {
          auto tr = ctx.transport();
          return cp43::conduct_cp43(*tr, prompts.prompt_for(i), m,
                                    ctx.ids_for("cp43", m, i));
        });
      }
    }
  }
  report::StudyReport rep;
  const int status = finish(ctx, conduct_all(ctx, jobs), &rep);
  if (rep.cp43.size() == 1) {
    ctx.out << report::cp43_summary_json(rep.cp43.front());
  } else {
    ctx.out << "[\n";
    for (std::size_t i = 0; i < rep.cp43.size(); ++i) {
      std::string s = report::cp43_summary_json(rep.cp43[i]);
      s.pop_back();
      ctx.out << s << (i + 1 < rep.cp43.size() ? ",\n" : "\n");
    }
    ctx.out << "]\n";
  }
  return status;
}

report::Format format_of(const Options& opt) {
  const auto f = report::parse_format(opt.format);
  if (!f) throw ConfigError("unknown format '" + opt.format + "'");
  return *f;
}

std::vector<Transcript> load_input(const Options& opt) {
  if (opt.in.empty()) throw ConfigError("--in <path> is required");
  return core::load_corpus(opt.in);
}

report::ReportConfig report_config(const Context& ctx) {
  report::ReportConfig rc;
  rc.markers = ctx.markers;
  return rc;
}

int cmd_audit(Context& ctx, const Options& opt) {
  const auto corpus = load_input(opt);
  const auto rep = report::build_report(corpus, report_config(ctx));
  ctx.out << report::emit(rep, format_of(opt));
  return rep.has_violations() ? kExitViolation : kExitOk;
}

void write_file(const fs::path& path, const std::string& data) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  f << data;
  if (!f) throw IoError("cannot write " + path.string());
}

int cmd_report(Context& ctx, const Options& opt) {
  const auto format = format_of(opt);
  const auto corpus = load_input(opt);
  const auto rep = report::build_report(corpus, report_config(ctx));
  const std::string text = report::emit(rep, format);
  if (opt.out.empty()) {
    ctx.out << text;
    return kExitOk;
  }
  fs::path target(opt.out);
  fs::path dir = target;
  if (fs::is_directory(target) || !target.has_extension()) {
    target = dir / ("report." + std::string(report::file_extension(format)));
  } else {
    dir = target.parent_path();
  }
  write_file(target, text);
  write_file(dir / "figure.csv", report::emit_figure_csv(rep));
  ctx.out << "wrote " << target.string() << " and "
          << (dir / "figure.csv").string() << "\n";
  return kExitOk;
}

int cmd_validate(Context& ctx, const Options& opt) {
  const auto corpus = load_input(opt);
  core::validate_corpus(corpus);
  std::size_t turns = 0;
  for (const auto& t : corpus) turns += t.turns.size();
  ctx.out << "ok: " << corpus.size() << " sessions, " << turns << " turns\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  Options opt;
  CLI::App app{"Protocol harness for VC, FD-Lite and CP4.3 sessions", "vch"};
  app.failure_message(CLI::FailureMessage::help);
  app.require_subcommand(1);

  const std::vector<std::string> kinds = {"live", "mock", "replay"};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config, "harness.json");
    sub->add_option("--markers", opt.markers, "Marker config JSON");
    sub->add_option("--out", opt.out, "Output directory or file");
  };
  auto running = [&](CLI::App* sub) {
    common(sub);
    sub->add_option("--transport", opt.transport, "live, mock or replay")
        ->required()
        ->check(CLI::IsMember(kinds));
    sub->add_option("--fixtures", opt.fixtures, "Recorded sessions to replay");
    sub->add_option("--mock-script", opt.mock_script, "Scripted mock replies");
    sub->add_option("--model", opt.model, "Model target name");
    sub->add_option("--prompts", opt.prompts, "Prompt template directory");
    sub->add_option("--run-id", opt.run_id, "Run id for new sessions");
    sub->add_option("--parallel", opt.parallel, "Concurrent sessions")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt.seed, "Seed for the mock transport");
    sub->add_option("--evidence", opt.evidence, "Evidence text, or @file");
    sub->add_option("--options", opt.options_text, "CP4.3 option text, or @file");
    sub->add_option("--endpoint", opt.endpoint, "Live endpoint URL");
    sub->add_option("--api-key-env", opt.api_key_env,
                    "Environment variable holding the API key");
  };

  auto* run_vc = app.add_subcommand("run-vc", "Three-pass calibration sessions");
  running(run_vc);
  run_vc->add_option("--ablation", opt.ablation, "Run single-pass variant A or B")
      ->check(CLI::IsMember({"A", "B", "a", "b"}));
  auto* run_ab = app.add_subcommand("run-ablation", "Single-pass A and B plus multi-pass");
  running(run_ab);
  auto* run_fd = app.add_subcommand("run-fdlite", "FD-Lite sessions");
  running(run_fd);
  auto* run_cp = app.add_subcommand("run-cp43", "Repeated CP4.3 sessions");
  running(run_cp);
  run_cp->add_option("--repeats", opt.repeats, "Independent sessions per model");

  auto* audit = app.add_subcommand("audit", "Check a recorded corpus");
  common(audit);
  audit->add_option("--in", opt.in, "Corpus file or directory")->required();
  audit->add_option("--format", opt.format, "markdown, json or csv");
  auto* rep = app.add_subcommand("report", "Tables and figure data");
  common(rep);
  rep->add_option("--in", opt.in, "Corpus file or directory")->required();
  rep->add_option("--format", opt.format, "markdown, json or csv");
  auto* val = app.add_subcommand("validate-corpus", "Load and validate a corpus");
  val->add_option("--in", opt.in, "Corpus file or directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    Context ctx(opt, out, err);
    if (run_vc->parsed()) return cmd_run_vc(ctx, opt);
    if (run_ab->parsed()) return cmd_run_ablation(ctx);
    if (run_fd->parsed()) return cmd_run_fdlite(ctx);
    if (run_cp->parsed()) return cmd_run_cp43(ctx, opt);
    if (audit->parsed()) return cmd_audit(ctx, opt);
    if (rep->parsed()) return cmd_report(ctx, opt);
    if (val->parsed()) return cmd_validate(ctx, opt);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace vch::cli
