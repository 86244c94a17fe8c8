// Copyright 2026 The meetwer Authors
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

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "meetwer/alignment_html.hpp"
#include "meetwer/error.hpp"
#include "meetwer/greedy.hpp"
#include "meetwer/io.hpp"
#include "meetwer/report.hpp"
#include "meetwer/speaker_attributed.hpp"
#include "meetwer/stream_assignment.hpp"

namespace meetwer::cli {
namespace {

enum class Metric {
  kWer,
  kCp,
  kTcp,
  kDa,
  kOrc,
  kTcOrc,
  kMimo,
  kTcMimo,
  kDiCp,
  kDiTcp,
  kGreedyDiCp,
  kGreedyOrc,
};

struct MetricInfo {
  const char* command;
  const char* alignment_name;
  Metric metric;
  bool time_constrained;
  const char* help;
};

constexpr MetricInfo kMetrics[] = {
    {"wer", "wer", Metric::kWer, false, "WER of all segments of a session concatenated"},
    {"cpwer", "cp", Metric::kCp, false, "concatenated minimum-permutation WER"},
    {"tcpwer", "tcp", Metric::kTcp, true, "time-constrained cpWER"},
    {"dawer", "da", Metric::kDa, false, "WER under the DER-optimal speaker mapping"},
    {"orcwer", "orc", Metric::kOrc, false, "optimal reference combination WER"},
    {"tcorcwer", "tcorc", Metric::kTcOrc, true, "time-constrained ORC-WER"},
    {"mimower", "mimo", Metric::kMimo, false, "MIMO-WER"},
    {"tcmimower", "tcmimo", Metric::kTcMimo, true, "time-constrained MIMO-WER"},
    {"dicpwer", "dicp", Metric::kDiCp, false, "diarization-invariant cpWER"},
    {"ditcpwer", "ditcp", Metric::kDiTcp, true, "time-constrained DI-cpWER"},
    {"greedy-dicpwer", "greedy-dicp", Metric::kGreedyDiCp, false,
     "greedy approximation of (tc)DI-cpWER"},
    {"greedy-orcwer", "greedy-orc", Metric::kGreedyOrc, false,
     "greedy approximation of (tc)ORC-WER"},
};

constexpr double kDefaultCollar = 5.0;

struct Options {
  std::string ref_path;
  std::string hyp_path;
  std::string ref_format;
  std::string hyp_format;
  std::optional<double> collar;
  std::string word_timestamps;
  bool word_level = false;
  std::string out_path;
  bool per_session = false;
  unsigned jobs = 1;
  std::string alignment = "tcp";
};

const MetricInfo& metric_by_alignment(const std::string& name) {
  for (const auto& m : kMetrics) {
    if (name == m.alignment_name || name == m.command) return m;
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown alignment '" + name + "'");
}

struct Plan {
  Metric metric;
  std::string name;
  Collar collar = Collar::unbounded();
  WordTimestamps timestamps;
  bool word_level = false;
};

Plan make_plan(const MetricInfo& info, const Options& opt) {
  Plan plan;
  plan.metric = info.metric;
  plan.name = info.command;
  if (info.time_constrained) {
    plan.collar = Collar(opt.collar.value_or(kDefaultCollar));
  } else if (info.metric == Metric::kGreedyDiCp || info.metric == Metric::kGreedyOrc) {
    if (opt.collar) plan.collar = Collar(*opt.collar);
  } else if (opt.collar) {
    throw Error(ErrorKind::kInvalidArgument,
                std::string("--collar applies to time-constrained and greedy commands only, not ") +
                    info.command);
  }
  if (!opt.word_timestamps.empty()) {
    const auto mode = parse_timestamp_mode(opt.word_timestamps);
    plan.timestamps = {*mode, *mode};
  }
  plan.word_level = opt.word_level;
  return plan;
}

ReportAssignment mapping_assignment(const SpeakerMapping& m) {
  ReportAssignment a;
  a.kind = ReportAssignment::Kind::kMapping;
  a.mapping = m.pairs;
  return a;
}

ReportAssignment label_assignment(const StreamAssignment& s) {
  ReportAssignment a;
  a.kind = ReportAssignment::Kind::kSegmentLabels;
  a.segment_labels = s.labels;
  return a;
}

SessionReport score_session(const Plan& plan, const std::string& id, SegLst ref, SegLst hyp) {
  if (plan.word_level) {
    ref = explode_to_word_level(validate(ref), plan.timestamps.reference);
    hyp = explode_to_word_level(validate(hyp), plan.timestamps.hypothesis);
  }
  SessionReport s;
  s.session_id = id;
  const auto& c = plan.collar;
  const auto& ts = plan.timestamps;
  auto take_mapping = [&](SpeakerAttributedResult r, bool with_mapping) {
    s.counts = r.counts;
    if (with_mapping) s.assignment = mapping_assignment(r.mapping);
    s.alignment = std::move(r.alignment);
  };
  auto take_labels = [&](StreamAssignmentResult r) {
    s.counts = r.counts;
    s.assignment = label_assignment(r.assignment);
    s.alignment = std::move(r.alignment);
  };
  switch (plan.metric) {
    case Metric::kWer: take_mapping(concatenated_wer(ref, hyp, ts), false); break;
    case Metric::kCp:
    case Metric::kTcp: take_mapping(cp_wer(ref, hyp, c, ts), true); break;
    case Metric::kDa: take_mapping(da_wer(ref, hyp, ts), true); break;
    case Metric::kOrc:
    case Metric::kTcOrc: take_labels(orc_wer(ref, hyp, c, ts)); break;
    case Metric::kMimo:
    case Metric::kTcMimo: take_labels(mimo_wer(ref, hyp, c, ts)); break;
    case Metric::kDiCp:
    case Metric::kDiTcp: take_labels(di_cp_wer(ref, hyp, c, ts)); break;
    case Metric::kGreedyDiCp: take_labels(greedy_di_cp(ref, hyp, c, ts)); break;
    case Metric::kGreedyOrc: take_labels(greedy_orc(ref, hyp, c, ts)); break;
  }
  return s;
}

SessionMap load(const std::string& path, const std::string& format_name, const char* flag) {
  std::optional<FileFormat> format;
  if (!format_name.empty()) {
    format = parse_file_format(format_name);
  } else {
    format = format_from_extension(path);
    if (!format) {
      throw Error(ErrorKind::kInvalidArgument, path,
                  std::string("cannot infer the format from the extension; pass ") + flag);
    }
  }
  return read_sessions(path, *format);
}

Report score_all(const Plan& plan, const Options& opt) {
  const SessionMap refs = load(opt.ref_path, opt.ref_format, "--ref-format");
  const SessionMap hyps = load(opt.hyp_path, opt.hyp_format, "--hyp-format");
  std::vector<std::string> ids;
  for (const auto& [id, _] : refs) ids.push_back(id);
  for (const auto& [id, _] : hyps) {
    if (!refs.count(id)) ids.push_back(id);
  }
  std::sort(ids.begin(), ids.end());

  Report report;
  report.metric = plan.name;
  report.sessions.resize(ids.size());
  std::vector<std::exception_ptr> failures(ids.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < ids.size(); i = next++) {
      try {
        const auto r = refs.find(ids[i]);
        const auto h = hyps.find(ids[i]);
        report.sessions[i] = score_session(plan, ids[i], r == refs.end() ? SegLst{} : r->second,
                                           h == hyps.end() ? SegLst{} : h->second);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  const unsigned workers =
      std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(ids.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!failures[i]) continue;
    try {
      std::rethrow_exception(failures[i]);
    } catch (const Error& e) {
      throw Error(e.kind(), "session '" + ids[i] + "'", e.what());
    }
  }
  return report;
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out_path.empty() || opt.out_path == "-") {
    out << text;
  } else {
    write_file(opt.out_path, text);
  }
}

void add_common(CLI::App* sub, Options& opt, bool collar_flag) {
  sub->add_option("--ref", opt.ref_path, "reference transcript (.stm or .json)")->required();
  sub->add_option("--hyp", opt.hyp_path, "hypothesis transcript (.stm or .json)")->required();
  const std::vector<std::string> formats = {"stm", "seglst", "json"};
  sub->add_option("--ref-format", opt.ref_format, "override the reference file format")
      ->check(CLI::IsMember(formats));
  sub->add_option("--hyp-format", opt.hyp_format, "override the hypothesis file format")
      ->check(CLI::IsMember(formats));
  if (collar_flag) {
    sub->add_option("--collar", opt.collar, "collar in seconds")->check(CLI::NonNegativeNumber);
  }
  sub->add_option("--word-timestamps", opt.word_timestamps,
                  "pseudo word timestamps for both sides (default: character_based for the "
                  "reference, character_based_points for the hypothesis)")
      ->check(CLI::IsMember({"segment", "character_based", "character_based_points"}));
  sub->add_flag("--word-level", opt.word_level, "split every segment into one-word segments");
  sub->add_option("--out", opt.out_path, "output file (default: standard output)");
  sub->add_option("--jobs", opt.jobs, "sessions scored concurrently")->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Long-form multi-talker word error rates", "meetwer"};
  app.require_subcommand(1);
  Options opt;
  std::vector<std::pair<CLI::App*, const MetricInfo*>> commands;
  for (const auto& m : kMetrics) {
    auto* sub = app.add_subcommand(m.command, m.help);
    const bool collar_flag =
        m.time_constrained || m.metric == Metric::kGreedyDiCp || m.metric == Metric::kGreedyOrc;
    add_common(sub, opt, collar_flag);
    sub->add_flag("--per-session", opt.per_session, "include per-session results");
    commands.emplace_back(sub, &m);
  }
  auto* align = app.add_subcommand("align", "write an HTML alignment page");
  add_common(align, opt, true);
  std::vector<std::string> alignment_names;
  for (const auto& m : kMetrics) alignment_names.push_back(m.alignment_name);
  align->add_option("--alignment", opt.alignment, "metric whose alignment is shown")
      ->check(CLI::IsMember(alignment_names))
      ->capture_default_str();

  std::vector<std::string> args(argv.begin() + (argv.empty() ? 0 : 1), argv.end());
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (align->parsed()) {
      const MetricInfo& info = metric_by_alignment(opt.alignment);
      const Plan plan = make_plan(info, opt);
      emit(opt, emit_alignment_html(score_all(plan, opt)), out);
      return kExitOk;
    }
    for (const auto& [sub, info] : commands) {
      if (!sub->parsed()) continue;
      const Plan plan = make_plan(*info, opt);
      emit(opt, report_to_json(score_all(plan, opt), opt.per_session), out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::kInvalidArgument && e.location().empty() ? kExitUsage
                                                                           : kExitDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitUsage;
}

}  // namespace meetwer::cli
