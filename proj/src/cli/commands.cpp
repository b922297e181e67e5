// Copyright 2026 The readacuity Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "readacuity/cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <optional>

#include "readacuity/calibration.hpp"
#include "readacuity/cli/analyze.hpp"
#include "readacuity/cli/config.hpp"
#include "readacuity/cli/reports.hpp"
#include "readacuity/csv.hpp"
#include "readacuity/curves.hpp"
#include "readacuity/error.hpp"
#include "readacuity/schedule.hpp"
#include "readacuity/ssq.hpp"

namespace readacuity::cli {

namespace {

// Usage problems found after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

NamedInput load(const std::string& path) {
  try {
    return {path, csv::read_file(path)};
  } catch (const ParseError& e) {
    throw InputError(e.what());
  }
}

void emit(const std::optional<std::string>& path, const std::string& contents,
          std::ostream& out) {
  if (path) {
    csv::write_file(*path, contents);
  } else {
    out << contents;
  }
}

std::string located(const std::string& file, const ParseError& e) {
  return file + ":" + std::to_string(e.row()) + ": " + e.what();
}

struct AnalyzeArgs {
  std::vector<std::string> sessions;
  std::vector<std::string> ssq;
  std::string out_dir;
  std::optional<std::string> config;
  std::optional<std::string> cps_method;
  std::optional<double> p;
  bool exact = false;
  bool approx = false;
};

int run_analyze(const AnalyzeArgs& args, std::ostream& out) {
  AnalysisConfig config;
  if (args.config) {
    const NamedInput file = load(*args.config);
    try {
      config = parse_config(file.contents);
    } catch (const ParseError& e) {
      throw InputError(located(file.name, e));
    }
  }
  if (args.cps_method) {
    if (*args.cps_method == "fraction") {
      config.metrics.cps_method = CpsMethod::kFraction;
    } else if (*args.cps_method == "sd") {
      config.metrics.cps_method = CpsMethod::kSd;
    } else {
      throw UsageError("--cps-method must be 'fraction' or 'sd'");
    }
  }
  if (args.p) {
    if (!(*args.p >= 0.80 && *args.p <= 1.00)) {
      throw UsageError("--p must lie in [0.80, 1.00]");
    }
    config.metrics.p = *args.p;
  }
  if (args.exact) config.wilcoxon.mode = stats::WilcoxonMode::kExact;
  if (args.approx) config.wilcoxon.mode = stats::WilcoxonMode::kNormalApprox;

  std::vector<NamedInput> sessions;
  for (const std::string& path : args.sessions) sessions.push_back(load(path));
  std::vector<NamedInput> ssq;
  for (const std::string& path : args.ssq) ssq.push_back(load(path));

  const AnalysisBundle bundle = analyze(sessions, ssq, config);
  write_bundle(bundle, args.out_dir);
  out << "analyzed " << bundle.metrics.size() << " session(s); "
      << bundle.friedman.size() << " Friedman test(s); "
      << bundle.curves.size() << " curve(s) -> " << args.out_dir << "\n";
  return kExitSuccess;
}

struct CalibrateArgs {
  std::string points;
  std::optional<std::string> targets;
  std::string out_dir;
};

int run_calibrate(const CalibrateArgs& args, std::ostream& out) {
  std::vector<TargetRow> rows;
  if (args.targets) {
    std::size_t index = 0;
    std::string_view text = *args.targets;
    while (!text.empty() || index == 0) {
      const auto comma = text.find(',');
      const std::string_view item = text.substr(0, comma);
      double value = 0.0;
      try {
        value = csv::parse_double(item, 0, "targets");
      } catch (const ParseError&) {
        throw UsageError("--targets must be a comma-separated list of logMAR values");
      }
      rows.push_back({"T" + std::to_string(++index), value, {}});
      if (comma == std::string_view::npos) break;
      text = text.substr(comma + 1);
    }
  } else {
    for (ResolutionLevel level : kAllLevels) {
      rows.push_back({std::string(to_string(level)), nominal_logmar(level), {}});
    }
  }

  const NamedInput file = load(args.points);
  std::vector<CalibrationPoint> points;
  try {
    points = import_calibration_csv(file.contents);
  } catch (const ParseError& e) {
    throw InputError(located(file.name, e));
  }
  CalibrationModel model;
  try {
    model = fit_log_model(points);
  } catch (const std::exception& e) {
    throw InputError(file.name + ": " + e.what());
  }
  std::vector<std::string> warnings;
  if (points.size() == 2) warnings.push_back("exact fit: only two points");
  if (model.a >= 0.0) {
    warnings.push_back("slope is not negative: acuity does not improve with scale");
  }
  for (TargetRow& row : rows) {
    try {
      row.scale = scale_for_target(model, PrintSize{row.target_logmar});
    } catch (const DomainError& e) {
      throw InputError(file.name + ": " + e.what());
    }
    if (row.scale.clamped) {
      warnings.push_back("target " + csv::format_sig6(row.target_logmar) +
                         " unreachable within (0, 1]; scale clamped");
    }
  }

  std::filesystem::create_directories(args.out_dir);
  const std::filesystem::path dir(args.out_dir);
  csv::write_file((dir / "calibration_model.json").string(),
                  calibration_json(model, warnings));
  csv::write_file((dir / "calibration_targets.csv").string(), targets_csv(rows));
  out << "a=" << csv::format_sig6(model.a) << " b=" << csv::format_sig6(model.b)
      << " r2=" << csv::format_sig6(model.r2) << " -> " << args.out_dir << "\n";
  return kExitSuccess;
}

struct ScheduleArgs {
  long long participants = 0;
  std::string conditions = "all";
  std::optional<std::string> out;
};

int run_schedule(const ScheduleArgs& args, std::ostream& out) {
  if (args.participants < 1) throw UsageError("--participants must be at least 1");
  std::vector<Condition> conditions;
  if (args.conditions == "all") {
    conditions = full_design();
  } else {
    std::string_view text = args.conditions;
    while (true) {
      const auto comma = text.find(',');
      const auto condition = Condition::parse_label(text.substr(0, comma));
      if (!condition) {
        throw UsageError("malformed condition '" +
                         std::string(text.substr(0, comma)) +
                         "' (expected LANG:DISPLAY[:LEVEL], e.g. EN:VR:A)");
      }
      if (std::find(conditions.begin(), conditions.end(), *condition) !=
          conditions.end()) {
        throw UsageError("condition listed twice: " + condition->label());
      }
      conditions.push_back(*condition);
      if (comma == std::string_view::npos) break;
      text = text.substr(comma + 1);
    }
  }
  emit(args.out,
       schedule_csv(build_schedule(static_cast<std::size_t>(args.participants),
                                   conditions)),
       out);
  return kExitSuccess;
}

struct SsqArgs {
  std::string input;
  std::optional<std::string> out;
};

int run_ssq(const SsqArgs& args, std::ostream& out) {
  const NamedInput file = load(args.input);
  std::vector<SsqRecord> records;
  try {
    records = import_ssq_csv(file.contents);
  } catch (const ParseError& e) {
    throw InputError(located(file.name, e));
  }
  emit(args.out, export_ssq_csv(records), out);
  return kExitSuccess;
}

struct FitArgs {
  std::string input;
  std::string out_dir;
  bool no_offset = false;
};

int run_fit(const FitArgs& args, std::ostream& out) {
  const NamedInput file = load(args.input);
  std::vector<CurveRecord> records;
  try {
    const csv::Table table = csv::Table::from_text(file.contents);
    const std::vector<std::string> columns = {"metric", "language", "display",
                                              "x", "y"};
    table.require_columns(columns, columns);
    for (const csv::Record& row : table.rows()) {
      const std::string& metric = table.field(row, "metric");
      const std::string& language = table.field(row, "language");
      const std::string& display = table.field(row, "display");
      const CurveSample sample{
          csv::parse_double(table.field(row, "x"), row.line, "x"),
          csv::parse_double(table.field(row, "y"), row.line, "y")};
      auto it = std::find_if(records.begin(), records.end(), [&](const auto& r) {
        return r.metric == metric && r.language == language &&
               r.display == display;
      });
      if (it == records.end()) {
        records.push_back({metric, language, display, {}, {}});
        it = records.end() - 1;
      }
      it->samples.push_back(sample);
    }
  } catch (const ParseError& e) {
    throw InputError(located(file.name, e));
  }
  for (CurveRecord& record : records) {
    try {
      record.curve = fit_exp(record.samples, !args.no_offset);
    } catch (const std::exception& e) {
      throw InputError(file.name + ": " + record.metric + " " + record.language +
                       " " + record.display + ": " + e.what());
    }
  }
  std::filesystem::create_directories(args.out_dir);
  const std::filesystem::path dir(args.out_dir);
  csv::write_file((dir / "curves.json").string(), curves_json(records));
  for (const CurveRecord& record : records) {
    csv::write_file((dir / plot_file_name(record)).string(), plot_csv(record));
  }
  out << "fitted " << records.size() << " curve(s) -> " << args.out_dir << "\n";
  return kExitSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Reading-acuity session analysis toolkit", "readacuity"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  AnalyzeArgs analyze_args;
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "Score sessions, run resolution statistics, fit curves");
  analyze_cmd->add_option("sessions", analyze_args.sessions, "Session CSV files")
      ->required();
  analyze_cmd->add_option("--ssq", analyze_args.ssq,
                          "SSQ CSV files (phase DISPLAY_LEVEL, e.g. VR_A)");
  analyze_cmd->add_option("--out-dir", analyze_args.out_dir, "Output directory")
      ->required();
  analyze_cmd->add_option("--config", analyze_args.config, "Config file");
  analyze_cmd->add_option("--cps-method", analyze_args.cps_method,
                          "fraction | sd");
  analyze_cmd->add_option("--p", analyze_args.p, "CPS fraction in [0.80, 1.00]");
  auto* exact = analyze_cmd->add_flag("--exact", analyze_args.exact,
                                      "Exact Wilcoxon p-values");
  auto* approx = analyze_cmd->add_flag("--approx", analyze_args.approx,
                                       "Normal-approximation Wilcoxon p-values");
  exact->excludes(approx);

  CalibrateArgs calibrate_args;
  auto* calibrate_cmd = app.add_subcommand(
      "calibrate", "Fit logMAR against render scale and solve target scales");
  calibrate_cmd->add_option("points", calibrate_args.points, "CSV: scale,logmar")
      ->required();
  calibrate_cmd->add_option("--targets", calibrate_args.targets,
                            "Comma-separated target logMAR values "
                            "(default: levels A-D)");
  calibrate_cmd->add_option("--out-dir", calibrate_args.out_dir, "Output directory")
      ->required();

  ScheduleArgs schedule_args;
  auto* schedule_cmd =
      app.add_subcommand("schedule", "Latin-square condition orders");
  schedule_cmd->add_option("--participants", schedule_args.participants)
      ->required();
  schedule_cmd->add_option("--conditions", schedule_args.conditions,
                           "'all' or LANG:DISPLAY[:LEVEL] list");
  schedule_cmd->add_option("--out", schedule_args.out, "Output CSV (default stdout)");

  SsqArgs ssq_args;
  auto* ssq_cmd = app.add_subcommand("ssq-score", "Score SSQ responses");
  ssq_cmd->add_option("input", ssq_args.input, "CSV with item_1..item_16")
      ->required();
  ssq_cmd->add_option("--out", ssq_args.out, "Output CSV (default stdout)");

  FitArgs fit_args;
  auto* fit_cmd =
      app.add_subcommand("fit-curves", "Fit y = a exp(b x) + c to point sets");
  fit_cmd->add_option("input", fit_args.input, "CSV: metric,language,display,x,y")
      ->required();
  fit_cmd->add_option("--out-dir", fit_args.out_dir, "Output directory")->required();
  fit_cmd->add_flag("--no-offset", fit_args.no_offset, "Fit y = a exp(b x)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (analyze_cmd->parsed()) return run_analyze(analyze_args, out);
    if (calibrate_cmd->parsed()) return run_calibrate(calibrate_args, out);
    if (schedule_cmd->parsed()) return run_schedule(schedule_args, out);
    if (ssq_cmd->parsed()) return run_ssq(ssq_args, out);
    if (fit_cmd->parsed()) return run_fit(fit_args, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitUsage;
}

}  // namespace readacuity::cli
