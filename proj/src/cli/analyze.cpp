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

#include "readacuity/cli/analyze.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <functional>
#include <json.hpp>
#include <map>
#include <optional>
#include <set>
#include <tuple>

#include "readacuity/cli/hashing.hpp"
#include "readacuity/csv.hpp"
#include "readacuity/error.hpp"
#include "readacuity/session.hpp"

namespace readacuity::cli {

namespace {

using LevelValues = std::array<std::optional<double>, 4>;
// participant -> value at each level, participants in first-seen order
using FamilyTable = std::vector<std::pair<std::string, LevelValues>>;

constexpr std::array<Display, 2> kDisplays = {Display::kVR, Display::kVST};
constexpr std::array<Language, 2> kLanguages = {Language::kEN, Language::kCN};

struct MetricAccessor {
  std::string_view name;
  bool fit_curve;
  std::function<std::optional<double>(const ReadingMetrics&)> get;
};

const std::vector<MetricAccessor>& metric_accessors() {
  static const std::vector<MetricAccessor> accessors = {
      {"MRS", false, [](const ReadingMetrics& m) { return m.mrs_wpm; }},
      {"CPS", true,
       [](const ReadingMetrics& m) -> std::optional<double> {
         if (!m.cps) return std::nullopt;
         return m.cps->logmar;
       }},
      {"RA", true,
       [](const ReadingMetrics& m) -> std::optional<double> {
         if (!m.ra) return std::nullopt;
         return m.ra->logmar;
       }},
      {"ACC", true,
       [](const ReadingMetrics& m) -> std::optional<double> {
         return m.acc.value;
       }},
  };
  return accessors;
}

std::size_t level_index(ResolutionLevel level) {
  return static_cast<std::size_t>(level);
}

LevelValues& row_for(FamilyTable& table, const std::string& participant) {
  for (auto& [id, values] : table) {
    if (id == participant) return values;
  }
  table.emplace_back(participant, LevelValues{});
  return table.back().second;
}

std::string pair_label(std::size_t i, std::size_t j) {
  return std::string(to_string(kAllLevels[i])) + " vs. " +
         std::string(to_string(kAllLevels[j]));
}

// Friedman plus pairwise post hocs over participants complete on all four
// levels. Fewer than two such participants: skipped with a warning.
void test_family(const std::string& family, const std::string& metric,
                 const FamilyTable& table, const AnalysisConfig& config,
                 AnalysisBundle& bundle) {
  std::vector<std::vector<double>> rows;
  for (const auto& [id, values] : table) {
    if (std::all_of(values.begin(), values.end(),
                    [](const auto& v) { return v.has_value(); })) {
      std::vector<double> row;
      for (const auto& v : values) row.push_back(*v);
      rows.push_back(std::move(row));
    }
  }
  if (rows.size() < 2) {
    if (!table.empty()) {
      bundle.warnings.push_back(family + " " + metric +
                                ": fewer than two complete participants; "
                                "no tests run");
    }
    return;
  }
  const stats::RepeatedMeasures data(std::move(rows), {"A", "B", "C", "D"});
  bundle.friedman.push_back({family, metric, stats::friedman(data)});
  for (const auto& pair :
       stats::pairwise_wilcoxon(data, config.wilcoxon, config.bonferroni_m)) {
    bundle.posthoc.push_back(
        {family, metric, pair_label(pair.first, pair.second), pair.test});
  }
}

// Median per level over every available value, then an exponential fit.
void fit_family(const std::string& metric, const std::string& language,
                const std::string& display, const FamilyTable& table,
                bool with_offset, AnalysisBundle& bundle) {
  std::vector<CurveSample> samples;
  for (std::size_t level = 0; level < kAllLevels.size(); ++level) {
    std::vector<double> values;
    for (const auto& [id, row] : table) {
      if (row[level]) values.push_back(*row[level]);
    }
    if (values.empty()) {
      if (!table.empty()) {
        bundle.warnings.push_back(display + " " + language + " " + metric +
                                  ": level " +
                                  std::string(to_string(kAllLevels[level])) +
                                  " has no data; curve not fitted");
      }
      return;
    }
    samples.push_back({nominal_logmar(kAllLevels[level]), median(values)});
  }
  try {
    bundle.curves.push_back(
        {metric, language, display, fit_exp(samples, with_offset), samples});
  } catch (const FitError& e) {
    bundle.warnings.push_back(display + " " + language + " " + metric + ": " +
                              e.what());
  }
}

std::optional<std::pair<Display, ResolutionLevel>> parse_phase(
    std::string_view phase) {
  const auto underscore = phase.rfind('_');
  if (underscore == std::string_view::npos) return std::nullopt;
  const auto display = parse_display(phase.substr(0, underscore));
  const auto level = parse_level(phase.substr(underscore + 1));
  if (!display || !level || *display == Display::kNakedEye) return std::nullopt;
  return std::make_pair(*display, *level);
}

void analyze_ssq(AnalysisBundle& bundle, const AnalysisConfig& config) {
  struct Subscale {
    std::string_view name;
    double SsqScore::*field;
  };
  static constexpr std::array<Subscale, 4> kSubscales = {{
      {"Nausea", &SsqScore::nausea},
      {"Oculomotor", &SsqScore::oculomotor},
      {"Disorientation", &SsqScore::disorientation},
      {"TotalScore", &SsqScore::total},
  }};
  for (Display display : kDisplays) {
    std::array<FamilyTable, 4> tables;
    for (const SsqRecord& record : bundle.ssq) {
      const auto phase = parse_phase(record.phase);
      if (!phase || phase->first != display) continue;
      const SsqScore score = score_ssq(record.response);
      for (std::size_t s = 0; s < kSubscales.size(); ++s) {
        auto& cell = row_for(tables[s], record.participant_id)[level_index(phase->second)];
        if (cell) {
          throw InputError("duplicate SSQ entry for participant " +
                           record.participant_id + " phase " + record.phase);
        }
        cell = score.*(kSubscales[s].field);
      }
    }
    const std::string family(to_string(display));
    for (std::size_t s = 0; s < kSubscales.size(); ++s) {
      test_family(family, std::string(kSubscales[s].name), tables[s], config,
                  bundle);
    }
    fit_family("SSQ_TOTAL", "", family, tables[3], false, bundle);
  }
}

}  // namespace

double median(std::vector<double> values) {
  if (values.empty()) throw DomainError("median of an empty sample");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

AnalysisBundle analyze(const std::vector<NamedInput>& sessions,
                       const std::vector<NamedInput>& ssq,
                       const AnalysisConfig& config) {
  AnalysisBundle bundle;
  bundle.config = config;

  std::vector<Session> parsed;
  for (const NamedInput& input : sessions) {
    try {
      parsed.push_back(import_csv(input.contents));
    } catch (const ParseError& e) {
      throw InputError(input.name + ":" + std::to_string(e.row()) + ": " +
                       e.what());
    }
    if (parsed.back().trials.empty()) {
      throw InputError(input.name + ": session has no trials");
    }
    bundle.inputs.push_back({input.name, "session", sha256_hex(input.contents),
                             parsed.back().trials.size()});
  }
  for (const NamedInput& input : ssq) {
    std::vector<SsqRecord> records;
    try {
      records = import_ssq_csv(input.contents);
    } catch (const ParseError& e) {
      throw InputError(input.name + ":" + std::to_string(e.row()) + ": " +
                       e.what());
    }
    bundle.inputs.push_back(
        {input.name, "ssq", sha256_hex(input.contents), records.size()});
    for (SsqRecord& r : records) {
      if (!parse_phase(r.phase)) {
        bundle.warnings.push_back(input.name + ": SSQ phase '" + r.phase +
                                  "' is not DISPLAY_LEVEL; scored only");
      }
      bundle.ssq.push_back(std::move(r));
    }
  }

  // (display, language, metric) -> participant table
  std::map<std::tuple<int, int, std::size_t>, FamilyTable> families;
  std::set<std::pair<std::string, std::string>> seen;
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    const Session& session = parsed[i];
    const Condition& c = session.condition;
    if (!seen.insert({session.participant_id, c.label()}).second) {
      throw InputError(sessions[i].name + ": duplicate session for " +
                       session.participant_id + " " + c.label());
    }
    const ReadingMetrics metrics = compute_metrics(session, config.metrics);
    bundle.metrics.push_back({session.participant_id, c, metrics});
    bundle.metrics_source.push_back(sessions[i].name);
    if (!c.level) continue;
    for (std::size_t m = 0; m < metric_accessors().size(); ++m) {
      auto& table = families[{static_cast<int>(c.display),
                              static_cast<int>(c.language), m}];
      const auto value = metric_accessors()[m].get(metrics);
      row_for(table, session.participant_id)[level_index(*c.level)] = value;
      if (!value) {
        bundle.warnings.push_back(sessions[i].name + ": " +
                                  std::string(metric_accessors()[m].name) +
                                  " unmeasurable");
      }
    }
  }

  for (Display display : kDisplays) {
    const std::string family(to_string(display));
    for (std::size_t m = 0; m < metric_accessors().size(); ++m) {
      for (Language language : kLanguages) {
        const auto it = families.find(
            {static_cast<int>(display), static_cast<int>(language), m});
        if (it == families.end()) continue;
        const std::string metric = std::string(metric_accessors()[m].name) +
                                   " (" + std::string(to_string(language)) + ")";
        test_family(family, metric, it->second, config, bundle);
      }
    }
    for (std::size_t m = 0; m < metric_accessors().size(); ++m) {
      if (!metric_accessors()[m].fit_curve) continue;
      for (Language language : kLanguages) {
        const auto it = families.find(
            {static_cast<int>(display), static_cast<int>(language), m});
        if (it == families.end()) continue;
        fit_family(std::string(metric_accessors()[m].name),
                   std::string(to_string(language)), family, it->second, true,
                   bundle);
      }
    }
  }
  if (!bundle.ssq.empty()) analyze_ssq(bundle, config);
  return bundle;
}

std::string provenance_json(const AnalysisBundle& bundle) {
  nlohmann::ordered_json json;
  json["tool"] = kToolVersion;
  nlohmann::ordered_json config;
  for (const auto& [key, value] : describe(bundle.config)) config[key] = value;
  json["config"] = config;
  json["inputs"] = nlohmann::ordered_json::array();
  for (const InputSummary& input : bundle.inputs) {
    json["inputs"].push_back({{"name", input.name},
                              {"kind", input.kind},
                              {"sha256", input.sha256},
                              {"rows", input.rows}});
  }
  json["metrics_rows"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < bundle.metrics.size(); ++i) {
    json["metrics_rows"].push_back(
        {{"row", i + 2},
         {"source", bundle.metrics_source[i]},
         {"participant_id", bundle.metrics[i].participant_id},
         {"condition", bundle.metrics[i].condition.label()}});
  }
  json["warnings"] = bundle.warnings;
  return json.dump(2) + "\n";
}

void write_bundle(const AnalysisBundle& bundle, const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const fs::path dir(out_dir);
  csv::write_file((dir / "metrics.csv").string(), metrics_csv(bundle.metrics));
  csv::write_file((dir / "friedman.csv").string(), friedman_csv(bundle.friedman));
  csv::write_file((dir / "posthoc.csv").string(), posthoc_csv(bundle.posthoc));
  csv::write_file((dir / "curves.json").string(), curves_json(bundle.curves));
  for (const CurveRecord& record : bundle.curves) {
    csv::write_file((dir / plot_file_name(record)).string(), plot_csv(record));
  }
  if (!bundle.ssq.empty()) {
    csv::write_file((dir / "ssq_scores.csv").string(), export_ssq_csv(bundle.ssq));
  }
  csv::write_file((dir / "provenance.json").string(), provenance_json(bundle));
}

}  // namespace readacuity::cli
