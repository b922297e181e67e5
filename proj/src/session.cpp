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

#include "readacuity/session.hpp"

#include <cmath>
#include <stdexcept>

#include "readacuity/csv.hpp"
#include "readacuity/error.hpp"

namespace readacuity {

namespace {

const std::vector<std::string> kColumns = {
    "participant_id", "language",    "display",    "resolution_level",
    "viewing_distance_cm", "sentence_id", "logmar", "word_count",
    "errors",         "start_ts_ms", "end_ts_ms",  "duration_s"};

void validate_trial(const TrialRecord& trial) {
  if (trial.word_count <= 0) {
    throw ValidationError("word count must be positive");
  }
  if (trial.errors < 0 || trial.errors > trial.word_count) {
    throw ValidationError("errors must lie in [0, word_count]");
  }
  if (trial.end_ts_ms <= trial.start_ts_ms) {
    throw ValidationError("trial must end after it starts");
  }
  if (!std::isfinite(trial.size.logmar)) {
    throw ValidationError("print size must be finite");
  }
}

}  // namespace

void validate(const Session& session) {
  const Condition& c = session.condition;
  if ((c.display == Display::kNakedEye) == c.level.has_value()) {
    throw ValidationError("condition level does not match display");
  }
  for (std::size_t i = 0; i < session.trials.size(); ++i) {
    const TrialRecord& trial = session.trials[i];
    validate_trial(trial);
    if (i == 0) continue;
    const TrialRecord& previous = session.trials[i - 1];
    if (previous.unreadable()) {
      throw ValidationError("no trial may follow a fully missed sentence");
    }
    if (!(trial.size < previous.size)) {
      throw ValidationError("trial sizes must be strictly descending");
    }
    if (trial.start_ts_ms < previous.end_ts_ms) {
      throw ValidationError("trials overlap or go back in time");
    }
  }
  const bool ends_unreadable =
      !session.trials.empty() && session.trials.back().unreadable();
  if (session.stopped_early != ends_unreadable) {
    throw ValidationError(
        "stopped_early must be set exactly when the last trial is unreadable");
  }
}

SessionRunner::SessionRunner(SentenceSet set, Session session)
    : set_(std::move(set)), session_(std::move(session)) {
  validate_set(set_);
  if (set_.language != session_.condition.language) {
    throw ValidationError("sentence set language differs from condition");
  }
  if (!session_.trials.empty() || session_.stopped_early) {
    throw ValidationError("runner needs a fresh session");
  }
}

bool SessionRunner::finished() const {
  return session_.stopped_early || next_ >= set_.sentences.size();
}

const Sentence& SessionRunner::current() const {
  if (finished()) throw std::logic_error("session is finished");
  return set_.sentences[next_];
}

void SessionRunner::run_trial(TimestampMs start, TimestampMs end, int errors) {
  if (finished()) throw ValidationError("session already finished");
  const Sentence& sentence = current();
  TrialRecord trial{sentence.id, sentence.size, sentence.word_count,
                    errors,      start,         end};
  validate_trial(trial);
  if (!session_.trials.empty() && start < session_.trials.back().end_ts_ms) {
    throw ValidationError("trial starts before the previous one ended");
  }
  session_.trials.push_back(std::move(trial));
  session_.stopped_early = session_.trials.back().unreadable();
  ++next_;
}

void SessionRunner::amend_last_errors(int errors) {
  if (session_.trials.empty()) throw ValidationError("no trial to amend");
  TrialRecord& last = session_.trials.back();
  if (errors < 0 || errors > last.word_count) {
    throw ValidationError("errors must lie in [0, word_count]");
  }
  last.errors = errors;
  session_.stopped_early = last.unreadable();
}

std::string export_csv(const Session& session) {
  std::string out(kSessionCsvHeader);
  out += '\n';
  const Condition& c = session.condition;
  const std::string level = c.level ? std::string(to_string(*c.level)) : "";
  for (const TrialRecord& t : session.trials) {
    out += csv::join_row({session.participant_id,
                          std::string(to_string(c.language)),
                          std::string(to_string(c.display)),
                          level,
                          csv::format_exact(session.viewing_distance.cm()),
                          t.sentence_id,
                          csv::format_exact(t.size.logmar),
                          std::to_string(t.word_count),
                          std::to_string(t.errors),
                          std::to_string(t.start_ts_ms),
                          std::to_string(t.end_ts_ms),
                          csv::format_exact(t.duration_s())});
  }
  return out;
}

Session import_csv(std::string_view text) {
  const csv::Table table = csv::Table::from_text(text);
  table.require_columns(kColumns, kColumns);
  Session session;
  for (std::size_t i = 0; i < table.rows().size(); ++i) {
    const csv::Record& row = table.rows()[i];
    const std::size_t line = row.line;
    auto field = [&](std::string_view name) -> const std::string& {
      return table.field(row, name);
    };

    const auto language = parse_language(field("language"));
    const auto display = parse_display(field("display"));
    if (!language) throw ParseError("unknown language", line);
    if (!display) throw ParseError("unknown display", line);
    std::optional<ResolutionLevel> level;
    if (!field("resolution_level").empty()) {
      level = parse_level(field("resolution_level"));
      if (!level) throw ParseError("unknown resolution level", line);
    }
    Condition condition;
    try {
      condition = Condition::make(*language, *display, level);
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line);
    }
    const double distance_cm = csv::parse_double(
        field("viewing_distance_cm"), line, "viewing_distance_cm");
    if (distance_cm <= 0.0) throw ParseError("distance must be positive", line);
    if (field("participant_id").empty()) {
      throw ParseError("participant_id is required", line);
    }

    if (i == 0) {
      session.participant_id = field("participant_id");
      session.condition = condition;
      session.viewing_distance = ViewingDistance(distance_cm);
    } else if (field("participant_id") != session.participant_id ||
               !(condition == session.condition) ||
               distance_cm != session.viewing_distance.cm()) {
      throw ParseError("row disagrees with the session's participant, "
                       "condition or distance",
                       line);
    }

    TrialRecord trial;
    trial.sentence_id = field("sentence_id");
    if (trial.sentence_id.empty()) {
      throw ParseError("sentence_id is required", line);
    }
    trial.size.logmar = csv::parse_double(field("logmar"), line, "logmar");
    trial.word_count = static_cast<int>(
        csv::parse_int(field("word_count"), line, "word_count"));
    trial.errors =
        static_cast<int>(csv::parse_int(field("errors"), line, "errors"));
    trial.start_ts_ms = csv::parse_int(field("start_ts_ms"), line, "start_ts_ms");
    trial.end_ts_ms = csv::parse_int(field("end_ts_ms"), line, "end_ts_ms");
    const double duration =
        csv::parse_double(field("duration_s"), line, "duration_s");
    try {
      validate_trial(trial);
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line);
    }
    if (std::abs(duration - trial.duration_s()) > 0.001 + 1e-12) {
      throw ParseError("duration_s disagrees with timestamps", line);
    }

    session.trials.push_back(std::move(trial));
    session.stopped_early = session.trials.back().unreadable();
    try {
      validate(session);
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), line);
    }
  }
  return session;
}

}  // namespace readacuity
