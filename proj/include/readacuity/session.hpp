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

// Reading sessions: the descending-size trial sequence of one participant
// under one condition, and the CSV form they are logged in.

#ifndef READACUITY_SESSION_HPP_
#define READACUITY_SESSION_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "readacuity/condition.hpp"
#include "readacuity/sentences.hpp"
#include "readacuity/units.hpp"

namespace readacuity {

// UTC wall-clock milliseconds.
using TimestampMs = std::int64_t;

struct TrialRecord {
  std::string sentence_id;
  PrintSize size;
  int word_count = 0;
  int errors = 0;
  TimestampMs start_ts_ms = 0;
  TimestampMs end_ts_ms = 0;

  // Always derived from the timestamps.
  double duration_s() const {
    return static_cast<double>(end_ts_ms - start_ts_ms) / 1000.0;
  }
  bool unreadable() const { return errors == word_count; }

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

struct Session {
  std::string participant_id;
  Condition condition;
  ViewingDistance viewing_distance{kStandardDistanceCm};
  std::vector<TrialRecord> trials;
  // Set when the last trial had every word missed.
  bool stopped_early = false;

  friend bool operator==(const Session&, const Session&) = default;
};

// Checks every session and trial invariant: 0 <= e <= n, positive
// durations, non-overlapping trials in time order, strictly descending
// sizes, nothing after an unreadable trial, `stopped_early` consistent with
// the final trial. Throws ValidationError.
void validate(const Session& session);

// Drives one session through a sentence set: the largest unread sentence is
// presented, the examiner's advance closes it, and the run ends when a
// sentence is wholly missed or the set is exhausted. Single-threaded.
class SessionRunner {
 public:
  // `session` supplies participant, condition, and distance; it must have
  // no trials yet. The set language must match the condition language.
  SessionRunner(SentenceSet set, Session session);

  bool finished() const;
  // The sentence awaiting presentation. Throws std::logic_error when
  // finished.
  const Sentence& current() const;

  // Records the current sentence shown from `start` to `end` with `errors`
  // word errors and advances to the next smaller size.
  void run_trial(TimestampMs start, TimestampMs end, int errors);

  // Corrects the error tally of the most recent trial (examiners may score
  // after the advance). Fully missed => session stops; lowering a stopping
  // trial's count reopens the session.
  void amend_last_errors(int errors);

  const Session& session() const { return session_; }
  const SentenceSet& sentence_set() const { return set_; }

 private:
  SentenceSet set_;
  Session session_;
  std::size_t next_ = 0;
};

// Session CSV, one session per file:
// participant_id,language,display,resolution_level,viewing_distance_cm,
// sentence_id,logmar,word_count,errors,start_ts_ms,end_ts_ms,duration_s
inline constexpr std::string_view kSessionCsvHeader =
    "participant_id,language,display,resolution_level,viewing_distance_cm,"
    "sentence_id,logmar,word_count,errors,start_ts_ms,end_ts_ms,duration_s";

// An empty session serializes to the header row alone.
std::string export_csv(const Session& session);

// Inverse of export_csv. Unknown or missing columns, malformed values,
// rows disagreeing on participant/condition/distance, and any invariant
// violation throw ParseError carrying the offending row.
Session import_csv(std::string_view text);

}  // namespace readacuity

#endif  // READACUITY_SESSION_HPP_
