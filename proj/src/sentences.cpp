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

#include "readacuity/sentences.hpp"

#include <cmath>
#include <map>
#include <set>

#include "readacuity/csv.hpp"
#include "readacuity/error.hpp"

namespace readacuity {

namespace {

constexpr double kStep = 0.1;
constexpr double kStepTolerance = 1e-9;

const std::vector<std::string> kColumns = {"language", "sentence_id", "logmar",
                                           "word_count", "text"};

}  // namespace

int nominal_word_count(Language language) {
  return language == Language::kEN ? kEnglishWords : kChineseCharacters;
}

SentenceSet parse_sentence_set(std::string_view csv_text) {
  const csv::Table table = csv::Table::from_text(csv_text);
  table.require_columns(kColumns, kColumns);
  SentenceSet set;
  bool first = true;
  for (const csv::Record& row : table.rows()) {
    const auto language = parse_language(table.field(row, "language"));
    if (!language) throw ParseError("unknown language", row.line);
    if (first) {
      set.language = *language;
      first = false;
    } else if (*language != set.language) {
      throw ParseError("mixed languages in one sentence set", row.line);
    }
    Sentence sentence;
    sentence.id = table.field(row, "sentence_id");
    sentence.size.logmar =
        csv::parse_double(table.field(row, "logmar"), row.line, "logmar");
    sentence.word_count = static_cast<int>(csv::parse_int(
        table.field(row, "word_count"), row.line, "word_count"));
    sentence.text = table.field(row, "text");
    if (!set.sentences.empty() &&
        !(sentence.size < set.sentences.back().size)) {
      throw ParseError("sizes must be strictly descending", row.line);
    }
    set.sentences.push_back(std::move(sentence));
  }
  try {
    validate_set(set);
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), 0);
  }
  return set;
}

std::string serialize_sentence_set(const SentenceSet& set) {
  std::string out = csv::join_row(kColumns);
  for (const Sentence& s : set.sentences) {
    out += csv::join_row({std::string(to_string(set.language)), s.id,
                          csv::format_exact(s.size.logmar),
                          std::to_string(s.word_count), s.text});
  }
  return out;
}

void validate_set(const SentenceSet& set) {
  if (set.sentences.empty()) throw ValidationError("sentence set is empty");
  std::set<std::string> ids;
  for (std::size_t i = 0; i < set.sentences.size(); ++i) {
    const Sentence& s = set.sentences[i];
    if (s.id.empty()) throw ValidationError("sentence id is empty");
    if (!ids.insert(s.id).second) {
      throw ValidationError("duplicate sentence id '" + s.id + "'");
    }
    if (s.word_count <= 0) {
      throw ValidationError("sentence '" + s.id + "' has no words");
    }
    if (s.text.empty()) {
      throw ValidationError("sentence '" + s.id + "' has no text");
    }
    if (!std::isfinite(s.size.logmar)) {
      throw ValidationError("sentence '" + s.id + "' has a non-finite size");
    }
    if (i > 0) {
      const double step = set.sentences[i - 1].size.logmar - s.size.logmar;
      if (std::abs(step - kStep) > kStepTolerance) {
        throw ValidationError("sentence '" + s.id +
                              "' breaks the 0.1 logMAR descending step");
      }
    }
  }
}

void validate_protocol_set(const SentenceSet& set) {
  validate_set(set);
  if (set.sentences.size() != static_cast<std::size_t>(kProtocolSentences)) {
    throw ValidationError("protocol set must hold 16 sentences");
  }
  if (std::abs(set.sentences.front().size.logmar - 1.0) > kStepTolerance ||
      std::abs(set.sentences.back().size.logmar + 0.5) > 1e-6) {
    throw ValidationError("protocol set must span 1.0 to -0.5 logMAR");
  }
  const int expected = nominal_word_count(set.language);
  for (const Sentence& s : set.sentences) {
    if (s.word_count != expected) {
      throw ValidationError("sentence '" + s.id + "' must have " +
                            std::to_string(expected) + " words");
    }
  }
}

void validate_corpus(const std::vector<SentenceSet>& sets) {
  std::map<Language, std::set<std::string>> seen;
  for (const SentenceSet& set : sets) {
    for (const Sentence& s : set.sentences) {
      if (!seen[set.language].insert(s.text).second) {
        throw ValidationError("sentence text repeats across sets: '" +
                              s.text + "'");
      }
    }
  }
}

}  // namespace readacuity
