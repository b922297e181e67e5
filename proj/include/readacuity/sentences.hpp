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

// Sentence sets: one chart's worth of sentences in strictly descending
// print size. Sets are data files so the shipped placeholders can be
// swapped for licensed chart sentences.
//
// File format (CSV, UTF-8, header required):
//   language,sentence_id,logmar,word_count,text

#ifndef READACUITY_SENTENCES_HPP_
#define READACUITY_SENTENCES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "readacuity/condition.hpp"
#include "readacuity/units.hpp"

namespace readacuity {

struct Sentence {
  std::string id;
  PrintSize size;
  int word_count = 0;
  std::string text;
};

struct SentenceSet {
  Language language = Language::kEN;
  std::vector<Sentence> sentences;
};

inline constexpr int kEnglishWords = 10;
inline constexpr int kChineseCharacters = 12;
inline constexpr int kProtocolSentences = 16;  // 1.0 down to -0.5 logMAR

int nominal_word_count(Language language);

// Parses and validates (see `validate_set`). Throws ParseError with the
// offending row.
SentenceSet parse_sentence_set(std::string_view csv_text);
std::string serialize_sentence_set(const SentenceSet& set);

// Sizes strictly descending in 0.1 logMAR steps, positive word counts,
// unique ids, non-empty texts. Throws ValidationError.
void validate_set(const SentenceSet& set);

// `validate_set` plus the shipped protocol shape: 16 sentences spanning
// 1.0 to -0.5 logMAR, 10 words (EN) or 12 characters (CN) each.
void validate_protocol_set(const SentenceSet& set);

// No sentence text may repeat across sets of the same language.
void validate_corpus(const std::vector<SentenceSet>& sets);

}  // namespace readacuity

#endif  // READACUITY_SENTENCES_HPP_
