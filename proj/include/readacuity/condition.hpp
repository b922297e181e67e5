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

#ifndef READACUITY_CONDITION_HPP_
#define READACUITY_CONDITION_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace readacuity {

enum class Language { kEN, kCN };
enum class Display { kVR, kVST, kNakedEye };
enum class ResolutionLevel { kA, kB, kC, kD };

inline constexpr std::array<ResolutionLevel, 4> kAllLevels = {
    ResolutionLevel::kA, ResolutionLevel::kB, ResolutionLevel::kC,
    ResolutionLevel::kD};

// Nominal effective resolution of each level in logMAR. B is 0.22 (shown
// as "0.2" in short form).
double nominal_logmar(ResolutionLevel level);

std::string_view to_string(Language language);
std::string_view to_string(Display display);
std::string_view to_string(ResolutionLevel level);

// Parsers accept the canonical upper-case tokens ("EN", "VST", "NAKED_EYE",
// "B"); they return nullopt for anything else.
std::optional<Language> parse_language(std::string_view text);
std::optional<Display> parse_display(std::string_view text);
std::optional<ResolutionLevel> parse_level(std::string_view text);

// A test condition. Naked-eye conditions carry no resolution level; every
// other display requires one. Use `make` to enforce this.
struct Condition {
  Language language = Language::kEN;
  Display display = Display::kNakedEye;
  std::optional<ResolutionLevel> level;

  // Throws ValidationError when the level/display pairing is invalid.
  static Condition make(Language language, Display display,
                        std::optional<ResolutionLevel> level);

  // "EN:VR:A" or "CN:NAKED_EYE".
  std::string label() const;
  static std::optional<Condition> parse_label(std::string_view text);

  friend bool operator==(const Condition&, const Condition&) = default;
};

// The full within-subjects design: 2 languages x {VR, VST} x A..D.
std::vector<Condition> full_design();

}  // namespace readacuity

#endif  // READACUITY_CONDITION_HPP_
