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

#include "readacuity/condition.hpp"

#include "readacuity/error.hpp"

namespace readacuity {

double nominal_logmar(ResolutionLevel level) {
  switch (level) {
    case ResolutionLevel::kA:
      return 0.00;
    case ResolutionLevel::kB:
      return 0.22;
    case ResolutionLevel::kC:
      return 0.40;
    case ResolutionLevel::kD:
      return 0.60;
  }
  return 0.0;
}

std::string_view to_string(Language language) {
  return language == Language::kEN ? "EN" : "CN";
}

std::string_view to_string(Display display) {
  switch (display) {
    case Display::kVR:
      return "VR";
    case Display::kVST:
      return "VST";
    case Display::kNakedEye:
      return "NAKED_EYE";
  }
  return "";
}

std::string_view to_string(ResolutionLevel level) {
  switch (level) {
    case ResolutionLevel::kA:
      return "A";
    case ResolutionLevel::kB:
      return "B";
    case ResolutionLevel::kC:
      return "C";
    case ResolutionLevel::kD:
      return "D";
  }
  return "";
}

std::optional<Language> parse_language(std::string_view text) {
  if (text == "EN") return Language::kEN;
  if (text == "CN") return Language::kCN;
  return std::nullopt;
}

std::optional<Display> parse_display(std::string_view text) {
  if (text == "VR") return Display::kVR;
  if (text == "VST") return Display::kVST;
  if (text == "NAKED_EYE") return Display::kNakedEye;
  return std::nullopt;
}

std::optional<ResolutionLevel> parse_level(std::string_view text) {
  for (ResolutionLevel level : kAllLevels) {
    if (text == to_string(level)) return level;
  }
  return std::nullopt;
}

Condition Condition::make(Language language, Display display,
                          std::optional<ResolutionLevel> level) {
  if (display == Display::kNakedEye && level) {
    throw ValidationError("naked-eye condition cannot carry a resolution level");
  }
  if (display != Display::kNakedEye && !level) {
    throw ValidationError("VR/VST conditions require a resolution level");
  }
  return Condition{language, display, level};
}

std::string Condition::label() const {
  std::string out(to_string(language));
  out += ':';
  out += to_string(display);
  if (level) {
    out += ':';
    out += to_string(*level);
  }
  return out;
}

std::optional<Condition> Condition::parse_label(std::string_view text) {
  const auto first = text.find(':');
  if (first == std::string_view::npos) return std::nullopt;
  const auto language = parse_language(text.substr(0, first));
  const std::string_view rest = text.substr(first + 1);
  const auto second = rest.find(':');
  const auto display = parse_display(rest.substr(0, second));
  if (!language || !display) return std::nullopt;
  std::optional<ResolutionLevel> level;
  if (second != std::string_view::npos) {
    level = parse_level(rest.substr(second + 1));
    if (!level) return std::nullopt;
  }
  if ((*display == Display::kNakedEye) == level.has_value()) {
    return std::nullopt;
  }
  return Condition{*language, *display, level};
}

std::vector<Condition> full_design() {
  std::vector<Condition> out;
  for (Language language : {Language::kEN, Language::kCN}) {
    for (Display display : {Display::kVR, Display::kVST}) {
      for (ResolutionLevel level : kAllLevels) {
        out.push_back(Condition{language, display, level});
      }
    }
  }
  return out;
}

}  // namespace readacuity
