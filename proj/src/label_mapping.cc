// Copyright 2026 The cnarg Authors.
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

#include <json.hpp>

#include "cnarg/error.h"
#include "cnarg/file_util.h"
#include "cnarg/scheme.h"
#include "cnarg/vocabulary.h"

namespace cnarg {
namespace {

using Json = nlohmann::json;

LabelMapping::Rule ParseRule(const std::string &label, const std::string &value) {
  using Target = LabelMapping::Target;
  if (value == "Pivot") return {Target::kPivot};
  if (value == "@argumentative") return {Target::kArgumentative};
  if (value == "@non_argumentative") return {Target::kNonArgumentative};
  if (value == "@ignore") return {Target::kIgnore};
  if (auto kind = ComponentKindFromName(value)) {
    return {Target::kComponent, *kind};
  }
  throw Error(ErrorCode::kInvalidArgument,
              "mapping for '" + label + "' has unknown target '" + value + "'");
}

std::string RuleName(const LabelMapping::Rule &rule) {
  using Target = LabelMapping::Target;
  switch (rule.target) {
    case Target::kComponent: return std::string(ComponentKindName(rule.kind));
    case Target::kPivot: return "Pivot";
    case Target::kArgumentative: return "@argumentative";
    case Target::kNonArgumentative: return "@non_argumentative";
    case Target::kIgnore: return "@ignore";
  }
  return "";
}

CnType ParseCnType(const std::string &value) {
  if (value == "A") return CnType::kA;
  if (value == "B") return CnType::kB;
  if (value == "C") return CnType::kC;
  if (value == "D") return CnType::kD;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown counter-narrative type '" + value + "'");
}

}  // namespace

LabelMapping LabelMapping::Default() {
  LabelMapping m;
  for (ComponentKind kind : kAllComponentKinds) {
    const std::string name(ComponentKindName(kind));
    m.span_labels[name] = {Target::kComponent, kind};
  }
  m.span_labels["Pivot"] = {Target::kPivot};
  m.span_labels["Argumentative"] = {Target::kArgumentative};
  m.span_labels["NonArgumentative"] = {Target::kNonArgumentative};
  m.type_attributes = {"Type"};
  m.justification_type_attributes = {"JustificationType"};
  m.conclusion_type_attributes = {"ConclusionType"};
  for (PropositionType t :
       {PropositionType::kPolicy, PropositionType::kFact, PropositionType::kValue}) {
    m.type_values[std::string(PropositionTypeName(t))] = t;
  }
  m.note_types = {{"CN-A", CnType::kA},
                  {"CN-B", CnType::kB},
                  {"CN-C", CnType::kC},
                  {"CN-D", CnType::kD}};
  m.language_path_rules = {{"es", Language::kSpanish}, {"spanish", Language::kSpanish}};
  return m;
}

LabelMapping LabelMapping::FromJson(std::string_view json_text) {
  LabelMapping m = Default();
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error &e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("mapping config: ") + e.what());
  }
  try {
    if (root.contains("span_labels")) {
      m.span_labels.clear();
      for (const auto &[label, target] : root["span_labels"].items()) {
        m.span_labels[label] = ParseRule(label, target.get<std::string>());
      }
    }
    if (root.contains("type_attributes")) {
      m.type_attributes = root["type_attributes"].get<std::vector<std::string>>();
    }
    if (root.contains("justification_type_attributes")) {
      m.justification_type_attributes =
          root["justification_type_attributes"].get<std::vector<std::string>>();
    }
    if (root.contains("conclusion_type_attributes")) {
      m.conclusion_type_attributes =
          root["conclusion_type_attributes"].get<std::vector<std::string>>();
    }
    if (root.contains("type_values")) {
      m.type_values.clear();
      for (const auto &[value, type] : root["type_values"].items()) {
        auto parsed = PropositionTypeFromName(type.get<std::string>());
        if (!parsed) {
          throw Error(ErrorCode::kInvalidArgument,
                      "unknown proposition type for '" + value + "'");
        }
        m.type_values[value] = *parsed;
      }
    }
    if (root.contains("note_types")) {
      m.note_types.clear();
      for (const auto &[note, type] : root["note_types"].items()) {
        m.note_types[note] = ParseCnType(type.get<std::string>());
      }
    }
    if (root.contains("default_language")) {
      m.default_language =
          ParseLanguageCode(root["default_language"].get<std::string>());
    }
    if (root.contains("language_path_rules")) {
      m.language_path_rules.clear();
      for (const auto &rule : root["language_path_rules"]) {
        m.language_path_rules.emplace_back(
            rule.at("directory").get<std::string>(),
            ParseLanguageCode(rule.at("language").get<std::string>()));
      }
    }
  } catch (const Json::exception &e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("mapping config: ") + e.what());
  }
  return m;
}

LabelMapping LabelMapping::FromFile(const std::filesystem::path &path) {
  return FromJson(ReadFile(path));
}

std::string LabelMapping::ToJson() const {
  Json root;
  root["span_labels"] = Json::object();
  for (const auto &[label, rule] : span_labels) {
    root["span_labels"][label] = RuleName(rule);
  }
  root["type_attributes"] = type_attributes;
  root["justification_type_attributes"] = justification_type_attributes;
  root["conclusion_type_attributes"] = conclusion_type_attributes;
  root["type_values"] = Json::object();
  for (const auto &[value, type] : type_values) {
    root["type_values"][value] = std::string(PropositionTypeName(type));
  }
  root["note_types"] = Json::object();
  for (const auto &[note, type] : note_types) {
    root["note_types"][note] = std::string(CnTypeName(type));
  }
  root["default_language"] = std::string(LanguageCode(default_language));
  root["language_path_rules"] = Json::array();
  for (const auto &[needle, lang] : language_path_rules) {
    root["language_path_rules"].push_back(
        {{"directory", needle}, {"language", std::string(LanguageCode(lang))}});
  }
  return root.dump(2) + "\n";
}

Language LabelMapping::LanguageForPath(const std::filesystem::path &path) const {
  for (const auto &[dir, lang] : language_path_rules) {
    for (const auto &part : path.parent_path()) {
      if (NormalizeToken(part.generic_string()) == NormalizeToken(dir)) return lang;
    }
  }
  return default_language;
}

}  // namespace cnarg
