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

#ifndef CNARG_SCHEME_H_
#define CNARG_SCHEME_H_

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cnarg/standoff_io.h"

namespace cnarg {

enum class ComponentKind {
  kJustification,
  kConclusion,
  kCollective,
  kProperty,
  kPivotJustificationSide,
  kPivotConclusionSide,
};

inline constexpr ComponentKind kAllComponentKinds[] = {
    ComponentKind::kJustification,          ComponentKind::kConclusion,
    ComponentKind::kCollective,             ComponentKind::kProperty,
    ComponentKind::kPivotJustificationSide, ComponentKind::kPivotConclusionSide,
};

std::string_view ComponentKindName(ComponentKind kind);
std::optional<ComponentKind> ComponentKindFromName(std::string_view name);

enum class PropositionType { kPolicy, kFact, kValue };

std::string_view PropositionTypeName(PropositionType type);
std::optional<PropositionType> PropositionTypeFromName(std::string_view name);

enum class CnType { kA, kB, kC, kD };

std::string_view CnTypeName(CnType type);  // "A".."D"

// Maps the labels, attribute names and note types found in annotation files
// onto the scheme. Loaded from a small JSON file so the ingest layer can be
// pointed at a corpus with different naming without code changes:
//
//   {
//     "span_labels": {"Premise1Conclusion": "Conclusion", "pivot": "Pivot",
//                     "NonArgumentative": "@non_argumentative", ...},
//     "type_attributes": ["Type"],
//     "justification_type_attributes": ["JustificationType"],
//     "conclusion_type_attributes": ["ConclusionType"],
//     "type_values": {"fact": "Fact", ...},
//     "note_types": {"CN-A": "A", ...},
//     "default_language": "EN",
//     "language_path_rules": [{"directory": "es", "language": "ES"}]
//   }
//
// A span label may map to a ComponentKind name, to "Pivot" (side chosen by
// containment in the Justification or Conclusion), or to one of the markers
// "@argumentative", "@non_argumentative", "@ignore". `type_attributes` are
// read from Justification and Conclusion spans; the two targeted lists are
// read from any span. A language rule applies when any directory of the
// document's path below the corpus root equals `directory` (ASCII
// case-insensitive); the first matching rule wins. Keys missing from the
// file keep their default values.
struct LabelMapping {
  enum class Target { kComponent, kPivot, kArgumentative, kNonArgumentative, kIgnore };
  struct Rule {
    Target target = Target::kIgnore;
    ComponentKind kind = ComponentKind::kJustification;
  };

  std::map<std::string, Rule> span_labels;
  std::vector<std::string> type_attributes;
  std::vector<std::string> justification_type_attributes;
  std::vector<std::string> conclusion_type_attributes;
  std::map<std::string, PropositionType> type_values;
  std::map<std::string, CnType> note_types;
  Language default_language = Language::kEnglish;
  std::vector<std::pair<std::string, Language>> language_path_rules;

  static LabelMapping Default();
  static LabelMapping FromJson(std::string_view json_text);
  static LabelMapping FromFile(const std::filesystem::path &path);
  std::string ToJson() const;

  Language LanguageForPath(const std::filesystem::path &path) const;
};

struct CounterNarrative {
  CnType type = CnType::kD;
  std::string text;

  bool operator==(const CounterNarrative &) const = default;
};

struct Component {
  ComponentKind kind = ComponentKind::kJustification;
  std::vector<Fragment> fragments;

  bool operator==(const Component &) const = default;
};

struct AnnotatedTweet {
  Document doc;
  bool argumentative = false;
  std::vector<Component> components;
  std::optional<PropositionType> justification_type;
  std::optional<PropositionType> conclusion_type;
  std::vector<CounterNarrative> counter_narratives;

  const std::string &id() const { return doc.id(); }

  std::vector<const Component *> ComponentsOf(ComponentKind kind) const;
  bool Has(ComponentKind kind) const;
  bool HasPivot() const;
};

// One code per checked rule.
enum class IssueCode {
  kUnknownLabel,
  kMissingJustification,
  kDuplicateJustification,
  kMissingConclusion,
  kDuplicateConclusion,
  kEmptyComponent,
  kMissingJustificationType,
  kMissingConclusionType,
  kNonArgumentativeHasComponents,
  kNonArgumentativeHasTypes,
  kNonArgumentativeHasCounterNarratives,
  kUnpairedCollective,
  kUnpairedProperty,
  kIncompletePivot,
  kDuplicatePivotSide,
  kJustificationConclusionOverlap,
  kComponentOutsideArgument,
  kPropertyCollectiveOverlap,
  kEmptyCounterNarrative,
  kTypeBWithoutProperty,
};

inline constexpr IssueCode kAllIssueCodes[] = {
    IssueCode::kUnknownLabel,
    IssueCode::kMissingJustification,
    IssueCode::kDuplicateJustification,
    IssueCode::kMissingConclusion,
    IssueCode::kDuplicateConclusion,
    IssueCode::kEmptyComponent,
    IssueCode::kMissingJustificationType,
    IssueCode::kMissingConclusionType,
    IssueCode::kNonArgumentativeHasComponents,
    IssueCode::kNonArgumentativeHasTypes,
    IssueCode::kNonArgumentativeHasCounterNarratives,
    IssueCode::kUnpairedCollective,
    IssueCode::kUnpairedProperty,
    IssueCode::kIncompletePivot,
    IssueCode::kDuplicatePivotSide,
    IssueCode::kJustificationConclusionOverlap,
    IssueCode::kComponentOutsideArgument,
    IssueCode::kPropertyCollectiveOverlap,
    IssueCode::kEmptyCounterNarrative,
    IssueCode::kTypeBWithoutProperty,
};

std::string_view IssueCodeName(IssueCode code);

enum class Severity { kError, kWarning };

struct ValidationIssue {
  std::string tweet_id;
  IssueCode code = IssueCode::kUnknownLabel;
  std::string message;
  Severity severity = Severity::kError;

  bool operator==(const ValidationIssue &) const = default;
};

// Builds the scheme view of one parsed tweet. Does not validate; throws
// Error(kUnknownLabel) for a span label or type value absent from `mapping`.
AnnotatedTweet FromRaw(const Document &doc, std::span<const RawAnnotation> raw,
                       const LabelMapping &mapping);

// Label-only pre-check used by the validate command: one kUnknownLabel issue
// per unmapped span label instead of an exception.
std::vector<ValidationIssue> CheckLabels(const Document &doc,
                                         std::span<const RawAnnotation> raw,
                                         const LabelMapping &mapping);

// Inverse of FromRaw using the canonical labels of LabelMapping::Default().
std::vector<RawAnnotation> ToRaw(const AnnotatedTweet &tweet);

// Empty iff every scheme invariant holds. Sorted by (tweet_id, code, message).
std::vector<ValidationIssue> Validate(const AnnotatedTweet &tweet);
std::vector<ValidationIssue> ValidateCorpus(std::span<const AnnotatedTweet> corpus);

bool HasErrors(std::span<const ValidationIssue> issues);

// Surface of a component: fragment slices joined by a single space.
std::string ComponentSurface(const Document &doc, const Component &component);

}  // namespace cnarg

#endif  // CNARG_SCHEME_H_
