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

#include "cnarg/scheme.h"

#include <algorithm>
#include <tuple>
#include <utility>

#include "cnarg/error.h"

namespace cnarg {
namespace {

bool Overlaps(const Fragment &a, const Fragment &b) {
  return a.start < b.end && b.start < a.end;
}

bool AnyOverlap(const std::vector<const Component *> &xs,
                const std::vector<const Component *> &ys) {
  for (const Component *x : xs) {
    for (const Component *y : ys) {
      for (const Fragment &fx : x->fragments) {
        for (const Fragment &fy : y->fragments) {
          if (Overlaps(fx, fy)) return true;
        }
      }
    }
  }
  return false;
}

bool Contains(const Component &c, const Fragment &f) {
  for (const Fragment &g : c.fragments) {
    if (g.start <= f.start && f.end <= g.end) return true;
  }
  return false;
}

bool IsBlank(std::string_view s) {
  return s.find_first_not_of(" \t\r\n") == std::string_view::npos;
}

std::string FragmentsText(const std::vector<Fragment> &fragments) {
  std::string out;
  for (const Fragment &f : fragments) {
    if (!out.empty()) out += ';';
    out += std::to_string(f.start) + "-" + std::to_string(f.end);
  }
  return out;
}

}  // namespace

std::string_view ComponentKindName(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kJustification: return "Justification";
    case ComponentKind::kConclusion: return "Conclusion";
    case ComponentKind::kCollective: return "Collective";
    case ComponentKind::kProperty: return "Property";
    case ComponentKind::kPivotJustificationSide: return "PivotJustificationSide";
    case ComponentKind::kPivotConclusionSide: return "PivotConclusionSide";
  }
  return "";
}

std::optional<ComponentKind> ComponentKindFromName(std::string_view name) {
  for (ComponentKind kind : kAllComponentKinds) {
    if (ComponentKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view PropositionTypeName(PropositionType type) {
  switch (type) {
    case PropositionType::kPolicy: return "Policy";
    case PropositionType::kFact: return "Fact";
    case PropositionType::kValue: return "Value";
  }
  return "";
}

std::optional<PropositionType> PropositionTypeFromName(std::string_view name) {
  if (name == "Policy") return PropositionType::kPolicy;
  if (name == "Fact") return PropositionType::kFact;
  if (name == "Value") return PropositionType::kValue;
  return std::nullopt;
}

std::string_view CnTypeName(CnType type) {
  switch (type) {
    case CnType::kA: return "A";
    case CnType::kB: return "B";
    case CnType::kC: return "C";
    case CnType::kD: return "D";
  }
  return "";
}

std::string_view IssueCodeName(IssueCode code) {
  switch (code) {
    case IssueCode::kUnknownLabel: return "UnknownLabel";
    case IssueCode::kMissingJustification: return "MissingJustification";
    case IssueCode::kDuplicateJustification: return "DuplicateJustification";
    case IssueCode::kMissingConclusion: return "MissingConclusion";
    case IssueCode::kDuplicateConclusion: return "DuplicateConclusion";
    case IssueCode::kEmptyComponent: return "EmptyComponent";
    case IssueCode::kMissingJustificationType: return "MissingJustificationType";
    case IssueCode::kMissingConclusionType: return "MissingConclusionType";
    case IssueCode::kNonArgumentativeHasComponents:
      return "NonArgumentativeHasComponents";
    case IssueCode::kNonArgumentativeHasTypes: return "NonArgumentativeHasTypes";
    case IssueCode::kNonArgumentativeHasCounterNarratives:
      return "NonArgumentativeHasCounterNarratives";
    case IssueCode::kUnpairedCollective: return "UnpairedCollective";
    case IssueCode::kUnpairedProperty: return "UnpairedProperty";
    case IssueCode::kIncompletePivot: return "IncompletePivot";
    case IssueCode::kDuplicatePivotSide: return "DuplicatePivotSide";
    case IssueCode::kJustificationConclusionOverlap:
      return "JustificationConclusionOverlap";
    case IssueCode::kComponentOutsideArgument: return "ComponentOutsideArgument";
    case IssueCode::kPropertyCollectiveOverlap: return "PropertyCollectiveOverlap";
    case IssueCode::kEmptyCounterNarrative: return "EmptyCounterNarrative";
    case IssueCode::kTypeBWithoutProperty: return "TypeBWithoutProperty";
  }
  return "";
}

std::vector<const Component *> AnnotatedTweet::ComponentsOf(
    ComponentKind kind) const {
  std::vector<const Component *> out;
  for (const Component &c : components) {
    if (c.kind == kind) out.push_back(&c);
  }
  return out;
}

bool AnnotatedTweet::Has(ComponentKind kind) const {
  return std::any_of(components.begin(), components.end(),
                     [kind](const Component &c) { return c.kind == kind; });
}

bool AnnotatedTweet::HasPivot() const {
  return Has(ComponentKind::kPivotJustificationSide) ||
         Has(ComponentKind::kPivotConclusionSide);
}

std::string ComponentSurface(const Document &doc, const Component &component) {
  return JoinedSurface(doc, component.fragments);
}

AnnotatedTweet FromRaw(const Document &doc, std::span<const RawAnnotation> raw,
                       const LabelMapping &mapping) {
  AnnotatedTweet tweet{doc, false, {}, std::nullopt, std::nullopt, {}};
  bool marked_argumentative = false;
  bool marked_non_argumentative = false;
  std::vector<const RawAnnotation *> pivots;

  auto read_type = [&](const RawAnnotation &ann, const std::string &attr,
                       std::optional<PropositionType> *slot) {
    auto it = ann.attributes.find(attr);
    if (it == ann.attributes.end()) return;
    auto value = mapping.type_values.find(it->second);
    if (value == mapping.type_values.end()) {
      throw Error(ErrorCode::kUnknownLabel, doc.id() + " " + ann.ann_id +
                                                ": unmapped type value '" +
                                                it->second + "'");
    }
    *slot = value->second;
  };

  for (const RawAnnotation &ann : raw) {
    auto rule = mapping.span_labels.find(ann.label);
    if (rule == mapping.span_labels.end()) {
      throw Error(ErrorCode::kUnknownLabel,
                  doc.id() + " " + ann.ann_id + ": no mapping for label '" +
                      ann.label + "'");
    }
    switch (rule->second.target) {
      case LabelMapping::Target::kComponent: {
        const ComponentKind kind = rule->second.kind;
        tweet.components.push_back({kind, ann.fragments});
        for (const std::string &attr : mapping.type_attributes) {
          if (kind == ComponentKind::kJustification) {
            read_type(ann, attr, &tweet.justification_type);
          } else if (kind == ComponentKind::kConclusion) {
            read_type(ann, attr, &tweet.conclusion_type);
          }
        }
        break;
      }
      case LabelMapping::Target::kPivot:
        pivots.push_back(&ann);
        break;
      case LabelMapping::Target::kArgumentative:
        marked_argumentative = true;
        break;
      case LabelMapping::Target::kNonArgumentative:
        marked_non_argumentative = true;
        break;
      case LabelMapping::Target::kIgnore:
        break;
    }
    for (const std::string &attr : mapping.justification_type_attributes) {
      read_type(ann, attr, &tweet.justification_type);
    }
    for (const std::string &attr : mapping.conclusion_type_attributes) {
      read_type(ann, attr, &tweet.conclusion_type);
    }
    for (const Note &note : ann.notes) {
      auto type = mapping.note_types.find(note.type);
      if (type != mapping.note_types.end()) {
        tweet.counter_narratives.push_back({type->second, note.text});
      }
    }
  }

  // Undifferentiated pivot spans: each fragment goes to the side whose
  // premise contains it. Fragments inside neither default to the
  // justification side and are reported by validation.
  const auto conclusions = tweet.ComponentsOf(ComponentKind::kConclusion);
  std::vector<Component> pivot_components;
  for (const RawAnnotation *ann : pivots) {
    Component just_side{ComponentKind::kPivotJustificationSide, {}};
    Component conc_side{ComponentKind::kPivotConclusionSide, {}};
    for (const Fragment &f : ann->fragments) {
      const bool in_conclusion =
          std::any_of(conclusions.begin(), conclusions.end(),
                      [&f](const Component *c) { return Contains(*c, f); });
      (in_conclusion ? conc_side : just_side).fragments.push_back(f);
    }
    if (!just_side.fragments.empty()) pivot_components.push_back(just_side);
    if (!conc_side.fragments.empty()) pivot_components.push_back(conc_side);
  }
  for (Component &c : pivot_components) tweet.components.push_back(std::move(c));

  const bool has_content = !tweet.components.empty() ||
                           tweet.justification_type.has_value() ||
                           tweet.conclusion_type.has_value();
  tweet.argumentative =
      !marked_non_argumentative && (marked_argumentative || has_content);
  return tweet;
}

std::vector<ValidationIssue> CheckLabels(const Document &doc,
                                         std::span<const RawAnnotation> raw,
                                         const LabelMapping &mapping) {
  std::vector<ValidationIssue> issues;
  for (const RawAnnotation &ann : raw) {
    if (!mapping.span_labels.contains(ann.label)) {
      issues.push_back({doc.id(), IssueCode::kUnknownLabel,
                        ann.ann_id + ": no mapping for label '" + ann.label + "'",
                        Severity::kError});
    }
  }
  return issues;
}

std::vector<RawAnnotation> ToRaw(const AnnotatedTweet &tweet) {
  const Document &doc = tweet.doc;
  std::vector<RawAnnotation> out;
  auto add_span = [&](std::string label, std::vector<Fragment> fragments) {
    RawAnnotation ann;
    ann.ann_id = "T" + std::to_string(out.size() + 1);
    ann.label = std::move(label);
    ann.surface = JoinedSurface(doc, fragments);
    ann.fragments = std::move(fragments);
    out.push_back(std::move(ann));
    return out.size() - 1;
  };
  // A one-character span over the first visible character carries document
  // level flags when no component can.
  auto marker_fragment = [&]() {
    size_t pos = 0;
    const std::u32string &cps = doc.code_points();
    while (pos < cps.size() && (cps[pos] == U' ' || cps[pos] == U'\n' ||
                                cps[pos] == U'\t' || cps[pos] == U'\r')) {
      ++pos;
    }
    if (pos == cps.size()) pos = 0;
    return std::vector<Fragment>{{pos, pos + 1}};
  };

  std::optional<size_t> just_host;
  std::optional<size_t> conc_host;
  for (const Component &c : tweet.components) {
    const size_t idx = add_span(std::string(ComponentKindName(c.kind)), c.fragments);
    if (c.kind == ComponentKind::kJustification && !just_host) just_host = idx;
    if (c.kind == ComponentKind::kConclusion && !conc_host) conc_host = idx;
  }
  const bool derived_argumentative = !tweet.components.empty() ||
                                     tweet.justification_type.has_value() ||
                                     tweet.conclusion_type.has_value();
  const bool need_host = (tweet.justification_type && !just_host) ||
                         (tweet.conclusion_type && !conc_host) ||
                         (!tweet.counter_narratives.empty() && out.empty());
  std::optional<size_t> marker;
  if (derived_argumentative != tweet.argumentative || need_host) {
    marker = add_span(tweet.argumentative ? "Argumentative" : "NonArgumentative",
                      marker_fragment());
  }
  if (tweet.justification_type) {
    if (just_host) {
      out[*just_host].attributes["Type"] =
          std::string(PropositionTypeName(*tweet.justification_type));
    } else {
      out[*marker].attributes["JustificationType"] =
          std::string(PropositionTypeName(*tweet.justification_type));
    }
  }
  if (tweet.conclusion_type) {
    if (conc_host) {
      out[*conc_host].attributes["Type"] =
          std::string(PropositionTypeName(*tweet.conclusion_type));
    } else {
      out[*marker].attributes["ConclusionType"] =
          std::string(PropositionTypeName(*tweet.conclusion_type));
    }
  }
  if (!tweet.counter_narratives.empty()) {
    const size_t host = conc_host ? *conc_host : 0;
    for (const CounterNarrative &cn : tweet.counter_narratives) {
      out[host].notes.push_back(
          {"CN-" + std::string(CnTypeName(cn.type)), cn.text});
    }
  }
  return out;
}

std::vector<ValidationIssue> Validate(const AnnotatedTweet &tweet) {
  std::vector<ValidationIssue> issues;
  auto report = [&](IssueCode code, std::string message,
                    Severity severity = Severity::kError) {
    issues.push_back({tweet.id(), code, std::move(message), severity});
  };

  for (const Component &c : tweet.components) {
    if (c.fragments.empty()) {
      report(IssueCode::kEmptyComponent,
             std::string(ComponentKindName(c.kind)) + " has no fragments");
    }
  }
  for (const CounterNarrative &cn : tweet.counter_narratives) {
    if (IsBlank(cn.text)) {
      report(IssueCode::kEmptyCounterNarrative,
             "counter-narrative of type " + std::string(CnTypeName(cn.type)) +
                 " is empty");
    }
  }

  if (!tweet.argumentative) {
    if (!tweet.components.empty()) {
      report(IssueCode::kNonArgumentativeHasComponents,
             std::to_string(tweet.components.size()) +
                 " component(s) on a non-argumentative tweet");
    }
    if (tweet.justification_type || tweet.conclusion_type) {
      report(IssueCode::kNonArgumentativeHasTypes,
             "proposition type on a non-argumentative tweet");
    }
    if (!tweet.counter_narratives.empty()) {
      report(IssueCode::kNonArgumentativeHasCounterNarratives,
             std::to_string(tweet.counter_narratives.size()) +
                 " counter-narrative(s) on a non-argumentative tweet");
    }
  } else {
    const auto justifications = tweet.ComponentsOf(ComponentKind::kJustification);
    const auto conclusions = tweet.ComponentsOf(ComponentKind::kConclusion);
    const auto collectives = tweet.ComponentsOf(ComponentKind::kCollective);
    const auto properties = tweet.ComponentsOf(ComponentKind::kProperty);
    const auto pivot_j = tweet.ComponentsOf(ComponentKind::kPivotJustificationSide);
    const auto pivot_c = tweet.ComponentsOf(ComponentKind::kPivotConclusionSide);

    if (justifications.empty()) {
      report(IssueCode::kMissingJustification, "no Justification");
    } else if (justifications.size() > 1) {
      report(IssueCode::kDuplicateJustification,
             std::to_string(justifications.size()) + " Justification components");
    }
    if (conclusions.empty()) {
      report(IssueCode::kMissingConclusion, "no Conclusion");
    } else if (conclusions.size() > 1) {
      report(IssueCode::kDuplicateConclusion,
             std::to_string(conclusions.size()) + " Conclusion components");
    }
    if (!tweet.justification_type) {
      report(IssueCode::kMissingJustificationType, "Justification has no type");
    }
    if (!tweet.conclusion_type) {
      report(IssueCode::kMissingConclusionType, "Conclusion has no type");
    }
    if (!collectives.empty() && properties.empty()) {
      report(IssueCode::kUnpairedCollective, "Collective without Property");
    }
    if (!properties.empty() && collectives.empty()) {
      report(IssueCode::kUnpairedProperty, "Property without Collective");
    }
    if (pivot_j.empty() != pivot_c.empty()) {
      report(IssueCode::kIncompletePivot,
             pivot_j.empty() ? "pivot has no justification side"
                             : "pivot has no conclusion side");
    }
    if (pivot_j.size() > 1 || pivot_c.size() > 1) {
      report(IssueCode::kDuplicatePivotSide,
             std::to_string(pivot_j.size()) + " justification side(s), " +
                 std::to_string(pivot_c.size()) + " conclusion side(s)");
    }
    if (AnyOverlap(justifications, conclusions)) {
      report(IssueCode::kJustificationConclusionOverlap,
             "Justification and Conclusion overlap");
    }
    if (AnyOverlap(properties, collectives)) {
      report(IssueCode::kPropertyCollectiveOverlap,
             "Property overlaps Collective", Severity::kWarning);
    }

    std::vector<bool> covered(tweet.doc.length(), false);
    for (const auto *group : {&justifications, &conclusions}) {
      for (const Component *c : *group) {
        for (const Fragment &f : c->fragments) {
          for (size_t i = f.start; i < f.end && i < covered.size(); ++i) {
            covered[i] = true;
          }
        }
      }
    }
    for (const Component &c : tweet.components) {
      if (c.kind == ComponentKind::kJustification ||
          c.kind == ComponentKind::kConclusion) {
        continue;
      }
      const bool inside = std::all_of(
          c.fragments.begin(), c.fragments.end(), [&](const Fragment &f) {
            for (size_t i = f.start; i < f.end; ++i) {
              if (i >= covered.size() || !covered[i]) return false;
            }
            return true;
          });
      if (!inside) {
        report(IssueCode::kComponentOutsideArgument,
               std::string(ComponentKindName(c.kind)) + " at " +
                   FragmentsText(c.fragments) +
                   " lies outside Justification and Conclusion");
      }
    }

    if (properties.empty()) {
      for (const CounterNarrative &cn : tweet.counter_narratives) {
        if (cn.type == CnType::kB) {
          report(IssueCode::kTypeBWithoutProperty,
                 "type-B counter-narrative without explicit Property");
          break;
        }
      }
    }
  }

  std::sort(issues.begin(), issues.end(),
            [](const ValidationIssue &a, const ValidationIssue &b) {
              return std::tie(a.tweet_id, a.code, a.message) <
                     std::tie(b.tweet_id, b.code, b.message);
            });
  return issues;
}

std::vector<ValidationIssue> ValidateCorpus(std::span<const AnnotatedTweet> corpus) {
  std::vector<ValidationIssue> all;
  for (const AnnotatedTweet &tweet : corpus) {
    auto issues = Validate(tweet);
    all.insert(all.end(), issues.begin(), issues.end());
  }
  std::stable_sort(all.begin(), all.end(),
                   [](const ValidationIssue &a, const ValidationIssue &b) {
                     return std::tie(a.tweet_id, a.code, a.message) <
                            std::tie(b.tweet_id, b.code, b.message);
                   });
  return all;
}

bool HasErrors(std::span<const ValidationIssue> issues) {
  return std::any_of(issues.begin(), issues.end(), [](const ValidationIssue &i) {
    return i.severity == Severity::kError;
  });
}

}  // namespace cnarg
