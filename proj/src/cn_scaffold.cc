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

#include "cnarg/cn_scaffold.h"

#include <map>

#include <json.hpp>

#include "cnarg/error.h"
#include "cnarg/file_util.h"

namespace cnarg {
namespace {

using nlohmann::json;
using Slots = std::vector<std::pair<std::string, std::string>>;

void RequireArgumentative(const AnnotatedTweet &tweet) {
  if (!tweet.argumentative) {
    throw Error(ErrorCode::kNotArgumentative, tweet.id());
  }
}

// Surfaces of all components of `kind`, joined with " and ".
std::string JoinedKind(const AnnotatedTweet &tweet, ComponentKind kind) {
  std::string out;
  for (const Component *c : tweet.ComponentsOf(kind)) {
    if (!out.empty()) out += " and ";
    out += ComponentSurface(tweet.doc, *c);
  }
  return out;
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> SlotNames(const Slots &slots) {
  std::vector<std::string> names;
  for (const auto &[name, value] : slots) names.push_back(name);
  return names;
}

std::map<std::string, std::string ScaffoldTemplates::*> Fields() {
  return {{"type_a", &ScaffoldTemplates::type_a},
          {"type_a_pivot", &ScaffoldTemplates::type_a_pivot},
          {"type_b", &ScaffoldTemplates::type_b},
          {"type_b_no_collective", &ScaffoldTemplates::type_b_no_collective},
          {"type_c_fact", &ScaffoldTemplates::type_c_fact},
          {"type_c_value", &ScaffoldTemplates::type_c_value},
          {"type_c_policy", &ScaffoldTemplates::type_c_policy}};
}

}  // namespace

ScaffoldTemplates ScaffoldTemplates::Default() {
  ScaffoldTemplates t;
  t.type_a = "Even if \"{justification}\" were true, it would not follow that \"{conclusion}\".";
  t.type_a_pivot =
      " Being about \"{pivot_justification}\" does not make it about \"{pivot_conclusion}\".";
  t.type_b = "There is no evidence that \"{collective}\" are or cause \"{property}\".";
  t.type_b_no_collective =
      "There is no evidence that the people targeted here are or cause \"{property}\".";
  t.type_c_fact = "What is the source for the claim that \"{justification}\"?";
  t.type_c_value =
      "\"{justification}\" is an opinion, not a fact, and many people see it differently.";
  t.type_c_policy =
      "Instead of \"{justification}\", what policy would treat everyone with dignity?";
  return t;
}

ScaffoldTemplates ScaffoldTemplates::FromJson(std::string_view text) {
  ScaffoldTemplates t = Default();
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw Error(ErrorCode::kInvalidArgument, "templates: not an object");
    const auto fields = Fields();
    for (const auto &[key, value] : j.items()) {
      auto it = fields.find(key);
      if (it == fields.end()) {
        throw Error(ErrorCode::kInvalidArgument, "templates: unknown key " + key);
      }
      t.*(it->second) = value.get<std::string>();
    }
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("templates: ") + e.what());
  }
  return t;
}

ScaffoldTemplates ScaffoldTemplates::FromFile(const std::filesystem::path &path) {
  return FromJson(ReadFile(path));
}

std::string ScaffoldTemplates::ToJson() const {
  json j = json::object();
  for (const auto &[key, field] : Fields()) j[key] = this->*field;
  return j.dump(2) + "\n";
}

std::string FillTemplate(std::string_view tmpl,
                         std::span<const std::pair<std::string, std::string>> slots) {
  std::string out;
  size_t i = 0;
  while (i < tmpl.size()) {
    const size_t open = tmpl.find('{', i);
    if (open == std::string_view::npos) {
      out.append(tmpl.substr(i));
      break;
    }
    out.append(tmpl.substr(i, open - i));
    const size_t close = tmpl.find('}', open);
    if (close == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument, "unterminated slot in template");
    }
    const std::string_view name = tmpl.substr(open + 1, close - open - 1);
    bool found = false;
    for (const auto &[key, value] : slots) {
      if (key == name) {
        out += value;
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorCode::kInvalidArgument,
                  "template slot {" + std::string(name) + "} is not available here");
    }
    i = close + 1;
  }
  return out;
}

std::optional<Scaffold> ScaffoldTypeA(const AnnotatedTweet &tweet,
                                      const ScaffoldTemplates &templates) {
  RequireArgumentative(tweet);
  const std::string j = JoinedKind(tweet, ComponentKind::kJustification);
  const std::string c = JoinedKind(tweet, ComponentKind::kConclusion);
  if (Trim(j).empty() || Trim(c).empty()) return std::nullopt;
  Slots slots = {{"justification", j}, {"conclusion", c}};
  Scaffold s{CnType::kA, FillTemplate(templates.type_a, slots), {}};
  const std::string pj = JoinedKind(tweet, ComponentKind::kPivotJustificationSide);
  const std::string pc = JoinedKind(tweet, ComponentKind::kPivotConclusionSide);
  if (!Trim(pj).empty() && !Trim(pc).empty()) {
    const Slots pivot = {{"pivot_justification", pj}, {"pivot_conclusion", pc}};
    s.prompt += FillTemplate(templates.type_a_pivot, pivot);
    slots.insert(slots.end(), pivot.begin(), pivot.end());
  }
  s.slots_used = SlotNames(slots);
  return s;
}

std::optional<Scaffold> ScaffoldTypeB(const AnnotatedTweet &tweet,
                                      const ScaffoldTemplates &templates,
                                      std::vector<std::string> *warnings) {
  RequireArgumentative(tweet);
  if (!tweet.Has(ComponentKind::kProperty)) return std::nullopt;
  const std::string p = JoinedKind(tweet, ComponentKind::kProperty);
  if (Trim(p).empty()) {
    if (warnings) warnings->push_back(tweet.id() + ": Property is blank; no type B scaffold");
    return std::nullopt;
  }
  const std::string c = JoinedKind(tweet, ComponentKind::kCollective);
  Slots slots;
  std::string prompt;
  if (Trim(c).empty()) {
    slots = {{"property", p}};
    prompt = FillTemplate(templates.type_b_no_collective, slots);
  } else {
    slots = {{"collective", c}, {"property", p}};
    prompt = FillTemplate(templates.type_b, slots);
  }
  return Scaffold{CnType::kB, std::move(prompt), SlotNames(slots)};
}

std::optional<Scaffold> ScaffoldTypeC(const AnnotatedTweet &tweet,
                                      const ScaffoldTemplates &templates) {
  RequireArgumentative(tweet);
  if (!tweet.justification_type) {
    throw Error(ErrorCode::kMissingType, tweet.id() + ": justification type unset");
  }
  const std::string j = JoinedKind(tweet, ComponentKind::kJustification);
  if (Trim(j).empty()) return std::nullopt;
  const std::string *tmpl = nullptr;
  switch (*tweet.justification_type) {
    case PropositionType::kFact: tmpl = &templates.type_c_fact; break;
    case PropositionType::kValue: tmpl = &templates.type_c_value; break;
    case PropositionType::kPolicy: tmpl = &templates.type_c_policy; break;
  }
  const Slots slots = {{"justification", j}};
  return Scaffold{CnType::kC, FillTemplate(*tmpl, slots),
                  {"justification", "type:" + std::string(PropositionTypeName(
                                                  *tweet.justification_type))}};
}

ScaffoldBatch ScaffoldCorpus(std::span<const AnnotatedTweet> corpus,
                             const ScaffoldTemplates &templates) {
  ScaffoldBatch batch;
  for (const AnnotatedTweet &tweet : corpus) {
    if (!tweet.argumentative) continue;
    if (auto s = ScaffoldTypeA(tweet, templates)) {
      batch.records.push_back({tweet.id(), std::move(*s)});
    }
    if (auto s = ScaffoldTypeB(tweet, templates, &batch.warnings)) {
      batch.records.push_back({tweet.id(), std::move(*s)});
    }
    if (!tweet.justification_type) {
      ++batch.missing_type;
      continue;
    }
    if (auto s = ScaffoldTypeC(tweet, templates)) {
      batch.records.push_back({tweet.id(), std::move(*s)});
    }
  }
  return batch;
}

std::string ScaffoldsToJsonl(std::span<const ScaffoldRecord> records) {
  std::string out;
  for (const ScaffoldRecord &r : records) {
    const json j = {{"tweet_id", r.tweet_id},
                    {"cn_type", CnTypeName(r.scaffold.cn_type)},
                    {"prompt", r.scaffold.prompt},
                    {"slots", r.scaffold.slots_used}};
    out += j.dump() + "\n";
  }
  return out;
}

std::string ScaffoldReport(std::span<const AnnotatedTweet> corpus,
                           std::span<const ScaffoldRecord> records) {
  std::string out;
  for (const AnnotatedTweet &tweet : corpus) {
    bool any = false;
    for (const ScaffoldRecord &r : records) {
      if (r.tweet_id != tweet.id()) continue;
      if (!any) out += "== " + tweet.id() + "\n" + tweet.doc.text() + "\n";
      any = true;
      out += "  [" + std::string(CnTypeName(r.scaffold.cn_type)) + "] " +
             r.scaffold.prompt + "\n";
    }
    if (any) out += "\n";
  }
  return out;
}

}  // namespace cnarg
