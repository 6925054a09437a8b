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

#include "cnarg/stats.h"

#include <cmath>
#include <algorithm>
#include <cstdio>
#include <utility>

#include <json.hpp>

namespace cnarg {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

int ComponentWords(const AnnotatedTweet &t, ComponentKind kind) {
  int words = 0;
  for (const Component *c : t.ComponentsOf(kind)) {
    for (const Fragment &f : c->fragments) {
      words += CountWords(t.doc.Slice(f.start, f.end));
    }
  }
  return words;
}

std::string PctText(double pct) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f%%", pct);
  return buf;
}

std::string Pct(int count, int total) { return PctText(Percent(count, total)); }

std::vector<double> ArgPercents(const LanguageStats &s) {
  const std::array<int, 2> counts{s.argumentative, s.non_argumentative};
  return PartitionPercents(counts);
}

nlohmann::json LanguageJson(const LanguageStats &s) {
  using nlohmann::json;
  auto types = [](const std::array<int, 3> &t) {
    const auto pct = PartitionPercents(t);
    return json{{"Policy", t[0]},      {"Fact", t[1]},      {"Value", t[2]},
                {"Policy_pct", pct[0]}, {"Fact_pct", pct[1]}, {"Value_pct", pct[2]}};
  };
  const auto arg_pct = ArgPercents(s);
  return json{
      {"language", std::string(LanguageCode(s.language))},
      {"tweets", s.tweets},
      {"argumentative", s.argumentative},
      {"non_argumentative", s.non_argumentative},
      {"argumentative_pct", arg_pct[0]},
      {"non_argumentative_pct", arg_pct[1]},
      {"with_collective", s.with_collective},
      {"with_property", s.with_property},
      {"with_collective_and_property", s.with_collective_and_property},
      {"with_collective_and_property_pct",
       Percent(s.with_collective_and_property, s.argumentative)},
      {"with_pivot", s.with_pivot},
      {"with_pivot_pct", Percent(s.with_pivot, s.argumentative)},
      {"words",
       {{"total", s.words_total},
        {"collective", s.words_collective},
        {"property", s.words_property},
        {"pivot", s.words_pivot},
        {"conclusion", s.words_conclusion},
        {"justification", s.words_justification}}},
      {"conclusion_types", types(s.conclusion_types)},
      {"justification_types", types(s.justification_types)},
      {"counter_narratives",
       {{"A", s.counter_narratives[0]},
        {"B", s.counter_narratives[1]},
        {"C", s.counter_narratives[2]},
        {"D", s.counter_narratives[3]}}},
  };
}

void AppendLanguageText(const LanguageStats &s, std::string *out) {
  auto line = [out](const std::string &label, int value, const std::string &pct) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "  %-34s %7d  %s\n", label.c_str(), value,
                  pct.c_str());
    *out += buf;
  };
  *out += "[" + std::string(LanguageCode(s.language)) + "]\n";
  line("tweets", s.tweets, "");
  line("words", s.words_total, "");
  const auto arg_pct = ArgPercents(s);
  line("non-argumentative", s.non_argumentative, PctText(arg_pct[1]));
  line("argumentative", s.argumentative, PctText(arg_pct[0]));
  line("with Collective and Property", s.with_collective_and_property,
       Pct(s.with_collective_and_property, s.argumentative));
  line("  with Collective", s.with_collective, Pct(s.with_collective, s.argumentative));
  line("  with Property", s.with_property, Pct(s.with_property, s.argumentative));
  line("with pivot", s.with_pivot, Pct(s.with_pivot, s.argumentative));
  line("Collective words", s.words_collective, "");
  line("Property words", s.words_property, "");
  line("Pivot words", s.words_pivot, "");
  line("Conclusion words", s.words_conclusion, "");
  line("Justification words", s.words_justification, "");
  const char *names[] = {"policy", "fact", "value"};
  const auto conc_pct = PartitionPercents(s.conclusion_types);
  const auto just_pct = PartitionPercents(s.justification_types);
  for (int i : {1, 2, 0}) {
    line(std::string("Conclusion ") + names[i], s.conclusion_types[i],
         PctText(conc_pct[i]));
  }
  for (int i : {1, 2, 0}) {
    line(std::string("Justification ") + names[i], s.justification_types[i],
         PctText(just_pct[i]));
  }
  const char *cn[] = {"A", "B", "C", "D"};
  for (int i = 0; i < 4; ++i) {
    line(std::string("counter-narrative type ") + cn[i], s.counter_narratives[i], "");
  }
}

}  // namespace

LanguageStats &LanguageStats::operator+=(const LanguageStats &o) {
  tweets += o.tweets;
  argumentative += o.argumentative;
  non_argumentative += o.non_argumentative;
  with_collective += o.with_collective;
  with_property += o.with_property;
  with_collective_and_property += o.with_collective_and_property;
  with_pivot += o.with_pivot;
  words_total += o.words_total;
  words_collective += o.words_collective;
  words_property += o.words_property;
  words_pivot += o.words_pivot;
  words_conclusion += o.words_conclusion;
  words_justification += o.words_justification;
  for (size_t i = 0; i < 3; ++i) {
    conclusion_types[i] += o.conclusion_types[i];
    justification_types[i] += o.justification_types[i];
  }
  for (size_t i = 0; i < 4; ++i) counter_narratives[i] += o.counter_narratives[i];
  return *this;
}

StatsReport &StatsReport::operator+=(const StatsReport &other) {
  english += other.english;
  spanish += other.spanish;
  return *this;
}

int CountWords(std::string_view text) {
  int words = 0;
  bool in_word = false;
  for (char c : text) {
    if (IsSpace(c)) {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++words;
    }
  }
  return words;
}

double Percent(int count, int total) {
  if (total == 0) return 0.0;
  return std::round(1000.0 * count / total) / 10.0;
}

std::vector<double> PartitionPercents(std::span<const int> counts) {
  long total = 0;
  for (int c : counts) total += c;
  std::vector<double> out(counts.size(), 0.0);
  if (total == 0) return out;
  // Work in tenths of a percent: 1000 units to distribute.
  std::vector<long> units(counts.size());
  std::vector<std::pair<long, size_t>> remainders;
  long assigned = 0;
  for (size_t i = 0; i < counts.size(); ++i) {
    const long scaled = 1000L * counts[i];
    units[i] = scaled / total;
    assigned += units[i];
    remainders.emplace_back(scaled % total, i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto &a, const auto &b) { return a.first > b.first; });
  for (long k = 0; k < 1000 - assigned; ++k) ++units[remainders[k].second];
  for (size_t i = 0; i < counts.size(); ++i) out[i] = units[i] / 10.0;
  return out;
}

StatsReport CorpusStats(std::span<const AnnotatedTweet> corpus) {
  StatsReport report;
  for (const AnnotatedTweet &t : corpus) {
    LanguageStats &s =
        t.doc.language() == Language::kSpanish ? report.spanish : report.english;
    ++s.tweets;
    s.words_total += CountWords(t.doc.text());
    if (!t.argumentative) {
      ++s.non_argumentative;
      continue;
    }
    ++s.argumentative;
    const bool collective = t.Has(ComponentKind::kCollective);
    const bool property = t.Has(ComponentKind::kProperty);
    s.with_collective += collective;
    s.with_property += property;
    s.with_collective_and_property += collective && property;
    s.with_pivot += t.HasPivot();
    s.words_collective += ComponentWords(t, ComponentKind::kCollective);
    s.words_property += ComponentWords(t, ComponentKind::kProperty);
    s.words_pivot += ComponentWords(t, ComponentKind::kPivotJustificationSide) +
                     ComponentWords(t, ComponentKind::kPivotConclusionSide);
    s.words_conclusion += ComponentWords(t, ComponentKind::kConclusion);
    s.words_justification += ComponentWords(t, ComponentKind::kJustification);
    if (t.conclusion_type) ++s.conclusion_types[static_cast<int>(*t.conclusion_type)];
    if (t.justification_type) {
      ++s.justification_types[static_cast<int>(*t.justification_type)];
    }
    std::array<bool, 4> seen{};
    for (const CounterNarrative &cn : t.counter_narratives) {
      seen[static_cast<int>(cn.type)] = true;
    }
    for (size_t i = 0; i < 4; ++i) s.counter_narratives[i] += seen[i];
  }
  return report;
}

std::string FormatStatsText(const StatsReport &report) {
  std::string out;
  AppendLanguageText(report.english, &out);
  AppendLanguageText(report.spanish, &out);
  return out;
}

std::string StatsToJson(const StatsReport &report) {
  nlohmann::json root = nlohmann::json::array();
  root.push_back(LanguageJson(report.english));
  root.push_back(LanguageJson(report.spanish));
  return root.dump(2) + "\n";
}

}  // namespace cnarg
