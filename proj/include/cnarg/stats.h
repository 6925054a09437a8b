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

#ifndef CNARG_STATS_H_
#define CNARG_STATS_H_

#include <array>
#include <span>
#include <string>
#include <vector>

#include "cnarg/scheme.h"

namespace cnarg {

// Word counts are whitespace-delimited tokens; for components they are
// counted per fragment slice and summed.
struct LanguageStats {
  Language language = Language::kEnglish;
  int tweets = 0;
  int argumentative = 0;
  int non_argumentative = 0;
  int with_collective = 0;
  int with_property = 0;
  int with_collective_and_property = 0;
  int with_pivot = 0;
  int words_total = 0;
  int words_collective = 0;
  int words_property = 0;
  int words_pivot = 0;
  int words_conclusion = 0;
  int words_justification = 0;
  // Indexed by PropositionType (Policy, Fact, Value).
  std::array<int, 3> conclusion_types{};
  std::array<int, 3> justification_types{};
  // Argumentative tweets with at least one counter-narrative of type A..D.
  std::array<int, 4> counter_narratives{};

  LanguageStats &operator+=(const LanguageStats &other);
  bool operator==(const LanguageStats &) const = default;
};

struct StatsReport {
  LanguageStats english{Language::kEnglish};
  LanguageStats spanish{Language::kSpanish};

  const LanguageStats &For(Language lang) const {
    return lang == Language::kSpanish ? spanish : english;
  }
  StatsReport &operator+=(const StatsReport &other);
  bool operator==(const StatsReport &) const = default;
};

int CountWords(std::string_view text);

StatsReport CorpusStats(std::span<const AnnotatedTweet> corpus);

// Percentage rounded to one decimal; 0 when the denominator is 0.
double Percent(int count, int total);

// Percentages of a closed partition, rounded to one decimal with the
// largest-remainder method so they sum to exactly 100 (or are all 0).
std::vector<double> PartitionPercents(std::span<const int> counts);

std::string FormatStatsText(const StatsReport &report);
std::string StatsToJson(const StatsReport &report);

}  // namespace cnarg

#endif  // CNARG_STATS_H_
