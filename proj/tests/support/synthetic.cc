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

#include "synthetic.h"

#include <random>
#include <string>

namespace cnarg::testing {
namespace {

constexpr const char *kCollectives[] = {"migrants", "refugees", "illegals",
                                        "foreigners", "asylum seekers"};
constexpr const char *kProperties[] = {"criminals", "dangerous", "a burden", "lazy",
                                       "violent", "parasites"};
constexpr const char *kPlaces[] = {"Libya", "Lampedusa", "Calais", "Ceuta", "Kent"};
constexpr const char *kTags[] = {"#news", "#EU", "#migration", "#today", "#UK"};
constexpr const char *kNews[] = {"says the report", "according to officials",
                                 "this morning", "live coverage"};
// Indexed by PropositionType: Policy, Fact, Value.
constexpr const char *kPhrases[3][4] = {
    {"we must close the borders", "deport them all", "stop the boats",
     "ban them from entering"},
    {"crime went up last year", "they took thousands of jobs", "the hospitals are full",
     "rents doubled since then"},
    {"it is disgusting", "this is shameful", "nobody wants them here",
     "what a disgrace"},
};

template <size_t N>
const char *Pick(std::mt19937_64 &rng, const char *const (&pool)[N]) {
  return pool[rng() % N];
}

bool Chance(std::mt19937_64 &rng, double p) {
  return static_cast<double>(rng() % 1000000) < p * 1000000.0;
}

struct Builder {
  std::string text;

  Fragment Add(const std::string &piece) {
    const size_t start = text.size();
    text += piece;
    return {start, text.size()};
  }
};

}  // namespace

std::vector<AnnotatedTweet> SyntheticCorpus(const SyntheticOptions &options) {
  std::mt19937_64 rng(options.seed);
  std::vector<AnnotatedTweet> corpus;
  for (size_t i = 0; i < options.tweets; ++i) {
    char id[32];
    std::snprintf(id, sizeof(id), "syn-%04zu", i);
    const std::string collective = Pick(rng, kCollectives);
    const std::string place = Pick(rng, kPlaces);
    Builder b;

    if (Chance(rng, options.non_argumentative)) {
      b.Add(collective + " arrive in " + place + " " + Pick(rng, kNews) + " " +
            Pick(rng, kTags));
      corpus.push_back({Document(id, b.text, Language::kEnglish), false, {}, {}, {}, {}});
      continue;
    }

    const int ctype = static_cast<int>(rng() % 3);
    const int jtype = static_cast<int>(rng() % 3);
    const bool property = Chance(rng, options.property);
    const bool pivot = Chance(rng, options.pivot);
    const std::string prop = Pick(rng, kProperties);

    std::vector<Component> components;
    const Fragment c_phrase = b.Add(kPhrases[ctype][rng() % 4]);
    Fragment conclusion = c_phrase;
    Fragment pivot_c{};
    if (pivot) {
      b.Add(" in ");
      pivot_c = b.Add(place);
      conclusion.end = pivot_c.end;
    }
    b.Add(" because ");
    const Fragment coll = b.Add(collective);
    b.Add(" arrive in ");
    const Fragment pivot_j = b.Add(place);
    Fragment prop_span{};
    if (property) {
      b.Add(" and they are ");
      prop_span = b.Add(prop);
    }
    b.Add(" and ");
    const Fragment j_phrase = b.Add(kPhrases[jtype][rng() % 4]);
    b.Add(std::string(" ") + Pick(rng, kTags));

    components.push_back({ComponentKind::kConclusion, {conclusion}});
    components.push_back({ComponentKind::kJustification, {{coll.start, j_phrase.end}}});
    if (property) {
      components.push_back({ComponentKind::kCollective, {coll}});
      components.push_back({ComponentKind::kProperty, {prop_span}});
    }
    if (pivot) {
      components.push_back({ComponentKind::kPivotJustificationSide, {pivot_j}});
      components.push_back({ComponentKind::kPivotConclusionSide, {pivot_c}});
    }
    std::vector<CounterNarrative> cns = {
        {CnType::kA, "Arriving somewhere says nothing about what should be done."}};
    if (property) cns.push_back({CnType::kB, "Most " + collective + " are not " + prop + "."});
    if (Chance(rng, 0.9)) cns.push_back({CnType::kC, "Where does that claim come from?"});
    if (Chance(rng, 0.02)) cns.push_back({CnType::kD, "Everyone deserves respect."});
    corpus.push_back({Document(id, b.text, Language::kEnglish), true, std::move(components),
                      static_cast<PropositionType>(jtype),
                      static_cast<PropositionType>(ctype), std::move(cns)});
  }
  return corpus;
}

}  // namespace cnarg::testing
