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

#ifndef CNARG_TOKEN_PROJECTION_H_
#define CNARG_TOKEN_PROJECTION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cnarg/scheme.h"

namespace cnarg {

struct Token {
  std::string surface;
  size_t start = 0;  // code points
  size_t end = 0;
  bool punctuation = false;  // every code point is punctuation
};

struct TokenizedTweet {
  std::string tweet_id;
  std::vector<Token> tokens;
};

struct TokenizerOptions {
  // Keep punctuation-only tokens.
  bool include_punct = true;
};

// Whitespace split, then leading and trailing punctuation runs become
// separate tokens. URLs are kept whole; hashtags and @-mentions keep their
// sigil. Offsets are code points into doc.text().
TokenizedTweet Tokenize(const Document &doc, const TokenizerOptions &options = {});

// The binary categories that tokens are labelled with. kPivot is the union of
// both pivot sides.
enum class Category {
  kJustification,
  kConclusion,
  kCollective,
  kProperty,
  kPivot,
  kPivotJustificationSide,
  kPivotConclusionSide,
};

std::string_view CategoryName(Category category);
std::optional<Category> CategoryFromName(std::string_view name);

// Component kinds whose fragments make up `category`.
std::vector<ComponentKind> CategoryKinds(Category category);

struct TokenLabeling {
  std::string tweet_id;
  Category category = Category::kJustification;
  std::vector<uint8_t> labels;
};

// labels[i] == 1 iff token i shares at least one code point with a fragment
// of the category. Throws kIdMismatch when the ids differ.
TokenLabeling Project(const AnnotatedTweet &tweet, const TokenizedTweet &tokens,
                      Category category);

struct SequenceRow {
  std::string token;
  size_t start = 0;
  size_t end = 0;
  uint8_t label = 0;
  std::vector<uint8_t> indicators;  // one per conditioning category
};

struct SequenceTweet {
  std::string tweet_id;
  std::vector<SequenceRow> rows;
};

struct SequenceDataset {
  Category category = Category::kJustification;
  std::vector<Category> conditioning;
  std::vector<SequenceTweet> tweets;
};

// Per-token gold labels for `category`; each conditioning category adds a
// per-token membership indicator computed from gold annotations.
SequenceDataset ToDataset(std::span<const AnnotatedTweet> corpus, Category category,
                          std::span<const Category> conditioning = {},
                          const TokenizerOptions &options = {});

// One token per line: token, start, end, label, indicators (tab separated);
// "# id <tweet id>" before each tweet and a blank line after it.
std::string SerializeDataset(const SequenceDataset &dataset);

}  // namespace cnarg

#endif  // CNARG_TOKEN_PROJECTION_H_
