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

#include "cnarg/token_projection.h"

#include <algorithm>

#include "cnarg/error.h"

namespace cnarg {
namespace {

bool IsWhitespace(char32_t c) {
  switch (c) {
    case U' ': case U'\t': case U'\n': case U'\v': case U'\f': case U'\r':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200A;
  }
}

bool IsPunctuation(char32_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) ||
           (c >= 0x5B && c <= 0x60) || (c >= 0x7B && c <= 0x7E);
  }
  switch (c) {
    case 0xA1: case 0xAB: case 0xBB: case 0xBF: case 0xB7:
      return true;
    default:
      // General punctuation block: dashes, quotes, ellipsis, etc.
      return c >= 0x2010 && c <= 0x2027;
  }
}

bool IsSigil(char32_t c) { return c == U'#' || c == U'@'; }

char32_t Lower(char32_t c) { return c >= U'A' && c <= U'Z' ? c + 32 : c; }

bool StartsWithUrl(std::u32string_view chunk) {
  for (std::u32string_view prefix : {U"http://", U"https://", U"www."}) {
    if (chunk.size() < prefix.size()) continue;
    bool match = true;
    for (size_t i = 0; i < prefix.size(); ++i) {
      if (Lower(chunk[i]) != prefix[i]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

void AddToken(const Document &doc, size_t start, size_t end, bool punct,
              const TokenizerOptions &options, TokenizedTweet *out) {
  if (start >= end) return;
  if (punct && !options.include_punct) return;
  out->tokens.push_back({std::string(doc.Slice(start, end)), start, end, punct});
}

}  // namespace

TokenizedTweet Tokenize(const Document &doc, const TokenizerOptions &options) {
  TokenizedTweet out{doc.id(), {}};
  const std::u32string &cps = doc.code_points();
  size_t i = 0;
  while (i < cps.size()) {
    if (IsWhitespace(cps[i])) {
      ++i;
      continue;
    }
    size_t end = i;
    while (end < cps.size() && !IsWhitespace(cps[end])) ++end;
    const std::u32string_view chunk(cps.data() + i, end - i);

    if (StartsWithUrl(chunk)) {
      AddToken(doc, i, end, false, options, &out);
      i = end;
      continue;
    }
    // Leading punctuation stops at a hashtag or mention sigil.
    size_t core_start = i;
    while (core_start < end && IsPunctuation(cps[core_start]) &&
           !(IsSigil(cps[core_start]) && core_start + 1 < end &&
             !IsPunctuation(cps[core_start + 1]))) {
      ++core_start;
    }
    size_t core_end = end;
    while (core_end > core_start && IsPunctuation(cps[core_end - 1])) --core_end;

    if (core_start == core_end) {
      AddToken(doc, i, end, true, options, &out);
    } else {
      AddToken(doc, i, core_start, true, options, &out);
      AddToken(doc, core_start, core_end, false, options, &out);
      AddToken(doc, core_end, end, true, options, &out);
    }
    i = end;
  }
  return out;
}

std::string_view CategoryName(Category category) {
  switch (category) {
    case Category::kJustification: return "Justification";
    case Category::kConclusion: return "Conclusion";
    case Category::kCollective: return "Collective";
    case Category::kProperty: return "Property";
    case Category::kPivot: return "Pivot";
    case Category::kPivotJustificationSide: return "PivotJustificationSide";
    case Category::kPivotConclusionSide: return "PivotConclusionSide";
  }
  return "";
}

std::optional<Category> CategoryFromName(std::string_view name) {
  for (Category c : {Category::kJustification, Category::kConclusion,
                     Category::kCollective, Category::kProperty, Category::kPivot,
                     Category::kPivotJustificationSide,
                     Category::kPivotConclusionSide}) {
    if (CategoryName(c) == name) return c;
  }
  return std::nullopt;
}

std::vector<ComponentKind> CategoryKinds(Category category) {
  switch (category) {
    case Category::kJustification: return {ComponentKind::kJustification};
    case Category::kConclusion: return {ComponentKind::kConclusion};
    case Category::kCollective: return {ComponentKind::kCollective};
    case Category::kProperty: return {ComponentKind::kProperty};
    case Category::kPivot:
      return {ComponentKind::kPivotJustificationSide,
              ComponentKind::kPivotConclusionSide};
    case Category::kPivotJustificationSide:
      return {ComponentKind::kPivotJustificationSide};
    case Category::kPivotConclusionSide:
      return {ComponentKind::kPivotConclusionSide};
  }
  return {};
}

TokenLabeling Project(const AnnotatedTweet &tweet, const TokenizedTweet &tokens,
                      Category category) {
  if (tweet.id() != tokens.tweet_id) {
    throw Error(ErrorCode::kIdMismatch,
                "tweet '" + tweet.id() + "' vs tokens '" + tokens.tweet_id + "'");
  }
  TokenLabeling out{tweet.id(), category,
                    std::vector<uint8_t>(tokens.tokens.size(), 0)};
  for (ComponentKind kind : CategoryKinds(category)) {
    for (const Component *c : tweet.ComponentsOf(kind)) {
      for (const Fragment &f : c->fragments) {
        for (size_t i = 0; i < tokens.tokens.size(); ++i) {
          const Token &tok = tokens.tokens[i];
          if (tok.start < f.end && f.start < tok.end) out.labels[i] = 1;
        }
      }
    }
  }
  return out;
}

SequenceDataset ToDataset(std::span<const AnnotatedTweet> corpus, Category category,
                          std::span<const Category> conditioning,
                          const TokenizerOptions &options) {
  SequenceDataset dataset;
  dataset.category = category;
  dataset.conditioning.assign(conditioning.begin(), conditioning.end());
  for (const AnnotatedTweet &tweet : corpus) {
    const TokenizedTweet tokens = Tokenize(tweet.doc, options);
    const TokenLabeling gold = Project(tweet, tokens, category);
    std::vector<TokenLabeling> extra;
    for (Category c : conditioning) extra.push_back(Project(tweet, tokens, c));

    SequenceTweet seq{tweet.id(), {}};
    for (size_t i = 0; i < tokens.tokens.size(); ++i) {
      const Token &tok = tokens.tokens[i];
      SequenceRow row{tok.surface, tok.start, tok.end, gold.labels[i], {}};
      for (const TokenLabeling &e : extra) row.indicators.push_back(e.labels[i]);
      seq.rows.push_back(std::move(row));
    }
    dataset.tweets.push_back(std::move(seq));
  }
  return dataset;
}

std::string SerializeDataset(const SequenceDataset &dataset) {
  std::string out = "# category " + std::string(CategoryName(dataset.category));
  for (Category c : dataset.conditioning) {
    out += " +" + std::string(CategoryName(c));
  }
  out += "\n\n";
  for (const SequenceTweet &tweet : dataset.tweets) {
    out += "# id " + tweet.tweet_id + "\n";
    for (const SequenceRow &row : tweet.rows) {
      out += row.token + "\t" + std::to_string(row.start) + "\t" +
             std::to_string(row.end) + "\t" + std::to_string(row.label);
      for (uint8_t ind : row.indicators) out += "\t" + std::to_string(ind);
      out += "\n";
    }
    out += "\n";
  }
  return out;
}

}  // namespace cnarg
