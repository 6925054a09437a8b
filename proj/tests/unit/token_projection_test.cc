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

#include <doctest.h>

#include <random>

#include "cnarg/error.h"
#include "synthetic.h"
#include "validation_fixtures.h"

using namespace cnarg;

namespace {

std::vector<std::string> Surfaces(const TokenizedTweet &t) {
  std::vector<std::string> out;
  for (const Token &tok : t.tokens) out.push_back(tok.surface);
  return out;
}

std::vector<std::string> Tok(const std::string &text, bool punct = true) {
  TokenizerOptions o;
  o.include_punct = punct;
  return Surfaces(Tokenize(Document("t", text), o));
}

using V = std::vector<std::string>;

}  // namespace

TEST_CASE("tokenize: whitespace and punctuation runs") {
  CHECK(Tok("No to #EU migrant camps in Libya") ==
        V{"No", "to", "#EU", "migrant", "camps", "in", "Libya"});
  CHECK(Tok("Stop them!!! Now, please.") == V{"Stop", "them", "!!!", "Now", ",", "please", "."});
  CHECK(Tok("\"quoted\"") == V{"\"", "quoted", "\""});
  CHECK(Tok("¿Por qué? ¡Fuera!") == V{"¿", "Por", "qué", "?", "¡", "Fuera", "!"});
  CHECK(Tok("wait…") == V{"wait", "…"});
  CHECK(Tok("Stop them!!! Now, please.", false) == V{"Stop", "them", "Now", "please"});
}

TEST_CASE("tokenize: hashtags, mentions and URLs stay whole") {
  CHECK(Tok("(#BuildTheWall) @user: see https://t.co/abc?x=1.") ==
        V{"(", "#BuildTheWall", ")", "@user", ":", "see", "https://t.co/abc?x=1."});
  CHECK(Tok("WWW.Example.com/path, ok") == V{"WWW.Example.com/path,", "ok"});
  CHECK(Tok("## #") == V{"##", "#"});
}

TEST_CASE("tokenize: offsets are code points and slice back to the surface") {
  const Document doc("t", "\xF0\x9F\x98\xA1 Fuera\xC2\xA0ya, \xC2\xBFvale?");
  const TokenizedTweet tt = Tokenize(doc);
  CHECK(Surfaces(tt) == V{"\xF0\x9F\x98\xA1", "Fuera", "ya", ",", "\xC2\xBF", "vale", "?"});
  for (const Token &t : tt.tokens) CHECK(doc.Slice(t.start, t.end) == t.surface);
  CHECK(tt.tokens[1].start == 2);
  CHECK(tt.tokens[1].end == 7);
  CHECK(tt.tokens[3].punctuation);
  CHECK_FALSE(tt.tokens[0].punctuation);
}

TEST_CASE("tokenize: tokens are ordered and disjoint on random text") {
  std::mt19937_64 rng(8);
  const std::vector<std::string> pieces = {"a", "B", " ", "  ", ",", "!", "#", "@", "\xE2\x80\xA6",
                                           "\xC3\xB1", "http://", "\t", "x.y", "\xC2\xBF"};
  for (int trial = 0; trial < 300; ++trial) {
    std::string text = "q";
    const int n = 1 + static_cast<int>(rng() % 20);
    for (int i = 0; i < n; ++i) text += pieces[rng() % pieces.size()];
    const Document doc("t", text);
    const TokenizedTweet tt = Tokenize(doc);
    size_t prev_end = 0;
    for (const Token &t : tt.tokens) {
      CHECK(t.start >= prev_end);
      CHECK(t.start < t.end);
      CHECK(doc.Slice(t.start, t.end) == t.surface);
      prev_end = t.end;
    }
  }
}

TEST_CASE("project: a token is labelled when it overlaps the category") {
  const AnnotatedTweet t = cnarg::testing::BaseTweet();
  // "Migrants are criminals so close the borders #EU"
  const TokenizedTweet tok = Tokenize(t.doc);
  CHECK(Project(t, tok, Category::kJustification).labels ==
        std::vector<uint8_t>{1, 1, 1, 0, 0, 0, 0, 0});
  CHECK(Project(t, tok, Category::kConclusion).labels ==
        std::vector<uint8_t>{0, 0, 0, 0, 1, 1, 1, 0});
  CHECK(Project(t, tok, Category::kCollective).labels ==
        std::vector<uint8_t>{1, 0, 0, 0, 0, 0, 0, 0});
  CHECK(Project(t, tok, Category::kPivot).labels ==
        std::vector<uint8_t>{1, 0, 0, 0, 0, 0, 1, 0});
  CHECK(Project(t, tok, Category::kPivotConclusionSide).labels ==
        std::vector<uint8_t>{0, 0, 0, 0, 0, 0, 1, 0});

  // Partial overlap of a single code point is enough.
  AnnotatedTweet partial = t;
  partial.components = {{ComponentKind::kProperty, {{21, 22}}}};
  CHECK(Project(partial, tok, Category::kProperty).labels ==
        std::vector<uint8_t>{0, 0, 1, 0, 0, 0, 0, 0});
}

TEST_CASE("project: id mismatch") {
  const AnnotatedTweet t = cnarg::testing::BaseTweet("a");
  const TokenizedTweet other = Tokenize(Document("b", "x"));
  try {
    Project(t, other, Category::kConclusion);
    FAIL("expected IdMismatch");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kIdMismatch);
  }
}

TEST_CASE("project agrees with a character-mask oracle") {
  const auto corpus = cnarg::testing::SyntheticCorpus({.tweets = 80, .seed = 4});
  const Category cats[] = {Category::kJustification, Category::kConclusion, Category::kCollective,
                           Category::kProperty, Category::kPivot};
  for (const AnnotatedTweet &t : corpus) {
    const TokenizedTweet tok = Tokenize(t.doc);
    for (Category c : cats) {
      std::vector<bool> mask(t.doc.length(), false);
      for (const Component &comp : t.components) {
        const auto kinds = CategoryKinds(c);
        if (std::find(kinds.begin(), kinds.end(), comp.kind) == kinds.end()) continue;
        for (const Fragment &f : comp.fragments) {
          for (size_t i = f.start; i < f.end; ++i) mask[i] = true;
        }
      }
      const TokenLabeling lab = Project(t, tok, c);
      for (size_t i = 0; i < tok.tokens.size(); ++i) {
        bool any = false;
        for (size_t k = tok.tokens[i].start; k < tok.tokens[i].end; ++k) any = any || mask[k];
        CHECK(lab.labels[i] == static_cast<uint8_t>(any));
      }
    }
  }
}

TEST_CASE("to_dataset: labels and conditioning indicators") {
  const std::vector<AnnotatedTweet> corpus = {cnarg::testing::BaseTweet()};
  const std::vector<Category> cond = {Category::kProperty};
  const SequenceDataset d = ToDataset(corpus, Category::kCollective, cond);
  REQUIRE(d.tweets.size() == 1);
  const auto &rows = d.tweets[0].rows;
  REQUIRE(rows.size() == 8);
  CHECK(rows[0].token == "Migrants");
  CHECK(rows[0].label == 1);
  CHECK(rows[2].indicators == std::vector<uint8_t>{1});
  CHECK(rows[0].indicators == std::vector<uint8_t>{0});

  const SequenceDataset plain = ToDataset(corpus, Category::kCollective);
  CHECK(plain.tweets[0].rows[0].indicators.empty());

  const std::string text = SerializeDataset(d);
  CHECK(text.rfind("# category Collective", 0) == 0);
  CHECK(text.find("Migrants\t0\t8\t1\t0\n") != std::string::npos);
}

TEST_CASE("category names") {
  for (Category c : {Category::kJustification, Category::kConclusion, Category::kCollective,
                     Category::kProperty, Category::kPivot, Category::kPivotJustificationSide,
                     Category::kPivotConclusionSide}) {
    CHECK(CategoryFromName(CategoryName(c)) == c);
  }
  CHECK_FALSE(CategoryFromName("Premise").has_value());
  CHECK(CategoryKinds(Category::kPivot).size() == 2);
}
