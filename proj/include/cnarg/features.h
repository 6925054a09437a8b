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

#ifndef CNARG_FEATURES_H_
#define CNARG_FEATURES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "cnarg/embeddings.h"
#include "cnarg/token_projection.h"
#include "cnarg/vocabulary.h"

namespace cnarg {

// Sorted, duplicate-free sparse vector.
struct SparseVector {
  std::vector<uint32_t> indices;
  std::vector<double> values;

  // Unordered accumulation; call Finalize() before use.
  void Add(size_t index, double value);
  void Finalize();
  bool operator==(const SparseVector &) const = default;
};

// Features for one token of a sequence:
//   [bag-of-words one-hot for offsets -w..+w, one |V| block each]
//   [embedding of the current token, when a table is given: the row keyed
//    "<tweet id>:<token index>" if present, else the token's row]
//   [per conditioning category: membership indicator at offsets -w..+w,
//    then one "category present anywhere in the tweet" indicator]
// Positions outside the tweet contribute nothing.
class TokenFeaturizer {
 public:
  TokenFeaturizer(const Vocabulary &vocab, const EmbeddingTable *embeddings,
                  int window, size_t num_conditioning);

  size_t dimension() const;
  int window() const { return window_; }

  size_t WindowOffset(int relative) const;
  size_t EmbeddingOffset() const;
  size_t ConditioningOffset(size_t k) const;

  SparseVector Featurize(const SequenceTweet &tweet, size_t position) const;

 private:
  const Vocabulary &vocab_;
  const EmbeddingTable *embeddings_;
  int window_;
  size_t num_conditioning_;
};

// One tweet-level item: the tweet's tokens, plus the tokens inside each
// conditioning category's spans.
struct TweetItem {
  std::string tweet_id;
  std::vector<std::string> tokens;
  std::vector<std::vector<std::string>> conditioning_tokens;
};

// Features for a tweet:
//   [bag-of-words counts over the tweet]
//   [tweet vector: the table row keyed by the tweet id if present, else the
//    mean of the token vectors]
//   [per conditioning category: bag-of-words counts over its tokens, then
//    their mean embedding]
class TweetFeaturizer {
 public:
  TweetFeaturizer(const Vocabulary &vocab, const EmbeddingTable *embeddings,
                  size_t num_conditioning);

  size_t dimension() const;
  size_t BlockSize() const;
  SparseVector Featurize(const TweetItem &item) const;

 private:
  void AddBlock(const std::vector<std::string> &tokens, const std::string *tweet_id,
                size_t offset, SparseVector *out) const;

  const Vocabulary &vocab_;
  const EmbeddingTable *embeddings_;
  size_t num_conditioning_;
};

}  // namespace cnarg

#endif  // CNARG_FEATURES_H_
