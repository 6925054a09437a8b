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

#include "cnarg/features.h"

#include <algorithm>
#include <numeric>

namespace cnarg {

void SparseVector::Add(size_t index, double value) {
  indices.push_back(static_cast<uint32_t>(index));
  values.push_back(value);
}

void SparseVector::Finalize() {
  std::vector<size_t> order(indices.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [this](size_t a, size_t b) { return indices[a] < indices[b]; });
  std::vector<uint32_t> idx;
  std::vector<double> val;
  for (size_t o : order) {
    if (!idx.empty() && idx.back() == indices[o]) {
      val.back() += values[o];
    } else {
      idx.push_back(indices[o]);
      val.push_back(values[o]);
    }
  }
  // Drop explicit zeros so equal vectors compare equal.
  size_t w = 0;
  for (size_t r = 0; r < idx.size(); ++r) {
    if (val[r] != 0.0) {
      idx[w] = idx[r];
      val[w] = val[r];
      ++w;
    }
  }
  idx.resize(w);
  val.resize(w);
  indices = std::move(idx);
  values = std::move(val);
}

TokenFeaturizer::TokenFeaturizer(const Vocabulary &vocab,
                                 const EmbeddingTable *embeddings, int window,
                                 size_t num_conditioning)
    : vocab_(vocab),
      embeddings_(embeddings),
      window_(window),
      num_conditioning_(num_conditioning) {}

size_t TokenFeaturizer::WindowOffset(int relative) const {
  return static_cast<size_t>(relative + window_) * vocab_.size();
}

size_t TokenFeaturizer::EmbeddingOffset() const {
  return static_cast<size_t>(2 * window_ + 1) * vocab_.size();
}

size_t TokenFeaturizer::ConditioningOffset(size_t k) const {
  const size_t dim = embeddings_ ? embeddings_->dimension() : 0;
  return EmbeddingOffset() + dim + k * static_cast<size_t>(2 * window_ + 2);
}

size_t TokenFeaturizer::dimension() const {
  return ConditioningOffset(num_conditioning_);
}

SparseVector TokenFeaturizer::Featurize(const SequenceTweet &tweet,
                                        size_t position) const {
  SparseVector v;
  const long n = static_cast<long>(tweet.rows.size());
  for (int rel = -window_; rel <= window_; ++rel) {
    const long j = static_cast<long>(position) + rel;
    if (j < 0 || j >= n) continue;
    v.Add(WindowOffset(rel) + vocab_.Index(tweet.rows[j].token), 1.0);
  }
  if (embeddings_) {
    const std::string contextual = tweet.tweet_id + ":" + std::to_string(position);
    const auto vec = embeddings_->Contains(contextual)
                         ? embeddings_->Lookup(contextual)
                         : embeddings_->Lookup(tweet.rows[position].token);
    for (size_t d = 0; d < vec.size(); ++d) v.Add(EmbeddingOffset() + d, vec[d]);
  }
  for (size_t k = 0; k < num_conditioning_; ++k) {
    const size_t base = ConditioningOffset(k);
    bool any = false;
    for (long j = 0; j < n; ++j) {
      if (!tweet.rows[j].indicators[k]) continue;
      any = true;
      const long rel = j - static_cast<long>(position);
      if (rel >= -window_ && rel <= window_) v.Add(base + rel + window_, 1.0);
    }
    if (any) v.Add(base + 2 * window_ + 1, 1.0);
  }
  v.Finalize();
  return v;
}

TweetFeaturizer::TweetFeaturizer(const Vocabulary &vocab,
                                 const EmbeddingTable *embeddings,
                                 size_t num_conditioning)
    : vocab_(vocab), embeddings_(embeddings), num_conditioning_(num_conditioning) {}

size_t TweetFeaturizer::BlockSize() const {
  return vocab_.size() + (embeddings_ ? embeddings_->dimension() : 0);
}

size_t TweetFeaturizer::dimension() const {
  return BlockSize() * (1 + num_conditioning_);
}

void TweetFeaturizer::AddBlock(const std::vector<std::string> &tokens,
                               const std::string *tweet_id, size_t offset,
                               SparseVector *out) const {
  for (const std::string &tok : tokens) out->Add(offset + vocab_.Index(tok), 1.0);
  if (!embeddings_) return;
  const size_t dim = embeddings_->dimension();
  const size_t emb_offset = offset + vocab_.size();
  if (tweet_id && embeddings_->Contains(*tweet_id)) {
    const auto vec = embeddings_->Lookup(*tweet_id);
    for (size_t d = 0; d < dim; ++d) out->Add(emb_offset + d, vec[d]);
    return;
  }
  if (tokens.empty()) return;
  std::vector<double> mean(dim, 0.0);
  for (const std::string &tok : tokens) {
    const auto vec = embeddings_->Lookup(tok);
    for (size_t d = 0; d < dim; ++d) mean[d] += vec[d];
  }
  for (size_t d = 0; d < dim; ++d) {
    out->Add(emb_offset + d, mean[d] / static_cast<double>(tokens.size()));
  }
}

SparseVector TweetFeaturizer::Featurize(const TweetItem &item) const {
  SparseVector v;
  AddBlock(item.tokens, &item.tweet_id, 0, &v);
  for (size_t k = 0; k < num_conditioning_ && k < item.conditioning_tokens.size(); ++k) {
    AddBlock(item.conditioning_tokens[k], nullptr, BlockSize() * (k + 1), &v);
  }
  v.Finalize();
  return v;
}

}  // namespace cnarg
