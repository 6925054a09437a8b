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

#ifndef CNARG_EMBEDDINGS_H_
#define CNARG_EMBEDDINGS_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cnarg {

// Pre-computed vectors in the usual word-vector text format: a header line
// "<count> <dim>" followed by "<key> <dim floats>" per line. Keys are tokens
// (or tweet ids for tweet-level vectors, or "<tweet id>:<token index>" for
// contextual token vectors).
class EmbeddingTable {
 public:
  EmbeddingTable() = default;

  // Throws kDimensionMismatch when a row has the wrong number of values and
  // kMalformedLine for a bad header, bad number or wrong row count.
  static EmbeddingTable Parse(std::string_view content);
  static EmbeddingTable Load(const std::filesystem::path &path);

  size_t dimension() const { return dim_; }
  size_t size() const { return rows_.size(); }

  // Exact key first, then its lower-cased form; zero vector when absent.
  std::span<const float> Lookup(std::string_view key) const;
  bool Contains(std::string_view key) const;

 private:
  size_t dim_ = 0;
  std::unordered_map<std::string, size_t> rows_;
  std::vector<float> data_;
  std::vector<float> zero_;
};

}  // namespace cnarg

#endif  // CNARG_EMBEDDINGS_H_
