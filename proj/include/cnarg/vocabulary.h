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

#ifndef CNARG_VOCABULARY_H_
#define CNARG_VOCABULARY_H_

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cnarg {

// Lower-cases ASCII letters; everything else is kept.
std::string NormalizeToken(std::string_view token);

// Dense token index built from training data only. Index 0 is reserved for
// unknown tokens; known tokens follow in lexicographic order, so the result
// does not depend on the order in which the data was counted.
class Vocabulary {
 public:
  static constexpr int kUnk = 0;
  static constexpr std::string_view kUnkToken = "<unk>";

  Vocabulary();  // UNK only

  // Tokens are normalized before counting.
  static Vocabulary Build(std::span<const std::vector<std::string>> sequences,
                          int min_count = 1);
  static Vocabulary FromTokens(std::vector<std::string> tokens);

  int Index(std::string_view token) const;
  size_t size() const { return tokens_.size(); }
  const std::vector<std::string> &tokens() const { return tokens_; }

  // SHA-256 over the index order, used to check model compatibility.
  std::string Hash() const;

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace cnarg

#endif  // CNARG_VOCABULARY_H_
