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

#include "cnarg/vocabulary.h"

#include <algorithm>
#include <map>

#include "cnarg/error.h"
#include "cnarg/file_util.h"

namespace cnarg {

std::string NormalizeToken(std::string_view token) {
  std::string out(token);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

Vocabulary::Vocabulary() : tokens_{std::string(kUnkToken)} {}

Vocabulary Vocabulary::Build(std::span<const std::vector<std::string>> sequences,
                             int min_count) {
  std::map<std::string, int> counts;
  for (const auto &seq : sequences) {
    for (const std::string &tok : seq) ++counts[NormalizeToken(tok)];
  }
  std::vector<std::string> kept;
  for (const auto &[tok, n] : counts) {
    if (n >= min_count && tok != kUnkToken) kept.push_back(tok);
  }
  return FromTokens(std::move(kept));
}

Vocabulary Vocabulary::FromTokens(std::vector<std::string> tokens) {
  Vocabulary v;
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  for (std::string &tok : tokens) {
    if (tok == kUnkToken) continue;
    v.index_.emplace(tok, static_cast<int>(v.tokens_.size()));
    v.tokens_.push_back(std::move(tok));
  }
  return v;
}

int Vocabulary::Index(std::string_view token) const {
  auto it = index_.find(NormalizeToken(token));
  return it == index_.end() ? kUnk : it->second;
}

std::string Vocabulary::Hash() const {
  std::string blob;
  for (const std::string &tok : tokens_) {
    blob += tok;
    blob += '\n';
  }
  return Sha256Hex(blob);
}

}  // namespace cnarg
