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

#include "cnarg/embeddings.h"

#include <charconv>
#include <sstream>

#include "cnarg/error.h"
#include "cnarg/file_util.h"
#include "cnarg/vocabulary.h"

namespace cnarg {
namespace {

std::vector<std::string_view> SplitSpaces(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T ParseNumber(std::string_view s, size_t line_no) {
  T value{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kMalformedLine, "embeddings line " +
                                               std::to_string(line_no) +
                                               ": bad number '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

EmbeddingTable EmbeddingTable::Parse(std::string_view content) {
  EmbeddingTable table;
  size_t line_no = 0;
  size_t expected_rows = 0;
  size_t seen_rows = 0;
  size_t pos = 0;
  while (pos < content.size()) {
    size_t eol = content.find('\n', pos);
    if (eol == std::string_view::npos) eol = content.size();
    std::string_view line = content.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto fields = SplitSpaces(line);
    if (fields.empty()) continue;
    if (line_no == 1) {
      if (fields.size() != 2) {
        throw Error(ErrorCode::kMalformedLine, "embeddings header must be '<n> <d>'");
      }
      expected_rows = ParseNumber<size_t>(fields[0], line_no);
      table.dim_ = ParseNumber<size_t>(fields[1], line_no);
      continue;
    }
    if (fields.size() != table.dim_ + 1) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "embeddings line " + std::to_string(line_no) + " has " +
                      std::to_string(fields.size() - 1) + " values, expected " +
                      std::to_string(table.dim_));
    }
    ++seen_rows;
    const std::string key(fields[0]);
    if (table.rows_.contains(key)) continue;  // first occurrence wins
    table.rows_.emplace(key, table.rows_.size());
    for (size_t k = 1; k < fields.size(); ++k) {
      table.data_.push_back(ParseNumber<float>(fields[k], line_no));
    }
  }
  if (line_no == 0) {
    throw Error(ErrorCode::kMalformedLine, "embeddings file is empty");
  }
  if (seen_rows != expected_rows) {
    throw Error(ErrorCode::kMalformedLine,
                "embeddings header announces " + std::to_string(expected_rows) +
                    " rows, found " + std::to_string(seen_rows));
  }
  table.zero_.assign(table.dim_, 0.0f);
  return table;
}

EmbeddingTable EmbeddingTable::Load(const std::filesystem::path &path) {
  return Parse(ReadFile(path));
}

std::span<const float> EmbeddingTable::Lookup(std::string_view key) const {
  auto it = rows_.find(std::string(key));
  if (it == rows_.end()) it = rows_.find(NormalizeToken(key));
  if (it == rows_.end()) return zero_;
  return std::span<const float>(data_).subspan(it->second * dim_, dim_);
}

bool EmbeddingTable::Contains(std::string_view key) const {
  return rows_.contains(std::string(key)) || rows_.contains(NormalizeToken(key));
}

}  // namespace cnarg
