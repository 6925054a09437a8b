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

#ifndef CNARG_CORPUS_H_
#define CNARG_CORPUS_H_

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "cnarg/error.h"
#include "cnarg/scheme.h"
#include "cnarg/standoff_io.h"

namespace cnarg {

// A document and its parsed annotation file, before scheme mapping.
struct RawEntry {
  Document doc;
  std::vector<RawAnnotation> annotations;
};

struct LoadError {
  std::string path;
  ErrorCode code = ErrorCode::kIo;
  std::string message;
};

struct LoadedCorpus {
  std::vector<AnnotatedTweet> tweets;
  std::vector<LoadError> errors;
};

// Every "<stem>.txt" under `root` (recursively), sorted by path. The
// annotations live in the sibling "<stem>.ann"; a missing .ann is read as an
// empty annotation file.
std::vector<std::filesystem::path> FindDocuments(const std::filesystem::path &root);

// Document id: path relative to `root` without extension, '/'-separated.
std::string DocumentId(const std::filesystem::path &root,
                       const std::filesystem::path &txt_path);

RawEntry LoadRawEntry(const std::filesystem::path &root,
                      const std::filesystem::path &txt_path,
                      const LabelMapping &mapping);

// Loads the whole directory. Per-file failures are collected, not thrown;
// only an unreadable root throws.
LoadedCorpus LoadCorpus(const std::filesystem::path &root,
                        const LabelMapping &mapping);

// Writes each tweet as "<id>.txt" + "<id>.ann" in canonical form.
void WriteCorpus(const std::filesystem::path &root,
                 std::span<const AnnotatedTweet> tweets);

// Content hash over ids, texts and canonical annotations, independent of
// file layout and input order.
std::string CorpusHash(std::span<const AnnotatedTweet> tweets);

}  // namespace cnarg

#endif  // CNARG_CORPUS_H_
