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

#include "cnarg/corpus.h"

#include <algorithm>

#include "cnarg/file_util.h"

namespace fs = std::filesystem;

namespace cnarg {

std::vector<fs::path> FindDocuments(const fs::path &root) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error(ErrorCode::kIo, "not a directory: " + root.string());
  }
  std::vector<fs::path> out;
  for (const auto &entry : fs::recursive_directory_iterator(root)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string DocumentId(const fs::path &root, const fs::path &txt_path) {
  fs::path rel = fs::relative(txt_path, root);
  rel.replace_extension();
  return rel.generic_string();
}

RawEntry LoadRawEntry(const fs::path &root, const fs::path &txt_path,
                      const LabelMapping &mapping) {
  const Language lang = mapping.LanguageForPath(fs::relative(txt_path, root));
  Document doc(DocumentId(root, txt_path), ReadFile(txt_path), lang);
  fs::path ann_path = txt_path;
  ann_path.replace_extension(".ann");
  std::vector<RawAnnotation> annotations;
  if (fs::exists(ann_path)) annotations = ParseAnnotationsFile(ann_path, doc);
  return RawEntry{std::move(doc), std::move(annotations)};
}

LoadedCorpus LoadCorpus(const fs::path &root, const LabelMapping &mapping) {
  LoadedCorpus corpus;
  for (const fs::path &path : FindDocuments(root)) {
    try {
      RawEntry entry = LoadRawEntry(root, path, mapping);
      corpus.tweets.push_back(FromRaw(entry.doc, entry.annotations, mapping));
    } catch (const Error &e) {
      corpus.errors.push_back({path.string(), e.code(), e.what()});
    }
  }
  return corpus;
}

void WriteCorpus(const fs::path &root, std::span<const AnnotatedTweet> tweets) {
  for (const AnnotatedTweet &tweet : tweets) {
    const fs::path base = root / fs::path(tweet.id());
    fs::create_directories(base.parent_path());
    fs::path txt = base, ann = base;
    txt += ".txt";
    ann += ".ann";
    WriteFileAtomic(txt, tweet.doc.text());
    WriteFileAtomic(ann, SerializeAnnotations(ToRaw(tweet)));
  }
}

std::string CorpusHash(std::span<const AnnotatedTweet> tweets) {
  std::vector<const AnnotatedTweet *> sorted;
  for (const AnnotatedTweet &t : tweets) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [](const AnnotatedTweet *a, const AnnotatedTweet *b) {
              return a->id() < b->id();
            });
  std::string blob;
  for (const AnnotatedTweet *t : sorted) {
    blob += t->id();
    blob += '\0';
    blob += LanguageCode(t->doc.language());
    blob += '\0';
    blob += t->doc.text();
    blob += '\0';
    blob += SerializeAnnotations(ToRaw(*t));
    blob += '\0';
  }
  return Sha256Hex(blob);
}

}  // namespace cnarg
