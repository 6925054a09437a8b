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

#ifndef CNARG_STANDOFF_IO_H_
#define CNARG_STANDOFF_IO_H_

// Reader and writer for offset-based standoff annotation files: one UTF-8
// text file per tweet plus an annotation file with lines of the form
//
//   T1<TAB>Conclusion 0 5;12 17<TAB>Build walls
//   A1<TAB>Type T1 Policy
//   #1<TAB>CN-A T1<TAB>free text of the counter-narrative
//
// Offsets are Unicode code-point offsets into the document text. The surface
// of a discontinuous span is its fragment slices joined by a single space.

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cnarg {

enum class Language { kEnglish, kSpanish };

std::string_view LanguageCode(Language lang);  // "EN" / "ES"
Language ParseLanguageCode(std::string_view code);

// A tweet text. Immutable once constructed; offsets used anywhere else in the
// library refer to code points of exactly this string.
class Document {
 public:
  // Throws kDecodeError on invalid UTF-8 and kEmptyDocument on empty text.
  Document(std::string id, std::string text, Language lang = Language::kEnglish);

  const std::string &id() const { return id_; }
  const std::string &text() const { return text_; }
  Language language() const { return lang_; }

  // Length in code points.
  size_t length() const { return code_points_.size(); }
  char32_t CodePointAt(size_t i) const { return code_points_[i]; }
  const std::u32string &code_points() const { return code_points_; }

  // Code-point slice [start, end). Requires start <= end <= length().
  std::string_view Slice(size_t start, size_t end) const;

 private:
  std::string id_;
  std::string text_;
  Language lang_;
  std::u32string code_points_;
  std::vector<size_t> byte_offsets_;  // length() + 1 entries
};

struct Fragment {
  size_t start = 0;
  size_t end = 0;

  bool operator==(const Fragment &) const = default;
  auto operator<=>(const Fragment &) const = default;
};

struct Note {
  std::string type;
  std::string text;

  bool operator==(const Note &) const = default;
};

struct RawAnnotation {
  std::string ann_id;
  std::string label;
  std::vector<Fragment> fragments;
  std::string surface;
  std::map<std::string, std::string> attributes;  // valueless attribute -> ""
  std::vector<Note> notes;

  bool operator==(const RawAnnotation &) const = default;
};

// Joins the document slices of `fragments` with the surface separator.
std::string JoinedSurface(const Document &doc, std::span<const Fragment> fragments);

Document ParseDocument(std::string id, std::string_view bytes,
                       Language lang = Language::kEnglish);
Document ParseDocumentFile(const std::filesystem::path &path,
                           Language lang = Language::kEnglish);

// Parses annotation-file content against `doc`. Rejects out-of-range or
// unsorted/overlapping fragments and any surface that differs from the
// document slices. Relation, event and normalization lines are skipped.
std::vector<RawAnnotation> ParseAnnotations(std::string_view content,
                                            const Document &doc);
std::vector<RawAnnotation> ParseAnnotationsFile(
    const std::filesystem::path &path, const Document &doc);

// Canonical output: all T lines in input order, then A lines (attributes
// sorted by name per annotation), then # lines.
std::string SerializeAnnotations(std::span<const RawAnnotation> annotations);

}  // namespace cnarg

#endif  // CNARG_STANDOFF_IO_H_
