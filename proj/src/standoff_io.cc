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

#include "cnarg/standoff_io.h"

#include <charconv>
#include <unordered_map>
#include <utility>

#include "cnarg/error.h"
#include "cnarg/file_util.h"
#include "cnarg/utf8.h"

namespace cnarg {
namespace {

constexpr char kSurfaceSeparator = ' ';

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  size_t begin = 0;
  while (true) {
    const size_t pos = s.find(sep, begin);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(begin));
      return parts;
    }
    parts.push_back(s.substr(begin, pos - begin));
    begin = pos + 1;
  }
}

// Splits on runs of spaces, dropping empty fields.
std::vector<std::string_view> Fields(std::string_view s) {
  std::vector<std::string_view> out;
  for (std::string_view part : Split(s, ' ')) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

[[noreturn]] void Malformed(size_t line_no, const std::string &why) {
  throw Error(ErrorCode::kMalformedLine,
              "line " + std::to_string(line_no) + ": " + why);
}

size_t ParseOffset(std::string_view s, size_t line_no) {
  size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    Malformed(line_no, "bad offset '" + std::string(s) + "'");
  }
  return value;
}

std::vector<Fragment> ParseFragments(std::string_view spec, size_t line_no) {
  std::vector<Fragment> fragments;
  for (std::string_view piece : Split(spec, ';')) {
    const auto nums = Fields(piece);
    if (nums.size() != 2) Malformed(line_no, "fragment needs start and end");
    fragments.push_back(
        {ParseOffset(nums[0], line_no), ParseOffset(nums[1], line_no)});
  }
  return fragments;
}

void CheckFragments(const std::vector<Fragment> &fragments, const Document &doc,
                    const std::string &ann_id, size_t line_no) {
  for (size_t i = 0; i < fragments.size(); ++i) {
    const Fragment &f = fragments[i];
    if (f.start >= f.end || f.end > doc.length()) {
      throw Error(ErrorCode::kOffsetOutOfRange,
                  doc.id() + " " + ann_id + ": fragment (" +
                      std::to_string(f.start) + "," + std::to_string(f.end) +
                      ") outside text of length " +
                      std::to_string(doc.length()));
    }
    if (i > 0 && f.start < fragments[i - 1].end) {
      Malformed(line_no, ann_id + ": fragments unsorted or overlapping");
    }
  }
}

void CheckNoNewline(std::string_view s, const std::string &what) {
  if (s.find('\n') != std::string_view::npos ||
      s.find('\r') != std::string_view::npos) {
    throw Error(ErrorCode::kInvalidArgument, what + " contains a line break");
  }
}

}  // namespace

std::string_view LanguageCode(Language lang) {
  return lang == Language::kSpanish ? "ES" : "EN";
}

Language ParseLanguageCode(std::string_view code) {
  if (code == "EN" || code == "en") return Language::kEnglish;
  if (code == "ES" || code == "es") return Language::kSpanish;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown language '" + std::string(code) + "'");
}

Document::Document(std::string id, std::string text, Language lang)
    : id_(std::move(id)), text_(std::move(text)), lang_(lang) {
  code_points_ = DecodeUtf8(text_);
  if (code_points_.empty()) {
    throw Error(ErrorCode::kEmptyDocument, "document '" + id_ + "' is empty");
  }
  byte_offsets_.reserve(code_points_.size() + 1);
  size_t byte = 0;
  for (char32_t cp : code_points_) {
    byte_offsets_.push_back(byte);
    byte += cp < 0x80 ? 1 : cp < 0x800 ? 2 : cp < 0x10000 ? 3 : 4;
  }
  byte_offsets_.push_back(byte);
}

std::string_view Document::Slice(size_t start, size_t end) const {
  if (start > end || end > length()) {
    throw Error(ErrorCode::kOffsetOutOfRange,
                "slice (" + std::to_string(start) + "," + std::to_string(end) +
                    ") of " + id_);
  }
  return std::string_view(text_).substr(
      byte_offsets_[start], byte_offsets_[end] - byte_offsets_[start]);
}

std::string JoinedSurface(const Document &doc,
                          std::span<const Fragment> fragments) {
  std::string out;
  for (size_t i = 0; i < fragments.size(); ++i) {
    if (i > 0) out.push_back(kSurfaceSeparator);
    out += doc.Slice(fragments[i].start, fragments[i].end);
  }
  return out;
}

Document ParseDocument(std::string id, std::string_view bytes, Language lang) {
  return Document(std::move(id), std::string(bytes), lang);
}

Document ParseDocumentFile(const std::filesystem::path &path, Language lang) {
  return ParseDocument(path.stem().string(), ReadFile(path), lang);
}

std::vector<RawAnnotation> ParseAnnotations(std::string_view content,
                                            const Document &doc) {
  std::vector<RawAnnotation> annotations;
  std::unordered_map<std::string, size_t> by_id;
  size_t line_no = 0;
  for (std::string_view line : Split(content, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    const auto cols = Split(line, '\t');
    const std::string_view id = cols[0];
    switch (id.front()) {
      case 'T': {
        if (cols.size() != 3) Malformed(line_no, "text-bound line needs 3 columns");
        const std::string_view spec = cols[1];
        const size_t space = spec.find(' ');
        if (space == std::string_view::npos || space == 0) {
          Malformed(line_no, "missing label or offsets");
        }
        RawAnnotation ann;
        ann.ann_id = std::string(id);
        ann.label = std::string(spec.substr(0, space));
        ann.fragments = ParseFragments(spec.substr(space + 1), line_no);
        ann.surface = std::string(cols[2]);
        CheckFragments(ann.fragments, doc, ann.ann_id, line_no);
        const std::string expected = JoinedSurface(doc, ann.fragments);
        if (expected != ann.surface) {
          throw Error(ErrorCode::kSurfaceMismatch,
                      doc.id() + " " + ann.ann_id + ": expected '" + expected +
                          "' found '" + ann.surface + "'");
        }
        if (!by_id.emplace(ann.ann_id, annotations.size()).second) {
          Malformed(line_no, "duplicate id " + ann.ann_id);
        }
        annotations.push_back(std::move(ann));
        break;
      }
      case 'A':
      case 'M': {
        if (cols.size() != 2) Malformed(line_no, "attribute line needs 2 columns");
        const auto parts = Fields(cols[1]);
        if (parts.size() < 2 || parts.size() > 3) {
          Malformed(line_no, "attribute needs NAME TARGET [VALUE]");
        }
        auto it = by_id.find(std::string(parts[1]));
        if (it == by_id.end()) {
          Malformed(line_no, "attribute target " + std::string(parts[1]) +
                                 " not defined before use");
        }
        annotations[it->second].attributes[std::string(parts[0])] =
            parts.size() == 3 ? std::string(parts[2]) : std::string();
        break;
      }
      case '#': {
        if (cols.size() < 2) Malformed(line_no, "note line needs columns");
        const auto parts = Fields(cols[1]);
        if (parts.size() != 2) Malformed(line_no, "note needs TYPE TARGET");
        auto it = by_id.find(std::string(parts[1]));
        if (it == by_id.end()) {
          Malformed(line_no, "note target " + std::string(parts[1]) +
                                 " not defined before use");
        }
        // Note text may itself contain tabs; keep everything after the
        // second column verbatim.
        std::string text;
        if (cols.size() >= 3) {
          text = std::string(line.substr(cols[0].size() + cols[1].size() + 2));
        }
        annotations[it->second].notes.push_back(
            {std::string(parts[0]), std::move(text)});
        break;
      }
      case 'R':
      case 'E':
      case 'N':
      case '*':
        break;
      default:
        Malformed(line_no, "unknown line type '" + std::string(id) + "'");
    }
  }
  return annotations;
}

std::vector<RawAnnotation> ParseAnnotationsFile(const std::filesystem::path &path,
                                                const Document &doc) {
  return ParseAnnotations(ReadFile(path), doc);
}

std::string SerializeAnnotations(std::span<const RawAnnotation> annotations) {
  std::string out;
  for (const RawAnnotation &ann : annotations) {
    CheckNoNewline(ann.surface, ann.ann_id + " surface");
    out += ann.ann_id;
    out += '\t';
    out += ann.label;
    out += ' ';
    for (size_t i = 0; i < ann.fragments.size(); ++i) {
      if (i > 0) out += ';';
      out += std::to_string(ann.fragments[i].start);
      out += ' ';
      out += std::to_string(ann.fragments[i].end);
    }
    out += '\t';
    out += ann.surface;
    out += '\n';
  }
  size_t attr_id = 0;
  for (const RawAnnotation &ann : annotations) {
    for (const auto &[name, value] : ann.attributes) {
      out += "A" + std::to_string(++attr_id) + "\t" + name + " " + ann.ann_id;
      if (!value.empty()) out += " " + value;
      out += '\n';
    }
  }
  size_t note_id = 0;
  for (const RawAnnotation &ann : annotations) {
    for (const Note &note : ann.notes) {
      CheckNoNewline(note.text, ann.ann_id + " note");
      out += "#" + std::to_string(++note_id) + "\t" + note.type + " " +
             ann.ann_id + "\t" + note.text + "\n";
    }
  }
  return out;
}

}  // namespace cnarg
