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

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "cnarg/error.h"

using namespace cnarg;

namespace {

ErrorCode ParseFailure(const std::string &ann, const Document &doc) {
  try {
    ParseAnnotations(ann, doc);
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("parsed without error");
  return ErrorCode::kIo;
}

// Text as a list of single code points (UTF-8 each), so slices can be formed
// without the library's decoder.
const std::vector<std::string> kGlyphs = {
    "a", "b", "c", " ", "#", "\xC3\xB1", "\xE2\x80\xA6", "\xF0\x9F\x98\xA1", "\xC2\xBF", "z"};

std::string Join(const std::vector<std::string> &glyphs, size_t start, size_t end) {
  std::string out;
  for (size_t i = start; i < end; ++i) out += glyphs[i];
  return out;
}

}  // namespace

TEST_CASE("parse_document keeps the exact text") {
  const Document doc = ParseDocument("t1", "No to #EU migrant camps in Libya");
  CHECK(doc.text() == "No to #EU migrant camps in Libya");
  CHECK(doc.length() == 32);
  CHECK(doc.id() == "t1");
}

TEST_CASE("parse_document rejects empty and undecodable input") {
  CHECK_THROWS_AS(ParseDocument("t", ""), Error);
  try {
    ParseDocument("t", "");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kEmptyDocument);
  }
  try {
    ParseDocument("t", "bad \xFF byte");
    FAIL("expected DecodeError");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kDecodeError);
  }
}

TEST_CASE("parse_document does not trim") {
  const Document doc = ParseDocument("t", "  spaced \n");
  CHECK(doc.text() == "  spaced \n");
  CHECK(doc.length() == 10);
}

TEST_CASE("offsets count code points, not bytes") {
  // "😡 Build walls": the emoji is 4 bytes but one code point.
  const Document doc = ParseDocument("t", "\xF0\x9F\x98\xA1 Build walls");
  CHECK(doc.length() == 13);
  const auto anns = ParseAnnotations("T1\tConclusion 2 7\tBuild\n", doc);
  REQUIRE(anns.size() == 1);
  CHECK(anns[0].surface == "Build");
  CHECK(doc.Slice(0, 1) == "\xF0\x9F\x98\xA1");
}

TEST_CASE("single contiguous span") {
  const Document doc = ParseDocument("t", "Build walls");
  const auto anns = ParseAnnotations("T1\tConclusion 0 5\tBuild\n", doc);
  REQUIRE(anns.size() == 1);
  CHECK(anns[0].ann_id == "T1");
  CHECK(anns[0].label == "Conclusion");
  CHECK(anns[0].fragments == std::vector<Fragment>{{0, 5}});
  CHECK(anns[0].surface == "Build");
}

TEST_CASE("discontinuous span") {
  const Document doc = ParseDocument("t", "Build walls, not bridges");
  const auto anns = ParseAnnotations("T2\tJustification 0 5;17 24\tBuild bridges\n", doc);
  REQUIRE(anns.size() == 1);
  CHECK(anns[0].fragments == std::vector<Fragment>{{0, 5}, {17, 24}});
  CHECK(doc.Slice(0, 5) == "Build");
  CHECK(doc.Slice(17, 24) == "bridges");
}

TEST_CASE("offset and surface violations are rejected") {
  const Document doc = ParseDocument("t", "Build walls");
  CHECK(ParseFailure("T1\tConclusion 0 12\tBuild walls!\n", doc) ==
        ErrorCode::kOffsetOutOfRange);
  CHECK(ParseFailure("T1\tConclusion 5 5\t\n", doc) == ErrorCode::kOffsetOutOfRange);
  CHECK(ParseFailure("T1\tConclusion 0 5\tBuilt\n", doc) == ErrorCode::kSurfaceMismatch);
  CHECK(ParseFailure("T1\tConclusion 6 11;0 5\twalls Build\n", doc) ==
        ErrorCode::kMalformedLine);
  CHECK(ParseFailure("T1\tConclusion 0 5;3 8\tBuild ld wa\n", doc) ==
        ErrorCode::kMalformedLine);
  CHECK(ParseFailure("T1\tConclusion zero 5\tBuild\n", doc) == ErrorCode::kMalformedLine);
  CHECK(ParseFailure("Q1\tsomething\n", doc) == ErrorCode::kMalformedLine);
  CHECK(ParseFailure("T1\tConclusion 0 5\tBuild\nT1\tConclusion 0 5\tBuild\n", doc) ==
        ErrorCode::kMalformedLine);
  CHECK(ParseFailure("A1\tType T9 Fact\n", doc) == ErrorCode::kMalformedLine);
}

TEST_CASE("surface mismatch names the expected and found text") {
  const Document doc = ParseDocument("t", "Build walls");
  try {
    ParseAnnotations("T7\tConclusion 0 5\tBuilt\n", doc);
    FAIL("expected SurfaceMismatch");
  } catch (const Error &e) {
    const std::string what = e.what();
    CHECK(what.find("T7") != std::string::npos);
    CHECK(what.find("Build") != std::string::npos);
    CHECK(what.find("Built") != std::string::npos);
  }
}

TEST_CASE("attributes, notes and skipped line types") {
  const Document doc = ParseDocument("t", "Build walls");
  const std::string ann =
      "T1\tConclusion 0 5\tBuild\n"
      "T2\tJustification 6 11\twalls\n"
      "R1\tSupports Arg1:T2 Arg2:T1\n"
      "A1\tType T1 Policy\n"
      "A2\tFlag T2\n"
      "#1\tCN-A T1\tWalls do not follow from anything here.\n";
  const auto anns = ParseAnnotations(ann, doc);
  REQUIRE(anns.size() == 2);
  CHECK(anns[0].attributes.at("Type") == "Policy");
  CHECK(anns[1].attributes.at("Flag") == "");
  REQUIRE(anns[0].notes.size() == 1);
  CHECK(anns[0].notes[0] == Note{"CN-A", "Walls do not follow from anything here."});
}

TEST_CASE("serialize: empty and single annotation") {
  CHECK(SerializeAnnotations({}).empty());
  const Document doc = ParseDocument("t", "Build walls");
  const std::string line = "T1\tConclusion 0 5\tBuild\n";
  const auto anns = ParseAnnotations(line, doc);
  CHECK(SerializeAnnotations(anns) == line);
}

TEST_CASE("serialize rejects newlines inside fields") {
  RawAnnotation a{"T1", "Conclusion", {{0, 5}}, "Build", {}, {{"CN-A", "two\nlines"}}};
  CHECK_THROWS_AS(SerializeAnnotations(std::vector<RawAnnotation>{a}), Error);
}

TEST_CASE("round trip on random annotation sets") {
  std::mt19937_64 rng(42);
  const std::vector<std::string> labels = {"Justification", "Conclusion", "Collective",
                                           "Property", "Unknown-Label"};
  for (int trial = 0; trial < 200; ++trial) {
    const size_t len = 5 + rng() % 40;
    std::vector<std::string> glyphs;
    for (size_t i = 0; i < len; ++i) glyphs.push_back(kGlyphs[rng() % kGlyphs.size()]);
    const Document doc = ParseDocument("r", Join(glyphs, 0, len));
    REQUIRE(doc.length() == len);

    std::vector<RawAnnotation> anns;
    const int n = static_cast<int>(rng() % 6);
    for (int k = 0; k < n; ++k) {
      RawAnnotation a;
      a.ann_id = "T" + std::to_string(k + 1);
      a.label = labels[rng() % labels.size()];
      size_t pos = rng() % (len - 1);
      const int frags = 1 + static_cast<int>(rng() % 3);
      for (int f = 0; f < frags && pos < len; ++f) {
        const size_t end = pos + 1 + rng() % std::min<size_t>(4, len - pos);
        a.fragments.push_back({pos, std::min(end, len)});
        pos = a.fragments.back().end + 1 + rng() % 3;
      }
      for (size_t f = 0; f < a.fragments.size(); ++f) {
        if (f) a.surface += " ";
        a.surface += Join(glyphs, a.fragments[f].start, a.fragments[f].end);
      }
      if (rng() % 2) a.attributes["Type"] = "Fact";
      if (rng() % 3 == 0) a.attributes["Flag"] = "";
      if (rng() % 3 == 0) a.notes.push_back({"CN-B", "note " + std::to_string(trial)});
      anns.push_back(std::move(a));
    }
    const std::string text = SerializeAnnotations(anns);
    const auto parsed = ParseAnnotations(text, doc);
    REQUIRE(parsed == anns);
    // Canonical form is a fixed point.
    CHECK(SerializeAnnotations(parsed) == text);
    for (const RawAnnotation &a : parsed) CHECK(JoinedSurface(doc, a.fragments) == a.surface);
  }
}

TEST_CASE("files on disk") {
  const auto dir = std::filesystem::temp_directory_path() / "cnarg_standoff_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "tw.txt", std::ios::binary) << "Build walls";
    std::ofstream(dir / "tw.ann", std::ios::binary) << "T1\tConclusion 0 5\tBuild\n";
  }
  const Document doc = ParseDocumentFile(dir / "tw.txt");
  CHECK(doc.id() == "tw");
  CHECK(ParseAnnotationsFile(dir / "tw.ann", doc).size() == 1);
  CHECK_THROWS_AS(ParseDocumentFile(dir / "missing.txt"), Error);
  std::filesystem::remove_all(dir);
}
