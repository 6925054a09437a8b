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

#include "cnarg/agreement.h"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>

#include "cnarg/corpus.h"
#include "cnarg/error.h"
#include "metric_oracle.h"
#include "synthetic.h"
#include "validation_fixtures.h"

using namespace cnarg;
using cnarg::testing::Confusion;

namespace {

const std::filesystem::path kData = CNARG_TEST_DATA;

std::vector<AnnotatedTweet> Load(const std::filesystem::path &root) {
  LoadedCorpus c = LoadCorpus(root, LabelMapping::Default());
  REQUIRE(c.errors.empty());
  return c.tweets;
}

LabelSequencePair RandomPair(std::mt19937_64 &rng, int classes, size_t n) {
  LabelSequencePair p{"r", {}, {}};
  for (size_t i = 0; i < n; ++i) {
    p.a.push_back(static_cast<int>(rng() % classes));
    // Correlated second sequence so values cover the whole range.
    p.b.push_back(rng() % 3 == 0 ? static_cast<int>(rng() % classes) : p.a.back());
  }
  return p;
}

}  // namespace

TEST_CASE("kappa examples") {
  CHECK(CohenKappa({"x", {1, 1, 0, 0}, {1, 0, 0, 0}}) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(CohenKappa({"x", {2, 0, 1}, {2, 0, 1}}) == 1.0);
  // Both constant and identical: perfect observed agreement.
  CHECK(CohenKappa({"x", {0, 0, 0}, {0, 0, 0}}) == 1.0);
  // Constant but different: p_o = 0, p_e = 0.
  CHECK(CohenKappa({"x", {0, 0}, {1, 1}}) == 0.0);
  CHECK_THROWS_AS(CohenKappa({"x", {1}, {1, 0}}), Error);
  CHECK_THROWS_AS(CohenKappa({"x", {}, {}}), Error);
}

TEST_CASE("kappa and F1 match the confusion-matrix oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int classes = trial % 2 == 0 ? 2 : 3;
    const size_t n = 1 + rng() % 50;
    const LabelSequencePair p = RandomPair(rng, classes, n);
    const Confusion conf(p.a, p.b, classes);
    CHECK(std::abs(CohenKappa(p) - conf.Kappa()) < 1e-9);
    // Symmetry holds exactly.
    CHECK(CohenKappa(p) == CohenKappa({"r", p.b, p.a}));
    double p_o = 0;
    for (size_t i = 0; i < n; ++i) p_o += p.a[i] == p.b[i];
    p_o /= n;
    CHECK(CohenKappa(p) <= p_o + 1e-12);
    CHECK((CohenKappa(p) == 1.0) == (p.a == p.b));

    const PrecisionRecallF1 t = TargetClassScores(p.a, p.b, 1);
    CHECK(std::abs(t.precision - conf.Precision(1)) < 1e-9);
    CHECK(std::abs(t.recall - conf.Recall(1)) < 1e-9);
    CHECK(std::abs(t.f1 - conf.F1(1)) < 1e-9);
    if (classes == 2) {
      const PrecisionRecallF1 f = PairwiseF1(p, TruthSide::kA);
      const bool unused = conf.m[1][1] + conf.m[0][1] + conf.m[1][0] == 0;
      CHECK(std::abs(f.f1 - (unused ? 1.0 : conf.F1(1))) < 1e-9);
      // Swapping truth swaps precision and recall.
      const PrecisionRecallF1 g = PairwiseF1(p, TruthSide::kB);
      CHECK(std::abs(g.precision - f.recall) < 1e-12);
      CHECK(std::abs(g.recall - f.precision) < 1e-12);
    } else {
      double macro = 0;
      for (int c = 0; c < 3; ++c) macro += conf.F1(c);
      CHECK(std::abs(MacroScores(p.a, p.b, 3).f1 - macro / 3) < 1e-9);
    }
  }
}

TEST_CASE("kappa of independent labels at matching marginals is near zero") {
  std::mt19937_64 rng(5);
  std::bernoulli_distribution coin(0.3);
  LabelSequencePair p{"mc", {}, {}};
  for (int i = 0; i < 10000; ++i) {
    p.a.push_back(coin(rng));
    p.b.push_back(coin(rng));
  }
  CHECK(std::abs(CohenKappa(p)) < 0.05);
}

TEST_CASE("corpus against itself gives all ones") {
  const auto corpus = cnarg::testing::SyntheticCorpus({.tweets = 60, .seed = 2});
  const AgreementReport r = ComputeAgreement(corpus, corpus);
  CHECK(r.tweets == 60);
  CHECK(r.type_rows_excluded == 0);
  REQUIRE(r.rows.size() == 8);
  for (const CategoryAgreement &row : r.rows) {
    CHECK(row.kappa == 1.0);
    CHECK(row.f1 == 1.0);
    CHECK(row.n_items > 0);
    CHECK(row.marginals_a == row.marginals_b);
  }
}

TEST_CASE("planted disagreements match the enumerating oracle") {
  const auto a = Load(kData / "agreement5" / "a");
  const auto b = Load(kData / "agreement5" / "b");
  std::ifstream in(kData / "agreement5" / "expected.json");
  const nlohmann::json expected = nlohmann::json::parse(in);
  const AgreementReport r = ComputeAgreement(a, b);
  CHECK(r.tweets == expected["tweets"].get<int>());
  CHECK(r.type_rows_excluded == expected["type_rows_excluded"].get<int>());
  for (const CategoryAgreement &row : r.rows) {
    const std::string name(AgreementRowName(row.row));
    CAPTURE(name);
    const auto &e = expected["rows"][name];
    CHECK(row.n_items == e["n_items"].get<int>());
    CHECK(std::abs(row.kappa - e["kappa"].get<double>()) < 1e-12);
    CHECK(std::abs(row.precision - e["precision"].get<double>()) < 1e-12);
    CHECK(std::abs(row.recall - e["recall"].get<double>()) < 1e-12);
    CHECK(std::abs(row.f1 - e["f1"].get<double>()) < 1e-12);
  }
  // Word labels are pooled; the per-tweet mean is a different number.
  const double mean = expected["justification_per_tweet_mean_kappa"].get<double>();
  CHECK(std::abs(r.Row(AgreementRow::kJustification).kappa - mean) > 0.01);

  // Input order does not matter.
  std::vector<AnnotatedTweet> reversed(b.rbegin(), b.rend());
  const AgreementReport r2 = ComputeAgreement(a, reversed);
  for (size_t i = 0; i < r.rows.size(); ++i) CHECK(r.rows[i].kappa == r2.rows[i].kappa);
}

TEST_CASE("tweet set mismatch") {
  const auto corpus = cnarg::testing::SyntheticCorpus({.tweets = 12, .seed = 2});
  std::vector<AnnotatedTweet> fewer(corpus.begin(), corpus.end() - 1);
  try {
    ComputeAgreement(corpus, fewer);
    FAIL("expected TweetSetMismatch");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kTweetSetMismatch);
  }
}

TEST_CASE("pivot per side doubles the items") {
  const auto a = Load(kData / "agreement5" / "a");
  const auto b = Load(kData / "agreement5" / "b");
  AgreementOptions per_side;
  per_side.pivot_per_side = true;
  const auto merged = BuildPair(a, b, AgreementRow::kPivot);
  const auto split = BuildPair(a, b, AgreementRow::kPivot, per_side);
  CHECK(split.a.size() == 2 * merged.a.size());
}

TEST_CASE("table and json layout") {
  const auto a = Load(kData / "agreement5" / "a");
  const auto b = Load(kData / "agreement5" / "b");
  AgreementReport r = ComputeAgreement(a, b);
  std::string table = FormatAgreementTable(r);
  CHECK(table.find("Collect.") < table.find("Type Just."));
  CHECK(table.find("Cohen's kappa") != std::string::npos);
  CHECK(table.find("human annotator F1") != std::string::npos);
  CHECK(table.find("automatic annotator F1") == std::string::npos);
  CHECK(table.find(".59") != std::string::npos);  // Conclusion kappa 0.588
  CHECK(table.find("0.") == std::string::npos);

  AddModelRow(a, a, {}, &r);
  table = FormatAgreementTable(r);
  CHECK(table.find("automatic annotator F1") != std::string::npos);
  for (const CategoryAgreement &row : r.rows) CHECK(row.model_f1 == 1.0);

  const nlohmann::json j = nlohmann::json::parse(AgreementToJson(r));
  CHECK(j["rows"].size() == 8);
  CHECK(j["rows"][0]["category"] == "Collective");
  CHECK(j["rows"][7]["marginals_a"].size() == 3);
}

TEST_CASE("soft span F1 counts overlapping spans as matches") {
  const auto a = Load(kData / "agreement5" / "a");
  const auto b = Load(kData / "agreement5" / "b");
  // Every conclusion span of one annotator overlaps one of the other's,
  // except where b marked no argument at all.
  const PrecisionRecallF1 s = SoftSpanF1(a, b, Category::kConclusion);
  CHECK(s.precision == 1.0);
  CHECK(s.recall == doctest::Approx(0.75));
  const PrecisionRecallF1 self = SoftSpanF1(a, a, Category::kProperty);
  CHECK(self.f1 == 1.0);
}
