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

#ifndef CNARG_AGREEMENT_H_
#define CNARG_AGREEMENT_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cnarg/scheme.h"
#include "cnarg/token_projection.h"

namespace cnarg {

// Two annotators' labels for the same items. Binary categories use {0, 1};
// proposition types use the PropositionType index.
struct LabelSequencePair {
  std::string category;
  std::vector<int> a;
  std::vector<int> b;
};

// kappa = (p_o - p_e) / (1 - p_e), p_e from the product of the marginals.
// Returns 1 when p_o == 1 (including the constant-and-identical case).
// Throws kLengthMismatch / kEmptyPair.
double CohenKappa(const LabelSequencePair &pair);

struct PrecisionRecallF1 {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

enum class TruthSide { kA, kB };

// Target-class (label 1) scores with one side as ground truth. Undefined
// ratios (no predicted or no true positives) score 0, except that two
// sequences with no positives at all score 1.
PrecisionRecallF1 PairwiseF1(const LabelSequencePair &pair, TruthSide truth);

// Mean of the per-class scores over `num_classes` classes (all classes
// counted, 0 for undefined ratios).
PrecisionRecallF1 MacroF1(const LabelSequencePair &pair, TruthSide truth,
                          int num_classes);

// Plain scores of predictions against gold, used for model evaluation:
// undefined ratios are 0 with no special-casing.
PrecisionRecallF1 TargetClassScores(std::span<const int> gold,
                                    std::span<const int> predicted, int target = 1);
PrecisionRecallF1 MacroScores(std::span<const int> gold,
                              std::span<const int> predicted, int num_classes);

enum class AgreementRow {
  kCollective,
  kProperty,
  kPivot,
  kJustification,
  kConclusion,
  kArgumentative,
  kTypeConclusion,
  kTypeJustification,
};

inline constexpr AgreementRow kAllAgreementRows[] = {
    AgreementRow::kCollective,    AgreementRow::kProperty,
    AgreementRow::kPivot,         AgreementRow::kJustification,
    AgreementRow::kConclusion,    AgreementRow::kArgumentative,
    AgreementRow::kTypeConclusion, AgreementRow::kTypeJustification,
};

std::string_view AgreementRowName(AgreementRow row);

struct CategoryAgreement {
  AgreementRow row = AgreementRow::kCollective;
  double kappa = 0.0;
  double precision = 0.0;  // annotator A as truth
  double recall = 0.0;
  double f1 = 0.0;
  int n_items = 0;
  // Label distribution of each annotator, indexed by label.
  std::vector<int> marginals_a;
  std::vector<int> marginals_b;
  // Present when a third "model" corpus was compared against annotator A.
  std::optional<double> model_f1;
};

struct AgreementReport {
  std::vector<CategoryAgreement> rows;  // in kAllAgreementRows order
  int tweets = 0;
  // Tweets left out of the type rows because the annotators disagreed on
  // argumentativeness (or a type was missing).
  int type_rows_excluded = 0;

  const CategoryAgreement &Row(AgreementRow row) const;
};

struct AgreementOptions {
  TokenizerOptions tokenizer;
  // Per-side pivot evaluation instead of the merged pivot category.
  bool pivot_per_side = false;
};

// Pairs the label sequences of one row across two corpora with identical
// tweet id sets (order-independent). Throws kTweetSetMismatch.
LabelSequencePair BuildPair(std::span<const AnnotatedTweet> corpus_a,
                            std::span<const AnnotatedTweet> corpus_b,
                            AgreementRow row, const AgreementOptions &options = {},
                            int *excluded = nullptr);

AgreementReport ComputeAgreement(std::span<const AnnotatedTweet> corpus_a,
                                 std::span<const AnnotatedTweet> corpus_b,
                                 const AgreementOptions &options = {});

// Adds the model-F1 row: `predictions` scored against annotator A.
void AddModelRow(std::span<const AnnotatedTweet> corpus_a,
                 std::span<const AnnotatedTweet> predictions,
                 const AgreementOptions &options, AgreementReport *report);

std::string FormatAgreementTable(const AgreementReport &report);
std::string AgreementToJson(const AgreementReport &report);

// Overlap-tolerant span agreement for the pivot category. Every maximal run
// of labelled tokens is a unit; a unit counts as matched when it overlaps any
// unit of the other annotator in the same tweet. precision = matched B units
// / B units, recall = matched A units / A units. Not part of the table.
PrecisionRecallF1 SoftSpanF1(std::span<const AnnotatedTweet> corpus_a,
                             std::span<const AnnotatedTweet> corpus_b,
                             Category category,
                             const TokenizerOptions &tokenizer = {});

}  // namespace cnarg

#endif  // CNARG_AGREEMENT_H_
