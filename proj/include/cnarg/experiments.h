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

#ifndef CNARG_EXPERIMENTS_H_
#define CNARG_EXPERIMENTS_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cnarg/embeddings.h"
#include "cnarg/logreg.h"
#include "cnarg/scheme.h"
#include "cnarg/token_projection.h"
#include "cnarg/vocabulary.h"

namespace cnarg {

// Declaration order is the row order of the results table.
enum class TaskName {
  kArgVsNonArg,
  kJustification,
  kConclusion,
  kTypeJust,
  kTypeConc,
  kCollective,
  kProperty,
  kPivot,
};

inline constexpr TaskName kAllTasks[] = {
    TaskName::kArgVsNonArg, TaskName::kJustification, TaskName::kConclusion,
    TaskName::kTypeJust,    TaskName::kTypeConc,      TaskName::kCollective,
    TaskName::kProperty,    TaskName::kPivot,
};

std::string_view TaskNameString(TaskName task);
std::optional<TaskName> TaskFromName(std::string_view name);

enum class Granularity { kTweet, kToken };
enum class Metric { kTargetF1, kMacroF1 };

struct TaskSpec {
  TaskName name = TaskName::kJustification;
  Granularity granularity = Granularity::kToken;
  Metric metric = Metric::kTargetF1;
  std::vector<Category> conditioning;
};

// The unconditioned spec for `task`.
TaskSpec DefaultTaskSpec(TaskName task);
// The spec with gold conditioning: Collective on Property; Pivot and both
// type tasks on Justification and Conclusion. Other tasks have none.
TaskSpec ConditionedTaskSpec(TaskName task);
bool HasConditionedVariant(TaskName task);

enum class ModelFamily { kLrBow, kLrEmbed };
std::string_view ModelFamilyName(ModelFamily family);
std::optional<ModelFamily> ModelFamilyFromName(std::string_view name);

struct Split {
  std::vector<size_t> train;
  std::vector<size_t> dev;
  std::vector<size_t> test;
};

// (train, dev, test) sizes: 770/100/100 for 970 items, otherwise
// 79/10.5/10.5 percent with largest-remainder rounding (ties to the earlier
// part). Throws kCorpusTooSmall below 10 items.
std::array<size_t, 3> SplitSizes(size_t n);

// Fisher-Yates shuffle of 0..n-1 driven by mt19937_64(seed), cut by
// SplitSizes.
Split MakeSplits(size_t n, uint64_t seed);

// Best regularisation settings found by grid search, keyed by family name,
// then "conditioned"/"unconditioned", then task name.
struct HyperparameterLedger {
  std::map<std::string, std::map<std::string, std::map<std::string, double>>> values;

  std::optional<double> Find(ModelFamily family, bool conditioned, TaskName task) const;
  static HyperparameterLedger FromJson(std::string_view json);
  static HyperparameterLedger FromFile(const std::filesystem::path &path);
};

struct ExperimentOptions {
  std::vector<double> grid = {1.0, 0.1, 0.2, 0.5};
  std::vector<uint64_t> seeds = {1, 2, 3};
  int window = 2;
  int min_count = 1;
  TokenizerOptions tokenizer;
  // Required for ModelFamily::kLrEmbed.
  const EmbeddingTable *embeddings = nullptr;
  // When set, the ledger's value replaces the grid for tasks it lists.
  const HyperparameterLedger *ledger = nullptr;
  TrainOptions train;
  int threads = 1;
};

struct RunResult {
  uint64_t seed = 0;
  double reg_inverse = 0.0;  // selected on dev
  double dev_score = 0.0;
  double precision = 0.0;  // test
  double recall = 0.0;
  double f1 = 0.0;
  size_t train_items = 0;
  size_t dev_items = 0;
  size_t test_items = 0;
  int iterations = 0;
};

struct ExperimentResult {
  TaskSpec task;
  ModelFamily family = ModelFamily::kLrBow;
  std::vector<RunResult> runs;
  double mean_f1 = 0.0;
  double std_f1 = 0.0;  // population form
  double mean_precision = 0.0;
  double mean_recall = 0.0;

  bool conditioned() const { return !task.conditioning.empty(); }
};

// Mean and population standard deviation over the runs.
void Aggregate(ExperimentResult *result);

// A model with everything needed to featurize new input.
struct TrainedModel {
  TaskSpec task;
  ModelFamily family = ModelFamily::kLrBow;
  Vocabulary vocab;
  int window = 2;
  bool include_punct = true;
  size_t embedding_dimension = 0;
  LogRegModel model;
};

struct SeedRun {
  RunResult result;
  TrainedModel model;
};

// One seed of the protocol: split, build the vocabulary on train, fit every
// grid value on train, keep the best dev score (first in grid order on ties),
// score it on test. `corpus` is used in the given order.
SeedRun RunSeed(std::span<const AnnotatedTweet> corpus, const TaskSpec &task,
                ModelFamily family, const ExperimentOptions &options,
                uint64_t seed);

// All seeds of one task. The corpus is sorted by tweet id first, so input
// order does not matter. Errors are rethrown with the task and seed added.
ExperimentResult RunTask(std::span<const AnnotatedTweet> corpus, const TaskSpec &task,
                         ModelFamily family, const ExperimentOptions &options);

// Several tasks; (task, seed) jobs run on options.threads workers. With
// `models`, (*models)[task][seed index] receives each selected model.
std::vector<ExperimentResult> RunTasks(std::span<const AnnotatedTweet> corpus,
                                       std::span<const TaskSpec> tasks,
                                       ModelFamily family,
                                       const ExperimentOptions &options,
                                       std::vector<std::vector<TrainedModel>> *models =
                                           nullptr);

// Unconditioned and conditioned results for each task with a conditioned
// variant, in pairs.
std::vector<ExperimentResult> RunConditionedSuite(std::span<const AnnotatedTweet> corpus,
                                                  ModelFamily family,
                                                  const ExperimentOptions &options);

// Predicted labels for every item of `corpus` (token tasks: concatenated
// token labels in tweet order), with the gold labels alongside.
struct Evaluation {
  std::vector<int> gold;
  std::vector<int> predicted;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};
Evaluation Evaluate(const TrainedModel &model, std::span<const AnnotatedTweet> corpus,
                    const EmbeddingTable *embeddings);

// Results table, rows in task order (unconditioned before conditioned).
std::string FormatReport(std::span<const ExperimentResult> results);
std::string ReportJson(std::span<const ExperimentResult> results);

// Versioned JSON model file. Load throws kIncompatibleModel on a format or
// version mismatch, a vocabulary whose hash differs from the stored one, or
// (with `embeddings`) a different embedding dimension.
std::string SaveModelJson(const TrainedModel &model);
TrainedModel LoadModelJson(std::string_view json, const EmbeddingTable *embeddings);

}  // namespace cnarg

#endif  // CNARG_EXPERIMENTS_H_
