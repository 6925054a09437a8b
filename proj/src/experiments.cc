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

#include "cnarg/experiments.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numeric>
#include <random>
#include <thread>

#include <json.hpp>

#include "cnarg/agreement.h"
#include "cnarg/error.h"
#include "cnarg/features.h"
#include "cnarg/file_util.h"

namespace cnarg {
namespace {

using nlohmann::json;

constexpr std::string_view kModelFormat = "cnarg-logreg";
constexpr int kModelVersion = 1;

Category TaskCategory(TaskName task) {
  switch (task) {
    case TaskName::kJustification: return Category::kJustification;
    case TaskName::kConclusion: return Category::kConclusion;
    case TaskName::kCollective: return Category::kCollective;
    case TaskName::kProperty: return Category::kProperty;
    case TaskName::kPivot: return Category::kPivot;
    default: break;
  }
  throw Error(ErrorCode::kInvalidArgument,
              std::string(TaskNameString(task)) + " is not a token task");
}

int NumClasses(const TaskSpec &task) { return task.metric == Metric::kMacroF1 ? 3 : 2; }

// Per-tweet inputs for one task, aligned with the corpus.
struct Prepared {
  std::vector<SequenceTweet> sequences;  // token tasks
  std::vector<std::optional<TweetItem>> items;  // tweet tasks; nullopt = not used
  std::vector<int> labels;
};

Prepared Prepare(std::span<const AnnotatedTweet> corpus, const TaskSpec &task,
                 const TokenizerOptions &tokenizer) {
  Prepared p;
  if (task.granularity == Granularity::kToken) {
    p.sequences =
        ToDataset(corpus, TaskCategory(task.name), task.conditioning, tokenizer).tweets;
    return p;
  }
  for (const AnnotatedTweet &tweet : corpus) {
    std::optional<int> label;
    switch (task.name) {
      case TaskName::kArgVsNonArg:
        label = tweet.argumentative ? 0 : 1;
        break;
      case TaskName::kTypeJust:
        if (tweet.argumentative && tweet.justification_type) {
          label = static_cast<int>(*tweet.justification_type);
        }
        break;
      case TaskName::kTypeConc:
        if (tweet.argumentative && tweet.conclusion_type) {
          label = static_cast<int>(*tweet.conclusion_type);
        }
        break;
      default:
        throw Error(ErrorCode::kInvalidArgument, "token task with tweet granularity");
    }
    if (!label) {
      p.items.emplace_back();
      p.labels.push_back(-1);
      continue;
    }
    const TokenizedTweet tokens = Tokenize(tweet.doc, tokenizer);
    TweetItem item{tweet.id(), {}, {}};
    for (const Token &t : tokens.tokens) item.tokens.push_back(t.surface);
    for (Category c : task.conditioning) {
      const TokenLabeling lab = Project(tweet, tokens, c);
      std::vector<std::string> inside;
      for (size_t i = 0; i < tokens.tokens.size(); ++i) {
        if (lab.labels[i]) inside.push_back(tokens.tokens[i].surface);
      }
      item.conditioning_tokens.push_back(std::move(inside));
    }
    p.items.push_back(std::move(item));
    p.labels.push_back(*label);
  }
  return p;
}

std::vector<std::vector<std::string>> VocabSource(const Prepared &p,
                                                  std::span<const size_t> indices) {
  std::vector<std::vector<std::string>> out;
  for (size_t i : indices) {
    if (!p.sequences.empty()) {
      std::vector<std::string> toks;
      for (const SequenceRow &r : p.sequences[i].rows) toks.push_back(r.token);
      out.push_back(std::move(toks));
    } else if (p.items[i]) {
      out.push_back(p.items[i]->tokens);
    }
  }
  return out;
}

Dataset BuildDataset(const Prepared &p, std::span<const size_t> indices,
                     const TaskSpec &task, const Vocabulary &vocab,
                     const EmbeddingTable *embeddings, int window) {
  Dataset d;
  d.num_classes = NumClasses(task);
  if (task.granularity == Granularity::kToken) {
    const TokenFeaturizer f(vocab, embeddings, window, task.conditioning.size());
    d.dimension = f.dimension();
    for (size_t i : indices) {
      const SequenceTweet &seq = p.sequences[i];
      for (size_t pos = 0; pos < seq.rows.size(); ++pos) {
        d.rows.push_back(f.Featurize(seq, pos));
        d.labels.push_back(seq.rows[pos].label);
      }
    }
  } else {
    const TweetFeaturizer f(vocab, embeddings, task.conditioning.size());
    d.dimension = f.dimension();
    for (size_t i : indices) {
      if (!p.items[i]) continue;
      d.rows.push_back(f.Featurize(*p.items[i]));
      d.labels.push_back(p.labels[i]);
    }
  }
  return d;
}

PrecisionRecallF1 Score(const TaskSpec &task, std::span<const int> gold,
                        std::span<const int> predicted) {
  return task.metric == Metric::kMacroF1 ? MacroScores(gold, predicted, 3)
                                         : TargetClassScores(gold, predicted, 1);
}

std::vector<int> PredictAll(const LogRegModel &model, const Dataset &data) {
  std::vector<int> out;
  out.reserve(data.rows.size());
  for (const SparseVector &x : data.rows) out.push_back(Predict(model, x).label);
  return out;
}

const EmbeddingTable *EmbeddingsFor(ModelFamily family, const EmbeddingTable *table) {
  if (family == ModelFamily::kLrBow) return nullptr;
  if (!table) {
    throw Error(ErrorCode::kInvalidArgument, "lr-embed needs an embedding table");
  }
  return table;
}

std::vector<AnnotatedTweet> SortedById(std::span<const AnnotatedTweet> corpus) {
  std::vector<AnnotatedTweet> sorted(corpus.begin(), corpus.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const AnnotatedTweet &a, const AnnotatedTweet &b) {
                     return a.id() < b.id();
                   });
  return sorted;
}

// Runs jobs [0, n) on `threads` workers; the first failure (by job index)
// is rethrown after all workers finish.
template <typename Fn>
void ParallelFor(size_t n, int threads, Fn fn) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const size_t count = std::clamp<size_t>(threads, 1, std::max<size_t>(n, 1));
  std::vector<std::thread> pool;
  for (size_t t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread &t : pool) t.join();
  for (const std::exception_ptr &e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string ConditioningLabel(const TaskSpec &task) {
  if (task.conditioning.empty()) return "-";
  std::string out;
  for (Category c : task.conditioning) out += "+" + std::string(CategoryName(c));
  return out;
}

std::vector<const ExperimentResult *> InTableOrder(
    std::span<const ExperimentResult> results) {
  std::vector<const ExperimentResult *> order;
  for (const ExperimentResult &r : results) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(),
                   [](const ExperimentResult *a, const ExperimentResult *b) {
                     if (a->task.name != b->task.name) return a->task.name < b->task.name;
                     if (a->conditioned() != b->conditioned()) return !a->conditioned();
                     return a->family < b->family;
                   });
  return order;
}

std::string Fixed(double v, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

}  // namespace

std::string_view TaskNameString(TaskName task) {
  switch (task) {
    case TaskName::kArgVsNonArg: return "ArgVsNonArg";
    case TaskName::kJustification: return "Justification";
    case TaskName::kConclusion: return "Conclusion";
    case TaskName::kTypeJust: return "TypeJust";
    case TaskName::kTypeConc: return "TypeConc";
    case TaskName::kCollective: return "Collective";
    case TaskName::kProperty: return "Property";
    case TaskName::kPivot: return "Pivot";
  }
  return "?";
}

std::optional<TaskName> TaskFromName(std::string_view name) {
  for (TaskName t : kAllTasks) {
    if (TaskNameString(t) == name) return t;
  }
  return std::nullopt;
}

TaskSpec DefaultTaskSpec(TaskName task) {
  TaskSpec spec;
  spec.name = task;
  switch (task) {
    case TaskName::kArgVsNonArg:
      spec.granularity = Granularity::kTweet;
      break;
    case TaskName::kTypeJust:
    case TaskName::kTypeConc:
      spec.granularity = Granularity::kTweet;
      spec.metric = Metric::kMacroF1;
      break;
    default:
      spec.granularity = Granularity::kToken;
      break;
  }
  return spec;
}

bool HasConditionedVariant(TaskName task) {
  return task == TaskName::kTypeJust || task == TaskName::kTypeConc ||
         task == TaskName::kCollective || task == TaskName::kPivot;
}

TaskSpec ConditionedTaskSpec(TaskName task) {
  TaskSpec spec = DefaultTaskSpec(task);
  if (task == TaskName::kCollective) {
    spec.conditioning = {Category::kProperty};
  } else if (HasConditionedVariant(task)) {
    spec.conditioning = {Category::kJustification, Category::kConclusion};
  }
  return spec;
}

std::string_view ModelFamilyName(ModelFamily family) {
  return family == ModelFamily::kLrBow ? "lr-bow" : "lr-embed";
}

std::optional<ModelFamily> ModelFamilyFromName(std::string_view name) {
  if (name == "lr-bow") return ModelFamily::kLrBow;
  if (name == "lr-embed") return ModelFamily::kLrEmbed;
  return std::nullopt;
}

std::array<size_t, 3> SplitSizes(size_t n) {
  if (n < 10) {
    throw Error(ErrorCode::kCorpusTooSmall,
                std::to_string(n) + " items; at least 10 are needed");
  }
  if (n == 970) return {770, 100, 100};
  // Shares in thousandths keep the arithmetic exact.
  constexpr size_t kShare[3] = {790, 105, 105};
  std::array<size_t, 3> sizes{};
  std::array<size_t, 3> remainder{};
  size_t assigned = 0;
  for (int k = 0; k < 3; ++k) {
    sizes[k] = n * kShare[k] / 1000;
    remainder[k] = n * kShare[k] % 1000;
    assigned += sizes[k];
  }
  std::array<int, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return remainder[a] > remainder[b]; });
  for (size_t k = 0; assigned < n; ++k, ++assigned) ++sizes[order[k]];
  return sizes;
}

Split MakeSplits(size_t n, uint64_t seed) {
  const auto sizes = SplitSizes(n);
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  for (size_t i = n - 1; i > 0; --i) {
    const size_t j = static_cast<size_t>(rng() % (i + 1));
    std::swap(perm[i], perm[j]);
  }
  Split s;
  s.train.assign(perm.begin(), perm.begin() + sizes[0]);
  s.dev.assign(perm.begin() + sizes[0], perm.begin() + sizes[0] + sizes[1]);
  s.test.assign(perm.begin() + sizes[0] + sizes[1], perm.end());
  return s;
}

std::optional<double> HyperparameterLedger::Find(ModelFamily family, bool conditioned,
                                                 TaskName task) const {
  auto f = values.find(std::string(ModelFamilyName(family)));
  if (f == values.end()) return std::nullopt;
  auto c = f->second.find(conditioned ? "conditioned" : "unconditioned");
  if (c == f->second.end()) return std::nullopt;
  auto t = c->second.find(std::string(TaskNameString(task)));
  if (t == c->second.end()) return std::nullopt;
  return t->second;
}

HyperparameterLedger HyperparameterLedger::FromJson(std::string_view text) {
  HyperparameterLedger ledger;
  try {
    const json j = json::parse(text);
    for (const auto &[family, by_cond] : j.items()) {
      if (!ModelFamilyFromName(family)) {
        throw Error(ErrorCode::kInvalidArgument, "unknown model family " + family);
      }
      for (const auto &[cond, by_task] : by_cond.items()) {
        if (cond != "conditioned" && cond != "unconditioned") {
          throw Error(ErrorCode::kInvalidArgument, "unknown key " + cond);
        }
        for (const auto &[task, value] : by_task.items()) {
          if (!TaskFromName(task)) {
            throw Error(ErrorCode::kInvalidArgument, "unknown task " + task);
          }
          ledger.values[family][cond][task] = value.get<double>();
        }
      }
    }
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kInvalidArgument, std::string("hyperparameters: ") + e.what());
  }
  return ledger;
}

HyperparameterLedger HyperparameterLedger::FromFile(const std::filesystem::path &path) {
  return FromJson(ReadFile(path));
}

void Aggregate(ExperimentResult *r) {
  const double n = static_cast<double>(r->runs.size());
  r->mean_f1 = r->std_f1 = r->mean_precision = r->mean_recall = 0.0;
  if (r->runs.empty()) return;
  for (const RunResult &run : r->runs) {
    r->mean_f1 += run.f1;
    r->mean_precision += run.precision;
    r->mean_recall += run.recall;
  }
  r->mean_f1 /= n;
  r->mean_precision /= n;
  r->mean_recall /= n;
  double var = 0.0;
  for (const RunResult &run : r->runs) var += (run.f1 - r->mean_f1) * (run.f1 - r->mean_f1);
  r->std_f1 = std::sqrt(var / n);
}

SeedRun RunSeed(std::span<const AnnotatedTweet> corpus, const TaskSpec &task,
                ModelFamily family, const ExperimentOptions &options, uint64_t seed) {
  const EmbeddingTable *emb = EmbeddingsFor(family, options.embeddings);
  const Split split = MakeSplits(corpus.size(), seed);
  const Prepared prep = Prepare(corpus, task, options.tokenizer);
  Vocabulary vocab = Vocabulary::Build(VocabSource(prep, split.train), options.min_count);
  const Dataset train = BuildDataset(prep, split.train, task, vocab, emb, options.window);
  const Dataset dev = BuildDataset(prep, split.dev, task, vocab, emb, options.window);
  const Dataset test = BuildDataset(prep, split.test, task, vocab, emb, options.window);

  std::vector<double> grid = options.grid;
  if (options.ledger) {
    if (auto c = options.ledger->Find(family, !task.conditioning.empty(), task.name)) {
      grid = {*c};
    }
  }
  if (grid.empty()) throw Error(ErrorCode::kInvalidArgument, "empty grid");

  SeedRun out;
  bool have = false;
  for (double c : grid) {
    TrainOptions t = options.train;
    t.reg_inverse = c;
    LogRegModel model = TrainLogReg(train, t);
    const std::vector<int> pred = PredictAll(model, dev);
    const double score = Score(task, dev.labels, pred).f1;
    if (!have || score > out.result.dev_score) {
      have = true;
      out.result.reg_inverse = c;
      out.result.dev_score = score;
      out.model.model = std::move(model);
    }
  }
  const std::vector<int> pred = PredictAll(out.model.model, test);
  const PrecisionRecallF1 s = Score(task, test.labels, pred);
  out.result.seed = seed;
  out.result.precision = s.precision;
  out.result.recall = s.recall;
  out.result.f1 = s.f1;
  out.result.train_items = train.rows.size();
  out.result.dev_items = dev.rows.size();
  out.result.test_items = test.rows.size();
  out.result.iterations = out.model.model.iterations;

  out.model.task = task;
  out.model.family = family;
  out.model.vocab = std::move(vocab);
  out.model.window = options.window;
  out.model.include_punct = options.tokenizer.include_punct;
  out.model.embedding_dimension = emb ? emb->dimension() : 0;
  return out;
}

std::vector<ExperimentResult> RunTasks(std::span<const AnnotatedTweet> corpus,
                                       std::span<const TaskSpec> tasks,
                                       ModelFamily family,
                                       const ExperimentOptions &options,
                                       std::vector<std::vector<TrainedModel>> *models) {
  const std::vector<AnnotatedTweet> sorted = SortedById(corpus);
  const size_t n_seeds = options.seeds.size();
  std::vector<ExperimentResult> results(tasks.size());
  for (size_t t = 0; t < tasks.size(); ++t) {
    results[t].task = tasks[t];
    results[t].family = family;
    results[t].runs.resize(n_seeds);
  }
  if (models) models->assign(tasks.size(), std::vector<TrainedModel>(n_seeds));
  ParallelFor(tasks.size() * n_seeds, options.threads, [&](size_t job) {
    const size_t t = job / n_seeds;
    const uint64_t seed = options.seeds[job % n_seeds];
    try {
      SeedRun run = RunSeed(sorted, tasks[t], family, options, seed);
      results[t].runs[job % n_seeds] = run.result;
      if (models) (*models)[t][job % n_seeds] = std::move(run.model);
    } catch (const Error &e) {
      throw Error(e.code(), "task " + std::string(TaskNameString(tasks[t].name)) +
                                ConditioningLabel(tasks[t]) + " seed " +
                                std::to_string(seed) + ": " + e.message());
    }
  });
  for (ExperimentResult &r : results) Aggregate(&r);
  return results;
}

ExperimentResult RunTask(std::span<const AnnotatedTweet> corpus, const TaskSpec &task,
                         ModelFamily family, const ExperimentOptions &options) {
  return RunTasks(corpus, std::span<const TaskSpec>(&task, 1), family, options)[0];
}

std::vector<ExperimentResult> RunConditionedSuite(std::span<const AnnotatedTweet> corpus,
                                                  ModelFamily family,
                                                  const ExperimentOptions &options) {
  std::vector<TaskSpec> tasks;
  for (TaskName t : kAllTasks) {
    if (!HasConditionedVariant(t)) continue;
    tasks.push_back(DefaultTaskSpec(t));
    tasks.push_back(ConditionedTaskSpec(t));
  }
  return RunTasks(corpus, tasks, family, options);
}

Evaluation Evaluate(const TrainedModel &model, std::span<const AnnotatedTweet> corpus,
                    const EmbeddingTable *embeddings) {
  const EmbeddingTable *emb = model.embedding_dimension > 0 ? embeddings : nullptr;
  if (model.embedding_dimension > 0 &&
      (!emb || emb->dimension() != model.embedding_dimension)) {
    throw Error(ErrorCode::kIncompatibleModel,
                "model expects embeddings of dimension " +
                    std::to_string(model.embedding_dimension));
  }
  TokenizerOptions tok;
  tok.include_punct = model.include_punct;
  const Prepared prep = Prepare(corpus, model.task, tok);
  std::vector<size_t> all(corpus.size());
  std::iota(all.begin(), all.end(), 0);
  const Dataset data =
      BuildDataset(prep, all, model.task, model.vocab, emb, model.window);
  if (data.dimension != model.model.dimension) {
    throw Error(ErrorCode::kIncompatibleModel, "feature dimension differs from the model");
  }
  Evaluation out;
  out.gold = data.labels;
  out.predicted = PredictAll(model.model, data);
  const PrecisionRecallF1 s = Score(model.task, out.gold, out.predicted);
  out.precision = s.precision;
  out.recall = s.recall;
  out.f1 = s.f1;
  return out;
}

std::string FormatReport(std::span<const ExperimentResult> results) {
  char line[256];
  std::string out;
  std::snprintf(line, sizeof(line), "%-14s %-9s %-28s %-16s %-6s %-6s %s\n", "task",
                "family", "conditioning", "F1 (mean±std)", "P", "R", "C per seed");
  out += line;
  for (const ExperimentResult *r : InTableOrder(results)) {
    std::string cs;
    for (const RunResult &run : r->runs) {
      if (!cs.empty()) cs += "/";
      cs += Fixed(run.reg_inverse, 1);
    }
    const std::string f1 = Fixed(r->mean_f1, 3) + "±" + Fixed(r->std_f1, 3);
    std::snprintf(line, sizeof(line), "%-14s %-9s %-28s %-16s %-6s %-6s %s\n",
                  std::string(TaskNameString(r->task.name)).c_str(),
                  std::string(ModelFamilyName(r->family)).c_str(),
                  ConditioningLabel(r->task).c_str(), f1.c_str(),
                  Fixed(r->mean_precision, 3).c_str(), Fixed(r->mean_recall, 3).c_str(),
                  cs.c_str());
    out += line;
  }
  return out;
}

std::string ReportJson(std::span<const ExperimentResult> results) {
  json arr = json::array();
  for (const ExperimentResult *r : InTableOrder(results)) {
    json cond = json::array();
    for (Category c : r->task.conditioning) cond.push_back(CategoryName(c));
    json runs = json::array();
    for (const RunResult &run : r->runs) {
      runs.push_back({{"seed", run.seed},
                      {"reg_inverse", run.reg_inverse},
                      {"dev_score", run.dev_score},
                      {"precision", run.precision},
                      {"recall", run.recall},
                      {"f1", run.f1},
                      {"train_items", run.train_items},
                      {"dev_items", run.dev_items},
                      {"test_items", run.test_items},
                      {"iterations", run.iterations}});
    }
    arr.push_back({{"task", TaskNameString(r->task.name)},
                   {"family", ModelFamilyName(r->family)},
                   {"granularity", r->task.granularity == Granularity::kToken ? "token" : "tweet"},
                   {"metric", r->task.metric == Metric::kMacroF1 ? "macro_f1" : "target_f1"},
                   {"conditioning", cond},
                   {"mean_f1", r->mean_f1},
                   {"std_f1", r->std_f1},
                   {"mean_precision", r->mean_precision},
                   {"mean_recall", r->mean_recall},
                   {"runs", runs}});
  }
  return arr.dump(2) + "\n";
}

std::string SaveModelJson(const TrainedModel &m) {
  json cond = json::array();
  for (Category c : m.task.conditioning) cond.push_back(CategoryName(c));
  json j = {{"format", kModelFormat},
            {"version", kModelVersion},
            {"task", TaskNameString(m.task.name)},
            {"conditioning", cond},
            {"family", ModelFamilyName(m.family)},
            {"window", m.window},
            {"include_punct", m.include_punct},
            {"embedding_dimension", m.embedding_dimension},
            {"vocab", {{"tokens", m.vocab.tokens()}, {"hash", m.vocab.Hash()}}},
            {"num_classes", m.model.num_classes},
            {"dimension", m.model.dimension},
            {"reg_inverse", m.model.reg_inverse},
            {"class_weights", m.model.class_weights},
            {"iterations", m.model.iterations},
            {"gradient_norm", m.model.gradient_norm},
            {"weights", m.model.weights},
            {"bias", m.model.bias}};
  return j.dump() + "\n";
}

TrainedModel LoadModelJson(std::string_view text, const EmbeddingTable *embeddings) {
  TrainedModel m;
  try {
    const json j = json::parse(text);
    if (j.at("format") != kModelFormat || j.at("version") != kModelVersion) {
      throw Error(ErrorCode::kIncompatibleModel, "not a version-1 cnarg-logreg model");
    }
    const auto task = TaskFromName(j.at("task").get<std::string>());
    const auto family = ModelFamilyFromName(j.at("family").get<std::string>());
    if (!task || !family) throw Error(ErrorCode::kIncompatibleModel, "unknown task or family");
    m.task = DefaultTaskSpec(*task);
    for (const auto &c : j.at("conditioning")) {
      const auto cat = CategoryFromName(c.get<std::string>());
      if (!cat) throw Error(ErrorCode::kIncompatibleModel, "unknown conditioning category");
      m.task.conditioning.push_back(*cat);
    }
    m.family = *family;
    m.window = j.at("window").get<int>();
    m.include_punct = j.at("include_punct").get<bool>();
    m.embedding_dimension = j.at("embedding_dimension").get<size_t>();
    m.vocab = Vocabulary::FromTokens(j.at("vocab").at("tokens").get<std::vector<std::string>>());
    if (m.vocab.Hash() != j.at("vocab").at("hash").get<std::string>()) {
      throw Error(ErrorCode::kIncompatibleModel, "vocabulary hash mismatch");
    }
    m.model.num_classes = j.at("num_classes").get<int>();
    m.model.dimension = j.at("dimension").get<size_t>();
    m.model.reg_inverse = j.at("reg_inverse").get<double>();
    m.model.class_weights = j.at("class_weights").get<std::vector<double>>();
    m.model.iterations = j.at("iterations").get<int>();
    m.model.gradient_norm = j.at("gradient_norm").get<double>();
    m.model.weights = j.at("weights").get<std::vector<double>>();
    m.model.bias = j.at("bias").get<std::vector<double>>();
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kIncompatibleModel, std::string("model file: ") + e.what());
  }
  if (m.model.weights.size() != m.model.dimension * m.model.num_classes ||
      m.model.bias.size() != static_cast<size_t>(m.model.num_classes)) {
    throw Error(ErrorCode::kIncompatibleModel, "weight shape does not match dimension");
  }
  if (embeddings && m.embedding_dimension > 0 &&
      embeddings->dimension() != m.embedding_dimension) {
    throw Error(ErrorCode::kIncompatibleModel,
                "embedding dimension " + std::to_string(embeddings->dimension()) +
                    " != model's " + std::to_string(m.embedding_dimension));
  }
  return m;
}

}  // namespace cnarg
