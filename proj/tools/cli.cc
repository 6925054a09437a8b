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

#include "cli.h"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cnarg/agreement.h"
#include "cnarg/cn_scaffold.h"
#include "cnarg/corpus.h"
#include "cnarg/embeddings.h"
#include "cnarg/error.h"
#include "cnarg/experiments.h"
#include "cnarg/file_util.h"
#include "cnarg/scheme.h"
#include "cnarg/stats.h"
#include "cnarg/version.h"

namespace cnarg::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr const char *kCorpusEnv = "CNARG_CORPUS";

// Flat JSON object -> CLI11 config items; arrays become repeated inputs.
class JsonConfig : public CLI::Config {
 public:
  std::string to_config(const CLI::App *, bool, bool, std::string) const override {
    return "{}\n";
  }

  std::vector<CLI::ConfigItem> from_config(std::istream &input) const override {
    json j;
    try {
      input >> j;
    } catch (const json::exception &e) {
      throw CLI::ConversionError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw CLI::ConversionError("config: expected a JSON object");
    std::vector<CLI::ConfigItem> items;
    for (const auto &[key, value] : j.items()) {
      CLI::ConfigItem item;
      item.name = key;
      if (value.is_array()) {
        for (const json &v : value) item.inputs.push_back(Scalar(key, v));
      } else {
        item.inputs.push_back(Scalar(key, value));
      }
      items.push_back(std::move(item));
    }
    return items;
  }

 private:
  static std::string Scalar(const std::string &key, const json &v) {
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number()) return v.dump();
    throw CLI::ConversionError("config: unsupported value for " + key);
  }
};

struct Options {
  std::string corpus;
  std::string mapping;
  std::string out = "cnarg_out";
  std::string language;
  std::string a;
  std::string b;
  std::string predictions;
  std::string embeddings;
  std::string hyperparameters;
  std::string templates;
  std::string model;
  std::string family = "lr-bow";
  std::vector<std::string> tasks;
  std::vector<uint64_t> seeds = {1, 2, 3};
  std::vector<double> grid = {1.0, 0.1, 0.2, 0.5};
  int window = 2;
  int min_count = 1;
  int threads = 1;
  bool no_punct = false;
  bool pivot_per_side = false;
  bool conditioned = false;
  bool unconditioned_only = false;

  json Snapshot(const std::string &command) const {
    return {{"command", command},
            {"corpus", corpus},
            {"mapping", mapping},
            {"language", language},
            {"a", a},
            {"b", b},
            {"predictions", predictions},
            {"embeddings", embeddings},
            {"hyperparameters", hyperparameters},
            {"templates", templates},
            {"model", model},
            {"family", family},
            {"tasks", tasks},
            {"seeds", seeds},
            {"grid", grid},
            {"window", window},
            {"min_count", min_count},
            {"include_punct", !no_punct},
            {"pivot_per_side", pivot_per_side},
            {"conditioned", conditioned},
            {"unconditioned_only", unconditioned_only}};
  }
};

// Failures that map straight to an exit code.
struct Exit {
  int code;
  std::string message;
};

// Artifacts are written into a sibling staging directory that replaces the
// output directory in one rename once the manifest is written.
class OutputDir {
 public:
  explicit OutputDir(fs::path final_dir) : final_(std::move(final_dir)) {
    staging_ = final_;
    staging_ += ".partial";
    std::error_code ec;
    fs::remove_all(staging_, ec);
    fs::create_directories(staging_, ec);
    if (ec) throw Exit{kExitUsage, "cannot create " + staging_.string() + ": " + ec.message()};
  }

  void Write(const std::string &name, const std::string &content) {
    const fs::path path = staging_ / name;
    fs::create_directories(path.parent_path());
    WriteFileAtomic(path, content);
    artifacts_[name] = Sha256Hex(content);
  }

  const fs::path &staging() const { return staging_; }

  void Commit(const json &config, const std::string &corpus_hash, size_t tweets) {
    json manifest = {{"tool", "cnarg"},
                     {"version", kVersion},
                     {"config", config},
                     {"corpus_hash", corpus_hash},
                     {"corpus_tweets", tweets},
                     {"artifacts", artifacts_}};
    WriteFileAtomic(staging_ / "manifest.json", manifest.dump(2) + "\n");
    std::error_code ec;
    fs::remove_all(final_, ec);
    fs::rename(staging_, final_, ec);
    if (ec) throw Exit{kExitUsage, "cannot move output into " + final_.string()};
  }

 private:
  fs::path final_;
  fs::path staging_;
  std::map<std::string, std::string> artifacts_;
};

LabelMapping Mapping(const Options &o) {
  return o.mapping.empty() ? LabelMapping::Default() : LabelMapping::FromFile(o.mapping);
}

fs::path RequireDir(const std::string &path, const char *what) {
  if (path.empty()) throw Exit{kExitUsage, std::string("no ") + what + " given"};
  if (!fs::is_directory(path)) {
    throw Exit{kExitUsage, std::string(what) + " " + path + " is not a directory"};
  }
  return path;
}

std::optional<Language> LanguageFilter(const Options &o, const char *fallback) {
  const std::string lang = o.language.empty() ? fallback : o.language;
  if (lang == "all") return std::nullopt;
  return ParseLanguageCode(lang);
}

// Loads a corpus; load errors go to `err` and fail the command.
std::vector<AnnotatedTweet> Load(const fs::path &root, const LabelMapping &mapping,
                                 std::optional<Language> lang, std::ostream &err) {
  LoadedCorpus loaded = LoadCorpus(root, mapping);
  for (const LoadError &e : loaded.errors) err << e.path << ": " << e.message << "\n";
  if (!loaded.errors.empty()) {
    throw Exit{kExitFailure, std::to_string(loaded.errors.size()) +
                                 " file(s) under " + root.string() + " failed to load"};
  }
  if (!lang) return std::move(loaded.tweets);
  std::vector<AnnotatedTweet> kept;
  for (AnnotatedTweet &t : loaded.tweets) {
    if (t.doc.language() == *lang) kept.push_back(std::move(t));
  }
  return kept;
}

std::string SeverityName(Severity s) { return s == Severity::kError ? "error" : "warning"; }

int CmdIngest(const Options &o, std::ostream &out, std::ostream &err) {
  const fs::path root = RequireDir(o.corpus, "corpus");
  const LabelMapping mapping = Mapping(o);
  LoadedCorpus loaded = LoadCorpus(root, mapping);
  std::string errors;
  for (const LoadError &e : loaded.errors) {
    errors += e.path + "\t" + std::string(ErrorCodeName(e.code)) + "\t" + e.message + "\n";
    err << e.path << ": " << e.message << "\n";
  }
  OutputDir dir(o.out);
  WriteCorpus(dir.staging() / "corpus", loaded.tweets);
  dir.Write("load_errors.tsv", errors);
  dir.Write("mapping.json", mapping.ToJson());
  const std::string hash = CorpusHash(loaded.tweets);
  dir.Commit(o.Snapshot("ingest"), hash, loaded.tweets.size());
  out << "ingested " << loaded.tweets.size() << " tweets, " << loaded.errors.size()
      << " failed\n";
  return loaded.errors.empty() ? kExitOk : kExitFailure;
}

int CmdValidate(const Options &o, std::ostream &out, std::ostream &) {
  const fs::path root = RequireDir(o.corpus, "corpus");
  const LabelMapping mapping = Mapping(o);
  std::vector<ValidationIssue> issues;
  std::vector<AnnotatedTweet> tweets;
  std::string report;
  int load_failures = 0;
  for (const fs::path &path : FindDocuments(root)) {
    const std::string id = DocumentId(root, path);
    try {
      const RawEntry entry = LoadRawEntry(root, path, mapping);
      auto labels = CheckLabels(entry.doc, entry.annotations, mapping);
      if (!labels.empty()) {
        issues.insert(issues.end(), labels.begin(), labels.end());
        continue;
      }
      tweets.push_back(FromRaw(entry.doc, entry.annotations, mapping));
    } catch (const Error &e) {
      ++load_failures;
      report += "error\t" + id + "\t" + std::string(ErrorCodeName(e.code())) + "\t" +
                e.message() + "\n";
    }
  }
  auto more = ValidateCorpus(tweets);
  issues.insert(issues.end(), more.begin(), more.end());
  std::stable_sort(issues.begin(), issues.end(),
                   [](const ValidationIssue &x, const ValidationIssue &y) {
                     return x.tweet_id < y.tweet_id;
                   });
  int errors = load_failures, warnings = 0;
  for (const ValidationIssue &i : issues) {
    (i.severity == Severity::kError ? errors : warnings)++;
    report += SeverityName(i.severity) + "\t" + i.tweet_id + "\t" +
              std::string(IssueCodeName(i.code)) + "\t" + i.message + "\n";
  }
  OutputDir dir(o.out);
  dir.Write("validation.tsv", report);
  dir.Commit(o.Snapshot("validate"), CorpusHash(tweets), tweets.size());
  out << report;
  out << errors << " error(s), " << warnings << " warning(s)\n";
  return errors == 0 ? kExitOk : kExitFailure;
}

int CmdStats(const Options &o, std::ostream &out, std::ostream &err) {
  const auto tweets = Load(RequireDir(o.corpus, "corpus"), Mapping(o),
                           LanguageFilter(o, "all"), err);
  const StatsReport report = CorpusStats(tweets);
  const std::string text = FormatStatsText(report);
  OutputDir dir(o.out);
  dir.Write("stats.txt", text);
  dir.Write("stats.json", StatsToJson(report));
  dir.Commit(o.Snapshot("stats"), CorpusHash(tweets), tweets.size());
  out << text;
  return kExitOk;
}

int CmdAgreement(const Options &o, std::ostream &out, std::ostream &err) {
  const LabelMapping mapping = Mapping(o);
  const auto lang = LanguageFilter(o, "all");
  const auto a = Load(RequireDir(o.a, "--a corpus"), mapping, lang, err);
  const auto b = Load(RequireDir(o.b, "--b corpus"), mapping, lang, err);
  AgreementOptions options;
  options.tokenizer.include_punct = !o.no_punct;
  options.pivot_per_side = o.pivot_per_side;
  AgreementReport report = ComputeAgreement(a, b, options);
  std::string hash = CorpusHash(a) + CorpusHash(b);
  if (!o.predictions.empty()) {
    const auto p = Load(RequireDir(o.predictions, "--predictions corpus"), mapping, lang, err);
    AddModelRow(a, p, options, &report);
    hash += CorpusHash(p);
  }
  const std::string table = FormatAgreementTable(report);
  OutputDir dir(o.out);
  dir.Write("agreement.txt", table);
  dir.Write("agreement.json", AgreementToJson(report));
  dir.Commit(o.Snapshot("agreement"), Sha256Hex(hash), a.size());
  out << table;
  return kExitOk;
}

ExperimentOptions MakeExperimentOptions(const Options &o) {
  ExperimentOptions e;
  e.grid = o.grid;
  e.seeds = o.seeds;
  e.window = o.window;
  e.min_count = o.min_count;
  e.tokenizer.include_punct = !o.no_punct;
  e.threads = o.threads;
  return e;
}

ModelFamily Family(const Options &o) {
  const auto f = ModelFamilyFromName(o.family);
  if (!f) throw Exit{kExitUsage, "unknown model family '" + o.family + "'"};
  return *f;
}

std::vector<TaskSpec> SelectedTasks(const Options &o) {
  std::vector<TaskSpec> specs;
  std::vector<TaskName> names;
  if (o.tasks.empty()) names.assign(std::begin(kAllTasks), std::end(kAllTasks));
  for (const std::string &t : o.tasks) {
    const auto name = TaskFromName(t);
    if (!name) throw Exit{kExitUsage, "unknown task '" + t + "'"};
    names.push_back(*name);
  }
  for (TaskName n : names) {
    specs.push_back(o.conditioned ? ConditionedTaskSpec(n) : DefaultTaskSpec(n));
  }
  return specs;
}

struct ModelInputs {
  std::optional<EmbeddingTable> embeddings;
  std::optional<HyperparameterLedger> ledger;
};

void LoadModelInputs(const Options &o, ModelInputs *in, ExperimentOptions *e) {
  if (!o.embeddings.empty()) {
    in->embeddings = EmbeddingTable::Load(o.embeddings);
    e->embeddings = &*in->embeddings;
  }
  if (!o.hyperparameters.empty()) {
    in->ledger = HyperparameterLedger::FromFile(o.hyperparameters);
    e->ledger = &*in->ledger;
  }
}

std::string ModelFileName(const TaskSpec &task, uint64_t seed) {
  std::string name = std::string(TaskNameString(task.name));
  if (!task.conditioning.empty()) name += "-conditioned";
  return "models/" + name + "-seed" + std::to_string(seed) + ".json";
}

int CmdTrain(const Options &o, std::ostream &out, std::ostream &err) {
  const std::vector<TaskSpec> tasks = SelectedTasks(o);
  const ModelFamily family = Family(o);
  const auto tweets = Load(RequireDir(o.corpus, "corpus"), Mapping(o),
                           LanguageFilter(o, "en"), err);
  ExperimentOptions e = MakeExperimentOptions(o);
  ModelInputs inputs;
  LoadModelInputs(o, &inputs, &e);
  std::vector<std::vector<TrainedModel>> models;
  const auto results = RunTasks(tweets, tasks, family, e, &models);
  OutputDir dir(o.out);
  for (size_t t = 0; t < tasks.size(); ++t) {
    for (size_t s = 0; s < o.seeds.size(); ++s) {
      dir.Write(ModelFileName(tasks[t], o.seeds[s]), SaveModelJson(models[t][s]));
    }
  }
  const std::string table = FormatReport(results);
  dir.Write("report.txt", table);
  dir.Write("results.json", ReportJson(results));
  dir.Commit(o.Snapshot("train"), CorpusHash(tweets), tweets.size());
  out << table;
  return kExitOk;
}

int CmdEval(const Options &o, std::ostream &out, std::ostream &err) {
  const auto tweets = Load(RequireDir(o.corpus, "corpus"), Mapping(o),
                           LanguageFilter(o, "en"), err);
  ExperimentOptions e = MakeExperimentOptions(o);
  ModelInputs inputs;
  LoadModelInputs(o, &inputs, &e);
  OutputDir dir(o.out);
  if (!o.model.empty()) {
    const TrainedModel model = LoadModelJson(ReadFile(o.model), e.embeddings);
    const Evaluation ev = Evaluate(model, tweets, e.embeddings);
    const json j = {{"task", TaskNameString(model.task.name)},
                    {"items", ev.gold.size()},
                    {"precision", ev.precision},
                    {"recall", ev.recall},
                    {"f1", ev.f1}};
    dir.Write("eval.json", j.dump(2) + "\n");
    dir.Commit(o.Snapshot("eval"), CorpusHash(tweets), tweets.size());
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  const ModelFamily family = Family(o);
  std::vector<ExperimentResult> results;
  if (o.tasks.empty() && !o.conditioned) {
    std::vector<TaskSpec> specs;
    for (TaskName t : kAllTasks) specs.push_back(DefaultTaskSpec(t));
    if (!o.unconditioned_only) {
      for (TaskName t : kAllTasks) {
        if (HasConditionedVariant(t)) specs.push_back(ConditionedTaskSpec(t));
      }
    }
    results = RunTasks(tweets, specs, family, e);
  } else {
    results = RunTasks(tweets, SelectedTasks(o), family, e);
  }
  const std::string table = FormatReport(results);
  dir.Write("report.txt", table);
  dir.Write("results.json", ReportJson(results));
  dir.Commit(o.Snapshot("eval"), CorpusHash(tweets), tweets.size());
  out << table;
  return kExitOk;
}

int CmdScaffold(const Options &o, std::ostream &out, std::ostream &err) {
  const auto tweets = Load(RequireDir(o.corpus, "corpus"), Mapping(o),
                           LanguageFilter(o, "all"), err);
  const ScaffoldTemplates templates = o.templates.empty()
                                          ? ScaffoldTemplates::Default()
                                          : ScaffoldTemplates::FromFile(o.templates);
  const ScaffoldBatch batch = ScaffoldCorpus(tweets, templates);
  for (const std::string &w : batch.warnings) err << "warning: " << w << "\n";
  int counts[3] = {0, 0, 0};
  for (const ScaffoldRecord &r : batch.records) ++counts[static_cast<int>(r.scaffold.cn_type)];
  OutputDir dir(o.out);
  dir.Write("scaffolds.jsonl", ScaffoldsToJsonl(batch.records));
  dir.Write("scaffolds.txt", ScaffoldReport(tweets, batch.records));
  dir.Commit(o.Snapshot("scaffold"), CorpusHash(tweets), tweets.size());
  out << "type A: " << counts[0] << "\ntype B: " << counts[1] << "\ntype C: " << counts[2]
      << "\nno justification type: " << batch.missing_type << "\n";
  return kExitOk;
}

}  // namespace

int Run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Annotation, agreement, baseline and scaffolding tools for "
               "argument-annotated hate-speech tweets."};
  app.config_formatter(std::make_shared<JsonConfig>());
  app.set_config("--config", "", "JSON file with option values (flags override it)");
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Options o;
  if (const char *env = std::getenv(kCorpusEnv)) o.corpus = env;
  app.add_option("--corpus", o.corpus, std::string("corpus root (default $") + kCorpusEnv + ")");
  app.add_option("--mapping", o.mapping, "label mapping JSON");
  app.add_option("--out", o.out, "output directory")->capture_default_str();
  app.add_option("--language", o.language, "en, es or all");
  app.add_option("--a", o.a, "agreement: first annotator's corpus");
  app.add_option("--b", o.b, "agreement: second annotator's corpus");
  app.add_option("--predictions", o.predictions, "agreement: model output corpus");
  app.add_option("--embeddings", o.embeddings, "word-vector text file");
  app.add_option("--hyperparameters", o.hyperparameters,
                 "JSON of fixed C values per task (replaces the grid)");
  app.add_option("--templates", o.templates, "scaffold template JSON");
  app.add_option("--model", o.model, "eval: saved model to score");
  app.add_option("--family", o.family, "lr-bow or lr-embed")->capture_default_str();
  app.add_option("--tasks", o.tasks, "task names (default all)");
  app.add_option("--seeds", o.seeds, "split seeds")->capture_default_str();
  app.add_option("--grid", o.grid, "inverse regularisation values")->capture_default_str();
  app.add_option("--window", o.window, "token context window")->capture_default_str();
  app.add_option("--min-count", o.min_count, "vocabulary count cut-off")->capture_default_str();
  app.add_option("--threads", o.threads, "parallel training jobs")->capture_default_str();
  app.add_flag("--no-punct", o.no_punct, "drop punctuation-only tokens");
  app.add_flag("--pivot-per-side", o.pivot_per_side, "agreement: score pivot sides apart");
  app.add_flag("--conditioned", o.conditioned, "use gold conditioning where defined");
  app.add_flag("--unconditioned-only", o.unconditioned_only,
               "eval: skip the conditioned suite");

  std::map<CLI::App *, int (*)(const Options &, std::ostream &, std::ostream &)> commands;
  auto add = [&](const char *name, const char *help, auto fn) {
    CLI::App *sub = app.add_subcommand(name, help);
    sub->fallthrough();
    commands[sub] = fn;
  };
  add("ingest", "parse a corpus and write it back in canonical form", CmdIngest);
  add("validate", "check every tweet against the annotation scheme", CmdValidate);
  add("stats", "corpus statistics per language", CmdStats);
  add("agreement", "inter-annotator agreement table", CmdAgreement);
  add("train", "run the baseline protocol and save the selected models", CmdTrain);
  add("eval", "full results table, or score one saved model", CmdEval);
  add("scaffold", "counter-narrative scaffolds", CmdScaffold);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    for (const auto &[sub, fn] : commands) {
      if (sub->parsed()) return fn(o, out, err);
    }
    return kExitUsage;
  } catch (const Exit &e) {
    err << "cnarg: " << e.message << "\n";
    return e.code;
  } catch (const Error &e) {
    err << "cnarg: " << e.what() << "\n";
    return e.code() == ErrorCode::kIo || e.code() == ErrorCode::kInvalidArgument
               ? kExitUsage
               : kExitFailure;
  } catch (const std::exception &e) {
    err << "cnarg: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace cnarg::cli
