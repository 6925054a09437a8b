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

#include <algorithm>
#include <cstdio>
#include <map>

#include <json.hpp>

#include "cnarg/error.h"

namespace cnarg {
namespace {

void CheckPair(const LabelSequencePair &pair) {
  if (pair.a.size() != pair.b.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                pair.category + ": " + std::to_string(pair.a.size()) + " vs " +
                    std::to_string(pair.b.size()) + " labels");
  }
  if (pair.a.empty()) throw Error(ErrorCode::kEmptyPair, pair.category);
}

double Ratio(double num, double den) { return den == 0.0 ? 0.0 : num / den; }

double F1(double p, double r) { return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r); }

struct ClassCounts {
  long tp = 0;
  long fp = 0;
  long fn = 0;
};

// Counts for class `c`, truth on `gold`.
ClassCounts Count(std::span<const int> gold, std::span<const int> pred, int c) {
  ClassCounts k;
  for (size_t i = 0; i < gold.size(); ++i) {
    const bool g = gold[i] == c;
    const bool p = pred[i] == c;
    k.tp += g && p;
    k.fp += !g && p;
    k.fn += g && !p;
  }
  return k;
}

std::vector<const AnnotatedTweet *> SortedById(std::span<const AnnotatedTweet> c) {
  std::vector<const AnnotatedTweet *> out;
  for (const AnnotatedTweet &t : c) out.push_back(&t);
  std::sort(out.begin(), out.end(),
            [](const AnnotatedTweet *x, const AnnotatedTweet *y) {
              return x->id() < y->id();
            });
  return out;
}

std::vector<std::pair<const AnnotatedTweet *, const AnnotatedTweet *>> Align(
    std::span<const AnnotatedTweet> corpus_a, std::span<const AnnotatedTweet> corpus_b) {
  const auto a = SortedById(corpus_a);
  const auto b = SortedById(corpus_b);
  bool same = a.size() == b.size();
  for (size_t i = 0; same && i < a.size(); ++i) same = a[i]->id() == b[i]->id();
  if (!same) {
    throw Error(ErrorCode::kTweetSetMismatch,
                "annotator corpora cover different tweet ids (" +
                    std::to_string(a.size()) + " vs " + std::to_string(b.size()) +
                    " tweets)");
  }
  std::vector<std::pair<const AnnotatedTweet *, const AnnotatedTweet *>> out;
  for (size_t i = 0; i < a.size(); ++i) out.emplace_back(a[i], b[i]);
  return out;
}

std::optional<Category> RowCategory(AgreementRow row) {
  switch (row) {
    case AgreementRow::kCollective: return Category::kCollective;
    case AgreementRow::kProperty: return Category::kProperty;
    case AgreementRow::kPivot: return Category::kPivot;
    case AgreementRow::kJustification: return Category::kJustification;
    case AgreementRow::kConclusion: return Category::kConclusion;
    default: return std::nullopt;
  }
}

int RowClasses(AgreementRow row) {
  return row == AgreementRow::kTypeConclusion ||
                 row == AgreementRow::kTypeJustification
             ? 3
             : 2;
}

std::vector<int> Marginals(const std::vector<int> &labels, int num_classes) {
  std::vector<int> m(num_classes, 0);
  for (int l : labels) {
    if (l >= 0 && l < num_classes) ++m[l];
  }
  return m;
}

std::string Fixed(double v) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  std::string s = buf;
  // Table style: ".67", "-.05".
  if (s.rfind("0.", 0) == 0) s.erase(0, 1);
  if (s.rfind("-0.", 0) == 0) s.erase(1, 1);
  return s;
}

}  // namespace

double CohenKappa(const LabelSequencePair &pair) {
  CheckPair(pair);
  const double n = static_cast<double>(pair.a.size());
  std::map<int, long> count_a, count_b;
  long agree = 0;
  for (size_t i = 0; i < pair.a.size(); ++i) {
    agree += pair.a[i] == pair.b[i];
    ++count_a[pair.a[i]];
    ++count_b[pair.b[i]];
  }
  if (agree == static_cast<long>(pair.a.size())) return 1.0;
  const double p_o = agree / n;
  double p_e = 0.0;
  for (const auto &[label, ca] : count_a) {
    auto it = count_b.find(label);
    if (it != count_b.end()) p_e += (ca / n) * (it->second / n);
  }
  return (p_o - p_e) / (1.0 - p_e);
}

PrecisionRecallF1 PairwiseF1(const LabelSequencePair &pair, TruthSide truth) {
  CheckPair(pair);
  const auto &gold = truth == TruthSide::kA ? pair.a : pair.b;
  const auto &pred = truth == TruthSide::kA ? pair.b : pair.a;
  const ClassCounts k = Count(gold, pred, 1);
  if (k.tp + k.fp + k.fn == 0) return {1.0, 1.0, 1.0};
  const double p = Ratio(k.tp, k.tp + k.fp);
  const double r = Ratio(k.tp, k.tp + k.fn);
  return {p, r, F1(p, r)};
}

PrecisionRecallF1 MacroF1(const LabelSequencePair &pair, TruthSide truth,
                          int num_classes) {
  CheckPair(pair);
  const auto &gold = truth == TruthSide::kA ? pair.a : pair.b;
  const auto &pred = truth == TruthSide::kA ? pair.b : pair.a;
  PrecisionRecallF1 sum;
  int classes = 0;
  for (int c = 0; c < num_classes; ++c) {
    const ClassCounts k = Count(gold, pred, c);
    // Classes neither side ever used do not take part in the average.
    if (k.tp + k.fp + k.fn == 0) continue;
    const double p = Ratio(k.tp, k.tp + k.fp);
    const double r = Ratio(k.tp, k.tp + k.fn);
    sum.precision += p;
    sum.recall += r;
    sum.f1 += F1(p, r);
    ++classes;
  }
  if (classes == 0) return {1.0, 1.0, 1.0};
  return {sum.precision / classes, sum.recall / classes, sum.f1 / classes};
}

PrecisionRecallF1 TargetClassScores(std::span<const int> gold,
                                    std::span<const int> predicted, int target) {
  if (gold.size() != predicted.size()) {
    throw Error(ErrorCode::kLengthMismatch, "gold vs predicted");
  }
  const ClassCounts k = Count(gold, predicted, target);
  const double p = Ratio(k.tp, k.tp + k.fp);
  const double r = Ratio(k.tp, k.tp + k.fn);
  return {p, r, F1(p, r)};
}

PrecisionRecallF1 MacroScores(std::span<const int> gold,
                              std::span<const int> predicted, int num_classes) {
  if (gold.size() != predicted.size()) {
    throw Error(ErrorCode::kLengthMismatch, "gold vs predicted");
  }
  PrecisionRecallF1 sum;
  for (int c = 0; c < num_classes; ++c) {
    const PrecisionRecallF1 s = TargetClassScores(gold, predicted, c);
    sum.precision += s.precision;
    sum.recall += s.recall;
    sum.f1 += s.f1;
  }
  return {sum.precision / num_classes, sum.recall / num_classes,
          sum.f1 / num_classes};
}

std::string_view AgreementRowName(AgreementRow row) {
  switch (row) {
    case AgreementRow::kCollective: return "Collective";
    case AgreementRow::kProperty: return "Property";
    case AgreementRow::kPivot: return "Pivot";
    case AgreementRow::kJustification: return "Justification";
    case AgreementRow::kConclusion: return "Conclusion";
    case AgreementRow::kArgumentative: return "Argumentative";
    case AgreementRow::kTypeConclusion: return "TypeConclusion";
    case AgreementRow::kTypeJustification: return "TypeJustification";
  }
  return "";
}

const CategoryAgreement &AgreementReport::Row(AgreementRow row) const {
  for (const CategoryAgreement &r : rows) {
    if (r.row == row) return r;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no row " + std::string(AgreementRowName(row)));
}

LabelSequencePair BuildPair(std::span<const AnnotatedTweet> corpus_a,
                            std::span<const AnnotatedTweet> corpus_b,
                            AgreementRow row, const AgreementOptions &options,
                            int *excluded) {
  LabelSequencePair pair{std::string(AgreementRowName(row)), {}, {}};
  int skipped = 0;
  for (const auto &[ta, tb] : Align(corpus_a, corpus_b)) {
    if (auto category = RowCategory(row)) {
      std::vector<Category> categories{*category};
      if (*category == Category::kPivot && options.pivot_per_side) {
        categories = {Category::kPivotJustificationSide,
                      Category::kPivotConclusionSide};
      }
      const TokenizedTweet tokens = Tokenize(ta->doc, options.tokenizer);
      TokenizedTweet tokens_b = tokens;
      tokens_b.tweet_id = tb->id();
      for (Category c : categories) {
        const TokenLabeling la = Project(*ta, tokens, c);
        const TokenLabeling lb = Project(*tb, tokens_b, c);
        pair.a.insert(pair.a.end(), la.labels.begin(), la.labels.end());
        pair.b.insert(pair.b.end(), lb.labels.begin(), lb.labels.end());
      }
    } else if (row == AgreementRow::kArgumentative) {
      pair.a.push_back(ta->argumentative ? 1 : 0);
      pair.b.push_back(tb->argumentative ? 1 : 0);
    } else {
      const bool conclusion = row == AgreementRow::kTypeConclusion;
      const auto &type_a = conclusion ? ta->conclusion_type : ta->justification_type;
      const auto &type_b = conclusion ? tb->conclusion_type : tb->justification_type;
      if (!ta->argumentative && !tb->argumentative) continue;
      if (!ta->argumentative || !tb->argumentative || !type_a || !type_b) {
        ++skipped;
        continue;
      }
      pair.a.push_back(static_cast<int>(*type_a));
      pair.b.push_back(static_cast<int>(*type_b));
    }
  }
  if (excluded) *excluded = skipped;
  return pair;
}

AgreementReport ComputeAgreement(std::span<const AnnotatedTweet> corpus_a,
                                 std::span<const AnnotatedTweet> corpus_b,
                                 const AgreementOptions &options) {
  AgreementReport report;
  report.tweets = static_cast<int>(Align(corpus_a, corpus_b).size());
  for (AgreementRow row : kAllAgreementRows) {
    int excluded = 0;
    const LabelSequencePair pair = BuildPair(corpus_a, corpus_b, row, options, &excluded);
    const int classes = RowClasses(row);
    CategoryAgreement result;
    result.row = row;
    result.n_items = static_cast<int>(pair.a.size());
    result.marginals_a = Marginals(pair.a, classes);
    result.marginals_b = Marginals(pair.b, classes);
    if (!pair.a.empty()) {
      result.kappa = CohenKappa(pair);
      const PrecisionRecallF1 s = classes == 2 ? PairwiseF1(pair, TruthSide::kA)
                                               : MacroF1(pair, TruthSide::kA, classes);
      result.precision = s.precision;
      result.recall = s.recall;
      result.f1 = s.f1;
    }
    if (classes == 3) report.type_rows_excluded = std::max(report.type_rows_excluded, excluded);
    report.rows.push_back(std::move(result));
  }
  return report;
}

void AddModelRow(std::span<const AnnotatedTweet> corpus_a,
                 std::span<const AnnotatedTweet> predictions,
                 const AgreementOptions &options, AgreementReport *report) {
  for (CategoryAgreement &row : report->rows) {
    const LabelSequencePair pair = BuildPair(corpus_a, predictions, row.row, options);
    if (pair.a.empty()) {
      row.model_f1 = 0.0;
      continue;
    }
    const int classes = RowClasses(row.row);
    row.model_f1 = (classes == 2 ? PairwiseF1(pair, TruthSide::kA)
                                 : MacroF1(pair, TruthSide::kA, classes))
                       .f1;
  }
}

std::string FormatAgreementTable(const AgreementReport &report) {
  static const char *kHeaders[] = {"Collect.", "Prop.", "Pivot", "Justif.",
                                   "Conc.",    "Arg.",  "Type Conc.", "Type Just."};
  std::string out;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%-22s", "");
  out += buf;
  for (const char *h : kHeaders) {
    std::snprintf(buf, sizeof(buf), " %10s", h);
    out += buf;
  }
  out += "\n";
  auto add_row = [&](const char *name, auto value) {
    std::snprintf(buf, sizeof(buf), "%-22s", name);
    out += buf;
    for (const CategoryAgreement &row : report.rows) {
      std::snprintf(buf, sizeof(buf), " %10s", value(row).c_str());
      out += buf;
    }
    out += "\n";
  };
  add_row("Cohen's kappa", [](const CategoryAgreement &r) { return Fixed(r.kappa); });
  add_row("human annotator F1", [](const CategoryAgreement &r) { return Fixed(r.f1); });
  const bool has_model = std::any_of(report.rows.begin(), report.rows.end(),
                                     [](const auto &r) { return r.model_f1.has_value(); });
  if (has_model) {
    add_row("automatic annotator F1", [](const CategoryAgreement &r) {
      return r.model_f1 ? Fixed(*r.model_f1) : std::string("-");
    });
  }
  add_row("items", [](const CategoryAgreement &r) { return std::to_string(r.n_items); });
  out += "tweets: " + std::to_string(report.tweets) +
         "; excluded from type rows: " + std::to_string(report.type_rows_excluded) +
         "\n";
  return out;
}

std::string AgreementToJson(const AgreementReport &report) {
  nlohmann::json root;
  root["tweets"] = report.tweets;
  root["type_rows_excluded"] = report.type_rows_excluded;
  root["rows"] = nlohmann::json::array();
  for (const CategoryAgreement &r : report.rows) {
    nlohmann::json row{{"category", std::string(AgreementRowName(r.row))},
                       {"kappa", r.kappa},
                       {"precision", r.precision},
                       {"recall", r.recall},
                       {"f1", r.f1},
                       {"n_items", r.n_items},
                       {"marginals_a", r.marginals_a},
                       {"marginals_b", r.marginals_b}};
    if (r.model_f1) row["model_f1"] = *r.model_f1;
    root["rows"].push_back(std::move(row));
  }
  return root.dump(2) + "\n";
}

PrecisionRecallF1 SoftSpanF1(std::span<const AnnotatedTweet> corpus_a,
                             std::span<const AnnotatedTweet> corpus_b,
                             Category category, const TokenizerOptions &tokenizer) {
  struct Unit {
    size_t begin, end;  // token indices [begin, end)
  };
  auto units = [](const std::vector<uint8_t> &labels) {
    std::vector<Unit> out;
    for (size_t i = 0; i < labels.size();) {
      if (!labels[i]) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < labels.size() && labels[j]) ++j;
      out.push_back({i, j});
      i = j;
    }
    return out;
  };
  auto matched = [](const std::vector<Unit> &xs, const std::vector<Unit> &ys) {
    long m = 0;
    for (const Unit &x : xs) {
      m += std::any_of(ys.begin(), ys.end(), [&x](const Unit &y) {
        return x.begin < y.end && y.begin < x.end;
      });
    }
    return m;
  };
  long units_a = 0, units_b = 0, matched_a = 0, matched_b = 0;
  for (const auto &[ta, tb] : Align(corpus_a, corpus_b)) {
    const TokenizedTweet tokens = Tokenize(ta->doc, tokenizer);
    TokenizedTweet tokens_b = tokens;
    tokens_b.tweet_id = tb->id();
    const auto ua = units(Project(*ta, tokens, category).labels);
    const auto ub = units(Project(*tb, tokens_b, category).labels);
    units_a += ua.size();
    units_b += ub.size();
    matched_a += matched(ua, ub);
    matched_b += matched(ub, ua);
  }
  if (units_a == 0 && units_b == 0) return {1.0, 1.0, 1.0};
  const double p = Ratio(matched_b, units_b);
  const double r = Ratio(matched_a, units_a);
  return {p, r, F1(p, r)};
}

}  // namespace cnarg
