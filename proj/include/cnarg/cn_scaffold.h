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

#ifndef CNARG_CN_SCAFFOLD_H_
#define CNARG_CN_SCAFFOLD_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cnarg/scheme.h"

namespace cnarg {

// Template strings with named slots in braces. Slots: {justification},
// {conclusion}, {pivot_justification}, {pivot_conclusion}, {collective},
// {property}. A slot filled from several components joins their surfaces
// with " and ".
struct ScaffoldTemplates {
  std::string type_a;
  std::string type_a_pivot;  // appended after type_a when both pivot sides exist
  std::string type_b;
  std::string type_b_no_collective;
  std::string type_c_fact;
  std::string type_c_value;
  std::string type_c_policy;

  static ScaffoldTemplates Default();
  // Keys missing from the file keep their default.
  static ScaffoldTemplates FromJson(std::string_view json);
  static ScaffoldTemplates FromFile(const std::filesystem::path &path);
  std::string ToJson() const;
};

struct Scaffold {
  CnType cn_type = CnType::kA;
  std::string prompt;
  std::vector<std::string> slots_used;

  bool operator==(const Scaffold &) const = default;
};

// Replaces every {name} with its value. Throws kInvalidArgument on an
// unknown or unterminated slot.
std::string FillTemplate(std::string_view tmpl,
                         std::span<const std::pair<std::string, std::string>> slots);

// Questions the step from justification to conclusion. None when either is
// missing. Throws kNotArgumentative.
std::optional<Scaffold> ScaffoldTypeA(const AnnotatedTweet &tweet,
                                      const ScaffoldTemplates &templates =
                                          ScaffoldTemplates::Default());

// Denies the link between collective and property; none without an explicit
// Property. A Property that is blank after trimming yields none and a
// warning. Throws kNotArgumentative.
std::optional<Scaffold> ScaffoldTypeB(const AnnotatedTweet &tweet,
                                      const ScaffoldTemplates &templates =
                                          ScaffoldTemplates::Default(),
                                      std::vector<std::string> *warnings = nullptr);

// Attacks the justification according to its type. Throws kNotArgumentative,
// or kMissingType when the justification type is unset.
std::optional<Scaffold> ScaffoldTypeC(const AnnotatedTweet &tweet,
                                      const ScaffoldTemplates &templates =
                                          ScaffoldTemplates::Default());

struct ScaffoldRecord {
  std::string tweet_id;
  Scaffold scaffold;
};

struct ScaffoldBatch {
  std::vector<ScaffoldRecord> records;
  std::vector<std::string> warnings;
  // Type C skipped for argumentative tweets without a justification type.
  int missing_type = 0;
};

// All scaffolds for the argumentative tweets of `corpus`, in corpus order.
ScaffoldBatch ScaffoldCorpus(std::span<const AnnotatedTweet> corpus,
                             const ScaffoldTemplates &templates);

// One JSON object per line: {"tweet_id", "cn_type", "prompt", "slots"}.
std::string ScaffoldsToJsonl(std::span<const ScaffoldRecord> records);
// Tweet text followed by its scaffolds, one block per tweet.
std::string ScaffoldReport(std::span<const AnnotatedTweet> corpus,
                           std::span<const ScaffoldRecord> records);

}  // namespace cnarg

#endif  // CNARG_CN_SCAFFOLD_H_
