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

#ifndef CNARG_TESTS_SUPPORT_VALIDATION_FIXTURES_H_
#define CNARG_TESTS_SUPPORT_VALIDATION_FIXTURES_H_

#include <string>
#include <vector>

#include "cnarg/scheme.h"

namespace cnarg::testing {

struct ValidationFixture {
  std::string name;
  IssueCode expected;
  Document doc;
  std::vector<RawAnnotation> raw;  // used for kUnknownLabel only
  AnnotatedTweet tweet;
};

// Issues found by the same path as the validate command: label check on the
// raw annotations when present, scheme validation of the tweet otherwise.
std::vector<ValidationIssue> IssuesOf(const ValidationFixture &fixture);

// One fixture per IssueCode, each breaking exactly the rule it is named after.
std::vector<ValidationFixture> AdversarialFixtures();

// Tweets that satisfy every rule.
std::vector<AnnotatedTweet> CleanFixtures();

// "Migrants are criminals so close the borders #EU" with J, C, Collective,
// Property, both pivot sides, types and A/B/C counter-narratives.
AnnotatedTweet BaseTweet(const std::string &id = "base");

}  // namespace cnarg::testing

#endif  // CNARG_TESTS_SUPPORT_VALIDATION_FIXTURES_H_
