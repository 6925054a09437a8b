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

#ifndef CNARG_TESTS_SUPPORT_METRIC_ORACLE_H_
#define CNARG_TESTS_SUPPORT_METRIC_ORACLE_H_

#include <vector>

namespace cnarg::testing {

// Plain confusion-matrix arithmetic used as an oracle for the metric code.
// Rows are the first sequence (truth), columns the second.
struct Confusion {
  int classes = 0;
  std::vector<std::vector<long>> m;

  Confusion(const std::vector<int> &a, const std::vector<int> &b, int classes);
  double Kappa() const;
  // Precision, recall and F1 of class c; zero when undefined.
  double Precision(int c) const;
  double Recall(int c) const;
  double F1(int c) const;
  long Total() const;
};

}  // namespace cnarg::testing

#endif  // CNARG_TESTS_SUPPORT_METRIC_ORACLE_H_
