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

#include "metric_oracle.h"

namespace cnarg::testing {

Confusion::Confusion(const std::vector<int> &a, const std::vector<int> &b, int k)
    : classes(k), m(k, std::vector<long>(k, 0)) {
  for (size_t i = 0; i < a.size(); ++i) ++m[a[i]][b[i]];
}

long Confusion::Total() const {
  long n = 0;
  for (const auto &row : m) {
    for (long v : row) n += v;
  }
  return n;
}

double Confusion::Kappa() const {
  const double n = static_cast<double>(Total());
  double diag = 0.0;
  for (int i = 0; i < classes; ++i) diag += m[i][i];
  if (diag == n) return 1.0;
  double expected = 0.0;
  for (int i = 0; i < classes; ++i) {
    double row = 0.0, col = 0.0;
    for (int j = 0; j < classes; ++j) {
      row += m[i][j];
      col += m[j][i];
    }
    expected += row * col;
  }
  const double p_o = diag / n;
  const double p_e = expected / (n * n);
  return (p_o - p_e) / (1.0 - p_e);
}

double Confusion::Precision(int c) const {
  double col = 0.0;
  for (int i = 0; i < classes; ++i) col += m[i][c];
  return col == 0.0 ? 0.0 : m[c][c] / col;
}

double Confusion::Recall(int c) const {
  double row = 0.0;
  for (int j = 0; j < classes; ++j) row += m[c][j];
  return row == 0.0 ? 0.0 : m[c][c] / row;
}

double Confusion::F1(int c) const {
  const double p = Precision(c), r = Recall(c);
  return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

}  // namespace cnarg::testing
