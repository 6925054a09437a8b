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

#include "logreg_oracle.h"

#include <algorithm>
#include <cmath>

namespace cnarg::testing {

SparseVector Dense(const std::vector<double> &values) {
  SparseVector v;
  for (size_t i = 0; i < values.size(); ++i) v.Add(i, values[i]);
  v.Finalize();
  return v;
}

Dataset RandomDataset(std::mt19937_64 &rng, size_t rows, size_t dimension,
                      int num_classes) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Dataset d;
  d.dimension = dimension;
  d.num_classes = num_classes;
  for (size_t i = 0; i < rows; ++i) {
    std::vector<double> x(dimension);
    for (double &v : x) v = rng() % 3 == 0 ? 0.0 : normal(rng);
    d.rows.push_back(Dense(x));
    d.labels.push_back(i < static_cast<size_t>(num_classes)
                           ? static_cast<int>(i)
                           : static_cast<int>(rng() % num_classes));
  }
  return d;
}

Dataset XorDataset() {
  Dataset d;
  d.dimension = 2;
  d.rows = {Dense({0, 0}), Dense({0, 1}), Dense({1, 0}), Dense({1, 1})};
  d.labels = {0, 1, 1, 0};
  return d;
}

double DenseObjective(const Dataset &data, const std::vector<double> &class_weights,
                      double reg_inverse, const std::vector<double> &params) {
  const size_t dim = data.dimension;
  const int k_classes = data.num_classes;
  double f = 0.0;
  for (double p : params) f += 0.5 * p * p;
  for (size_t i = 0; i < data.rows.size(); ++i) {
    std::vector<double> x(dim, 0.0);
    for (size_t j = 0; j < data.rows[i].indices.size(); ++j) {
      x[data.rows[i].indices[j]] = data.rows[i].values[j];
    }
    std::vector<double> z(k_classes);
    for (int k = 0; k < k_classes; ++k) {
      z[k] = params[k_classes * dim + k];
      for (size_t j = 0; j < dim; ++j) z[k] += params[k * dim + j] * x[j];
    }
    double denom = 0.0;
    for (double v : z) denom += std::exp(v);
    const double p_y = std::exp(z[data.labels[i]]) / denom;
    f += reg_inverse * class_weights[data.labels[i]] * -std::log(p_y);
  }
  return f;
}

double GradientCheck(const Dataset &data, const std::vector<double> &class_weights,
                     double reg_inverse, const std::vector<double> &params) {
  std::vector<double> grad;
  Objective(data, class_weights, reg_inverse, params, &grad);
  double worst = 0.0;
  for (size_t i = 0; i < params.size(); ++i) {
    const double h = 1e-5;
    std::vector<double> up = params, down = params;
    up[i] += h;
    down[i] -= h;
    const double numeric = (DenseObjective(data, class_weights, reg_inverse, up) -
                            DenseObjective(data, class_weights, reg_inverse, down)) /
                           (2 * h);
    const double err = std::abs(numeric - grad[i]) /
                       std::max(1e-6, std::abs(numeric) + std::abs(grad[i]));
    worst = std::max(worst, err);
  }
  return worst;
}

}  // namespace cnarg::testing
