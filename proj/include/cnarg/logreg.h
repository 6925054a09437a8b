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

#ifndef CNARG_LOGREG_H_
#define CNARG_LOGREG_H_

#include <span>
#include <string>
#include <vector>

#include "cnarg/features.h"

namespace cnarg {

struct Dataset {
  std::vector<SparseVector> rows;
  std::vector<int> labels;
  size_t dimension = 0;
  int num_classes = 2;
};

// Balanced weights: w_c = n_samples / (n_classes * n_c); 0 for absent classes.
std::vector<double> BalancedClassWeights(std::span<const int> labels, int num_classes);

// Parameter layout shared by the objective and the model: the K x D weight
// matrix row-major, followed by K biases.
//
//   f(W, b) = 1/2 (|W|^2 + |b|^2) + C * sum_i cw[y_i] * -log softmax(W x_i + b)[y_i]
//
// The bias is penalised like any weight, as liblinear does with its
// intercept feature. Returns f and writes the gradient when `grad` is set.
double Objective(const Dataset &data, std::span<const double> class_weights,
                 double reg_inverse, std::span<const double> params,
                 std::vector<double> *grad);

struct TrainOptions {
  double reg_inverse = 1.0;
  bool balanced = true;
  double gradient_tolerance = 1e-6;
  int max_iterations = 1000;
  int history = 10;  // L-BFGS memory
};

struct LogRegModel {
  int num_classes = 2;
  size_t dimension = 0;
  std::vector<double> weights;  // num_classes x dimension, row-major
  std::vector<double> bias;
  double reg_inverse = 1.0;
  std::vector<double> class_weights;
  int iterations = 0;
  double gradient_norm = 0.0;
  std::vector<double> loss_history;

  bool operator==(const LogRegModel &) const = default;
};

// Minimises Objective with L-BFGS and an Armijo backtracking line search,
// starting from zero; every accepted step strictly lowers the objective.
// Stops at |grad| < tolerance, max_iterations, or when no step along the
// search direction decreases f. Deterministic for a given dataset.
// Throws kSingleClassDataset when fewer than two classes have samples and
// kNonFiniteLoss if the objective overflows.
LogRegModel TrainLogReg(const Dataset &data, const TrainOptions &options);

struct Prediction {
  int label = 0;
  std::vector<double> probabilities;
};

std::vector<double> Scores(const LogRegModel &model, const SparseVector &x);

// Softmax probabilities; the label is the arg-max, ties going to the lowest
// class index. Throws kDimensionMismatch when x indexes past the model.
Prediction Predict(const LogRegModel &model, const SparseVector &x);

double L2Norm(std::span<const double> v);

}  // namespace cnarg

#endif  // CNARG_LOGREG_H_
