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

#include "cnarg/logreg.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "cnarg/error.h"

namespace cnarg {
namespace {

double Dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Raw class scores with the flat parameter layout.
void ClassScores(std::span<const double> params, size_t dim, int num_classes,
                 const SparseVector &x, std::vector<double> *scores) {
  scores->assign(num_classes, 0.0);
  for (int k = 0; k < num_classes; ++k) {
    const double *w = params.data() + k * dim;
    double s = params[num_classes * dim + k];
    for (size_t j = 0; j < x.indices.size(); ++j) s += w[x.indices[j]] * x.values[j];
    (*scores)[k] = s;
  }
}

// In-place softmax; returns log-sum-exp of the input.
double Softmax(std::vector<double> *z) {
  const double m = *std::max_element(z->begin(), z->end());
  double sum = 0.0;
  for (double &v : *z) {
    v = std::exp(v - m);
    sum += v;
  }
  for (double &v : *z) v /= sum;
  return m + std::log(sum);
}

void CheckRows(const Dataset &data) {
  for (const SparseVector &x : data.rows) {
    if (!x.indices.empty() && x.indices.back() >= data.dimension) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "feature index " + std::to_string(x.indices.back()) +
                      " >= dimension " + std::to_string(data.dimension));
    }
  }
}

}  // namespace

double L2Norm(std::span<const double> v) { return std::sqrt(Dot(v, v)); }

std::vector<double> BalancedClassWeights(std::span<const int> labels,
                                         int num_classes) {
  std::vector<long> counts(num_classes, 0);
  for (int y : labels) ++counts.at(y);
  std::vector<double> w(num_classes, 0.0);
  for (int c = 0; c < num_classes; ++c) {
    if (counts[c] > 0) {
      w[c] = static_cast<double>(labels.size()) /
             (static_cast<double>(num_classes) * static_cast<double>(counts[c]));
    }
  }
  return w;
}

double Objective(const Dataset &data, std::span<const double> class_weights,
                 double reg_inverse, std::span<const double> params,
                 std::vector<double> *grad) {
  const size_t dim = data.dimension;
  const int K = data.num_classes;
  double f = 0.5 * Dot(params, params);
  if (grad) grad->assign(params.begin(), params.end());
  std::vector<double> p;
  for (size_t i = 0; i < data.rows.size(); ++i) {
    const SparseVector &x = data.rows[i];
    const int y = data.labels[i];
    const double cw = reg_inverse * class_weights[y];
    if (cw == 0.0) continue;
    ClassScores(params, dim, K, x, &p);
    const double score_y = p[y];
    const double lse = Softmax(&p);
    f += cw * (lse - score_y);
    if (!grad) continue;
    for (int k = 0; k < K; ++k) {
      const double r = cw * (p[k] - (k == y ? 1.0 : 0.0));
      if (r == 0.0) continue;
      double *g = grad->data() + k * dim;
      for (size_t j = 0; j < x.indices.size(); ++j) g[x.indices[j]] += r * x.values[j];
      (*grad)[K * dim + k] += r;
    }
  }
  return f;
}

LogRegModel TrainLogReg(const Dataset &data, const TrainOptions &options) {
  if (data.rows.size() != data.labels.size()) {
    throw Error(ErrorCode::kLengthMismatch, "rows vs labels");
  }
  CheckRows(data);
  std::vector<long> counts(data.num_classes, 0);
  for (int y : data.labels) {
    if (y < 0 || y >= data.num_classes) {
      throw Error(ErrorCode::kInvalidArgument, "label out of range");
    }
    ++counts[y];
  }
  if (std::count_if(counts.begin(), counts.end(), [](long c) { return c > 0; }) < 2) {
    throw Error(ErrorCode::kSingleClassDataset,
                "training data has fewer than two classes");
  }

  LogRegModel model;
  model.num_classes = data.num_classes;
  model.dimension = data.dimension;
  model.reg_inverse = options.reg_inverse;
  model.class_weights = options.balanced
                            ? BalancedClassWeights(data.labels, data.num_classes)
                            : std::vector<double>(data.num_classes, 1.0);

  const size_t n = data.num_classes * (data.dimension + 1);
  std::vector<double> x(n, 0.0), g, x_new(n), g_new, dir(n);
  auto eval = [&](const std::vector<double> &params, std::vector<double> *grad) {
    const double f =
        Objective(data, model.class_weights, options.reg_inverse, params, grad);
    if (!std::isfinite(f)) throw Error(ErrorCode::kNonFiniteLoss, "objective overflow");
    return f;
  };

  double f = eval(x, &g);
  model.loss_history.push_back(f);
  std::deque<std::vector<double>> s_hist, y_hist;
  std::deque<double> rho_hist;
  int iter = 0;
  double gnorm = L2Norm(g);
  while (gnorm >= options.gradient_tolerance && iter < options.max_iterations) {
    // Two-loop recursion for dir = -H g.
    for (size_t i = 0; i < n; ++i) dir[i] = -g[i];
    std::vector<double> alpha(s_hist.size());
    for (size_t k = s_hist.size(); k-- > 0;) {
      alpha[k] = rho_hist[k] * Dot(s_hist[k], dir);
      for (size_t i = 0; i < n; ++i) dir[i] -= alpha[k] * y_hist[k][i];
    }
    if (!s_hist.empty()) {
      const double gamma = Dot(s_hist.back(), y_hist.back()) /
                           Dot(y_hist.back(), y_hist.back());
      for (double &d : dir) d *= gamma;
    } else {
      const double scale = 1.0 / std::max(1.0, gnorm);
      for (double &d : dir) d *= scale;
    }
    for (size_t k = 0; k < s_hist.size(); ++k) {
      const double beta = rho_hist[k] * Dot(y_hist[k], dir);
      for (size_t i = 0; i < n; ++i) dir[i] += s_hist[k][i] * (alpha[k] - beta);
    }
    double slope = Dot(g, dir);
    if (slope >= 0.0) {
      // Not a descent direction: restart from steepest descent.
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      const double scale = 1.0 / std::max(1.0, gnorm);
      for (size_t i = 0; i < n; ++i) dir[i] = -g[i] * scale;
      slope = Dot(g, dir);
    }

    double step = 1.0;
    double f_new = 0.0;
    bool accepted = false;
    for (int tries = 0; tries < 60; ++tries) {
      for (size_t i = 0; i < n; ++i) x_new[i] = x[i] + step * dir[i];
      f_new = eval(x_new, &g_new);
      if (f_new < f && f_new <= f + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;

    std::vector<double> s(n), y(n);
    for (size_t i = 0; i < n; ++i) {
      s[i] = x_new[i] - x[i];
      y[i] = g_new[i] - g[i];
    }
    const double sy = Dot(s, y);
    if (sy > 1e-12 * L2Norm(s) * L2Norm(y)) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(y));
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > options.history) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    x.swap(x_new);
    g.swap(g_new);
    f = f_new;
    gnorm = L2Norm(g);
    model.loss_history.push_back(f);
    ++iter;
  }

  model.iterations = iter;
  model.gradient_norm = gnorm;
  model.weights.assign(x.begin(), x.begin() + data.num_classes * data.dimension);
  model.bias.assign(x.begin() + data.num_classes * data.dimension, x.end());
  return model;
}

std::vector<double> Scores(const LogRegModel &model, const SparseVector &x) {
  if (!x.indices.empty() && x.indices.back() >= model.dimension) {
    throw Error(ErrorCode::kDimensionMismatch,
                "feature index " + std::to_string(x.indices.back()) +
                    " >= model dimension " + std::to_string(model.dimension));
  }
  std::vector<double> scores(model.num_classes, 0.0);
  for (int k = 0; k < model.num_classes; ++k) {
    const double *w = model.weights.data() + k * model.dimension;
    double s = model.bias[k];
    for (size_t j = 0; j < x.indices.size(); ++j) s += w[x.indices[j]] * x.values[j];
    scores[k] = s;
  }
  return scores;
}

Prediction Predict(const LogRegModel &model, const SparseVector &x) {
  Prediction out;
  out.probabilities = Scores(model, x);
  int best = 0;
  for (int k = 1; k < model.num_classes; ++k) {
    if (out.probabilities[k] > out.probabilities[best]) best = k;
  }
  out.label = best;
  Softmax(&out.probabilities);
  return out;
}

}  // namespace cnarg
