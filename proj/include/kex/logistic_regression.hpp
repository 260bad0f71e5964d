#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "kex/dataset.hpp"
#include "kex/errors.hpp"
#include "kex/model.hpp"

namespace kex {

struct LrConfig {
  double ridge = 1e-8;      // L2 penalty on weights; the bias is unpenalized
  double tolerance = 1e-6;  // stop when max |gradient component| falls below
  int max_epochs = 2000;
};

namespace lr_detail {

struct Gradient {
  std::array<double, 6> w{};
  double b = 0.0;

  double max_abs() const {
    double m = std::abs(b);
    for (double x : w) m = std::max(m, std::abs(x));
    return m;
  }
};

// Mean cross-entropy plus 0.5 * ridge * ||w||^2.
inline double loss(const std::vector<std::array<double, 6>>& x, const std::vector<int>& y,
                   const std::array<double, 6>& w, double b, double ridge) {
  double total = 0.0;
  for (std::size_t r = 0; r < x.size(); ++r) {
    double z = b;
    for (std::size_t i = 0; i < 6; ++i) z += w[i] * x[r][i];
    total += detail::log1pexp(z) - y[r] * z;
  }
  total /= static_cast<double>(x.size());
  double penalty = 0.0;
  for (double wi : w) penalty += wi * wi;
  return total + 0.5 * ridge * penalty;
}

inline Gradient gradient(const std::vector<std::array<double, 6>>& x, const std::vector<int>& y,
                         const std::array<double, 6>& w, double b, double ridge) {
  Gradient g;
  for (std::size_t r = 0; r < x.size(); ++r) {
    double z = b;
    for (std::size_t i = 0; i < 6; ++i) z += w[i] * x[r][i];
    double err = detail::sigmoid(z) - y[r];
    for (std::size_t i = 0; i < 6; ++i) g.w[i] += err * x[r][i];
    g.b += err;
  }
  double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < 6; ++i) g.w[i] = g.w[i] / n + ridge * w[i];
  g.b /= n;
  return g;
}

}  // namespace lr_detail

// Full-batch gradient descent with backtracking line search on z-scored
// features. The fitted scaler is stored with the model, so prediction
// takes raw feature values. Non-convergence within max_epochs leaves a
// warning flag on the model rather than failing.
inline TrainedModel train_logistic_regression(const LabeledDataset& data,
                                              const std::string& corpus_label, std::uint64_t seed,
                                              const LrConfig& config = {}) {
  if (!(config.ridge >= 0.0)) throw InputError("ridge must be non-negative");
  if (config.max_epochs < 1) throw InputError("max_epochs must be at least 1");
  long pos = data.positive_count();
  long neg = data.negative_count();
  if (pos == 0 || neg == 0)
    throw TrainingError("training needs both classes, found " + std::to_string(pos) +
                        " positive and " + std::to_string(neg) + " negative records");

  std::size_t n = data.records.size();
  Scaler scaler;
  {
    std::array<double, 6> sum{};
    for (const FeatureRecord& r : data.records) {
      std::array<double, 6> f = r.features();
      for (std::size_t i = 0; i < 6; ++i) sum[i] += f[i];
    }
    for (std::size_t i = 0; i < 6; ++i) scaler.mean[i] = sum[i] / static_cast<double>(n);
    std::array<double, 6> sq{};
    for (const FeatureRecord& r : data.records) {
      std::array<double, 6> f = r.features();
      for (std::size_t i = 0; i < 6; ++i) {
        double d = f[i] - scaler.mean[i];
        sq[i] += d * d;
      }
    }
    for (std::size_t i = 0; i < 6; ++i) {
      double var = n > 1 ? sq[i] / static_cast<double>(n - 1) : 0.0;
      scaler.stddev[i] = var > 0.0 ? std::sqrt(var) : 1.0;
    }
  }

  std::vector<std::array<double, 6>> x(n);
  std::vector<int> y(n);
  for (std::size_t r = 0; r < n; ++r) {
    x[r] = scaler.transform(data.records[r].features());
    y[r] = data.records[r].label && *data.records[r].label ? 1 : 0;
  }

  std::array<double, 6> w{};
  double b = 0.0;
  double cur_loss = lr_detail::loss(x, y, w, b, config.ridge);
  double stepsize = 1.0;
  bool converged = false;
  int epochs = 0;
  for (int epoch = 1; epoch <= config.max_epochs; ++epoch) {
    epochs = epoch;
    lr_detail::Gradient g = lr_detail::gradient(x, y, w, b, config.ridge);
    if (g.max_abs() < config.tolerance) {
      converged = true;
      epochs = epoch - 1;
      break;
    }
    double gnorm2 = g.b * g.b;
    for (double gi : g.w) gnorm2 += gi * gi;
    double t = stepsize * 2.0;
    bool stepped = false;
    while (t > 1e-20) {
      std::array<double, 6> wt{};
      for (std::size_t i = 0; i < 6; ++i) wt[i] = w[i] - t * g.w[i];
      double bt = b - t * g.b;
      double lt = lr_detail::loss(x, y, wt, bt, config.ridge);
      if (lt <= cur_loss - 0.5 * t * gnorm2) {
        w = wt;
        b = bt;
        cur_loss = lt;
        stepsize = t;
        stepped = true;
        break;
      }
      t *= 0.5;
    }
    if (!stepped) break;  // no descent direction at numeric precision
  }

  TrainedModel m;
  m.algorithm = Algorithm::LogisticRegression;
  for (std::size_t i = 0; i < 6; ++i) m.feature_order[i] = kFeatureNames[i];
  m.scaler = scaler;
  m.lr = LrParams{w, b, config.ridge};
  m.meta.corpus = corpus_label;
  m.meta.positive_records = pos;
  m.meta.negative_records = neg;
  m.meta.synthetic_records = data.synthetic_count();
  m.meta.seed = seed;
  m.meta.converged = converged;
  m.meta.iterations = epochs;
  return m;
}

}  // namespace kex
