#pragma once

#include <array>
#include <string>

#include "kex/dataset.hpp"
#include "kex/errors.hpp"
#include "kex/model.hpp"

namespace kex {

inline constexpr double kVarianceFloor = 1e-9;

// Gaussian class-conditional model with class-frequency priors. Variances
// are sample variances (n-1 divisor), floored to keep densities finite.
inline TrainedModel train_naive_bayes(const LabeledDataset& data, const std::string& corpus_label,
                                      std::uint64_t seed) {
  long pos = data.positive_count();
  long neg = data.negative_count();
  if (pos == 0 || neg == 0)
    throw TrainingError("training needs both classes, found " + std::to_string(pos) +
                        " positive and " + std::to_string(neg) + " negative records");

  auto fit_class = [&](bool positive) {
    GaussianClass c;
    long n = positive ? pos : neg;
    c.prior = static_cast<double>(n) / static_cast<double>(pos + neg);
    std::array<double, 6> sum{};
    for (const FeatureRecord& r : data.records) {
      if (!r.label || *r.label != positive) continue;
      std::array<double, 6> f = r.features();
      for (std::size_t i = 0; i < 6; ++i) sum[i] += f[i];
    }
    for (std::size_t i = 0; i < 6; ++i) c.mean[i] = sum[i] / static_cast<double>(n);
    std::array<double, 6> sq{};
    for (const FeatureRecord& r : data.records) {
      if (!r.label || *r.label != positive) continue;
      std::array<double, 6> f = r.features();
      for (std::size_t i = 0; i < 6; ++i) {
        double d = f[i] - c.mean[i];
        sq[i] += d * d;
      }
    }
    for (std::size_t i = 0; i < 6; ++i) {
      double var = n > 1 ? sq[i] / static_cast<double>(n - 1) : 0.0;
      c.variance[i] = var < kVarianceFloor ? kVarianceFloor : var;
    }
    return c;
  };

  TrainedModel m;
  m.algorithm = Algorithm::NaiveBayes;
  for (std::size_t i = 0; i < 6; ++i) m.feature_order[i] = kFeatureNames[i];
  m.nb = NbParams{fit_class(true), fit_class(false)};
  m.meta.corpus = corpus_label;
  m.meta.positive_records = pos;
  m.meta.negative_records = neg;
  m.meta.synthetic_records = data.synthetic_count();
  m.meta.seed = seed;
  m.meta.converged = true;
  m.meta.iterations = 0;
  return m;
}

}  // namespace kex
