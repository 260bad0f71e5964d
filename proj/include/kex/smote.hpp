#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "kex/dataset.hpp"
#include "kex/errors.hpp"
#include "kex/rng.hpp"

namespace kex {

struct SmoteOptions {
  int percent = 300;  // synthetic positives as a percentage of natural ones
  int k = 5;          // nearest-neighbor pool size
};

struct SmoteOutcome {
  LabeledDataset dataset;
  std::vector<std::string> warnings;
};

// Minority-class oversampling: for each positive record, percent/100
// synthetic positives are interpolated toward one of its k nearest
// positive neighbors (Euclidean distance in the raw feature space), with a
// single interpolation factor u ~ U[0,1) shared across all coordinates.
// Synthetic records sit on the segment between seed and neighbor.
inline SmoteOutcome smote_balance(const LabeledDataset& input, const SmoteOptions& opts,
                                  std::uint64_t seed) {
  if (opts.percent < 0 || opts.percent % 100 != 0)
    throw InputError("oversampling percent must be a non-negative multiple of 100");
  if (opts.k < 1) throw InputError("neighbor count must be at least 1");

  SmoteOutcome out;
  out.dataset = input;
  if (opts.percent == 0) return out;

  std::vector<std::size_t> positives;
  for (std::size_t i = 0; i < input.records.size(); ++i) {
    const FeatureRecord& r = input.records[i];
    if (r.label && *r.label) positives.push_back(i);
  }
  if (positives.size() < 2)
    throw BalanceError("oversampling needs at least two positive records, found " +
                       std::to_string(positives.size()));

  int k = opts.k;
  if (static_cast<std::size_t>(k) > positives.size() - 1) {
    k = static_cast<int>(positives.size()) - 1;
    out.warnings.push_back("neighbor count clamped to " + std::to_string(k) +
                           " (only " + std::to_string(positives.size()) + " positive records)");
  }

  // k nearest positives for each positive, by distance then index
  std::vector<std::vector<std::size_t>> neighbors(positives.size());
  for (std::size_t a = 0; a < positives.size(); ++a) {
    std::vector<std::pair<double, std::size_t>> dist;
    dist.reserve(positives.size() - 1);
    std::array<double, 6> fa = input.records[positives[a]].features();
    for (std::size_t b = 0; b < positives.size(); ++b) {
      if (b == a) continue;
      std::array<double, 6> fb = input.records[positives[b]].features();
      double d2 = 0.0;
      for (std::size_t c = 0; c < 6; ++c) {
        double diff = fa[c] - fb[c];
        d2 += diff * diff;
      }
      dist.emplace_back(d2, b);
    }
    std::sort(dist.begin(), dist.end());
    neighbors[a].reserve(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) neighbors[a].push_back(dist[static_cast<std::size_t>(c)].second);
  }

  Rng rng(seed);
  int per_seed = opts.percent / 100;
  for (std::size_t a = 0; a < positives.size(); ++a) {
    const FeatureRecord& seed_rec = input.records[positives[a]];
    std::array<double, 6> fs = seed_rec.features();
    for (int c = 0; c < per_seed; ++c) {
      std::size_t pick = neighbors[a][static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(k)))];
      std::array<double, 6> fn = input.records[positives[pick]].features();
      double u = rng.uniform01();
      FeatureRecord synth;
      synth.doc_id = seed_rec.doc_id;
      synth.stem = seed_rec.stem;
      std::array<double, 6> f{};
      for (std::size_t d = 0; d < 6; ++d) f[d] = fs[d] + u * (fn[d] - fs[d]);
      synth.set_features(f);
      synth.first_position = seed_rec.first_position;
      synth.label = true;
      synth.synthetic = true;
      out.dataset.records.push_back(std::move(synth));
    }
  }
  out.dataset.origin = DatasetOrigin::Oversampled;
  return out;
}

}  // namespace kex
