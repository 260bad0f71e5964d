#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "kex/features.hpp"
#include "kex/format.hpp"
#include "kex/porter.hpp"
#include "kex/stopwords.hpp"
#include "kex/textproc.hpp"

namespace kex {

// Gold keyphrases reduced to their unigram stem set: tokenize each phrase,
// drop stopwords, single characters and pure numbers, stem, dedupe.
inline std::set<std::string> gold_unigram_stems(const std::vector<std::string>& gold,
                                                const Stopwords& stopwords) {
  std::set<std::string> out;
  for (const std::string& phrase : gold) {
    for (const std::string& tok : tokenize(phrase)) {
      std::string lower = to_lower(tok);
      if (lower.size() < 2) continue;
      if (!detail::has_alpha(lower)) continue;
      if (stopwords.contains(lower)) continue;
      out.insert(porter_stem(lower));
    }
  }
  return out;
}

enum class DatasetOrigin { Natural, Oversampled };

struct LabeledDataset {
  std::array<std::string_view, 6> feature_order = kFeatureNames;
  std::vector<FeatureRecord> records;
  DatasetOrigin origin = DatasetOrigin::Natural;

  long positive_count() const {
    long n = 0;
    for (const auto& r : records)
      if (r.label && *r.label) ++n;
    return n;
  }
  long negative_count() const {
    long n = 0;
    for (const auto& r : records)
      if (r.label && !*r.label) ++n;
    return n;
  }
  long synthetic_count() const {
    long n = 0;
    for (const auto& r : records)
      if (r.synthetic) ++n;
    return n;
  }
};

// Marks each record positive when its stem is in the document's gold
// unigram stem set.
inline void assign_labels(std::vector<FeatureRecord>& records,
                          const std::vector<std::string>& gold, const Stopwords& stopwords) {
  std::set<std::string> positive = gold_unigram_stems(gold, stopwords);
  for (FeatureRecord& rec : records) {
    rec.label = positive.count(rec.stem) > 0;
  }
}

}  // namespace kex
