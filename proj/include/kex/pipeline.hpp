#pragma once

#include <algorithm>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kex/centrality.hpp"
#include "kex/dataset.hpp"
#include "kex/features.hpp"
#include "kex/model.hpp"
#include "kex/pos.hpp"
#include "kex/stopwords.hpp"
#include "kex/text_graph.hpp"
#include "kex/textproc.hpp"

namespace kex {

// Shared configuration for every document-level computation.
struct Context {
  Stopwords stopwords;
  std::shared_ptr<const Tagger> tagger = std::make_shared<RuleTagger>();
  TaggerMode tagger_mode = TaggerMode::Builtin;
  RankParams rank_params;
};

inline CandidateSequence doc_candidates(const Context& ctx, const Document& doc) {
  return select_candidates(doc, *ctx.tagger, ctx.stopwords, ctx.tagger_mode);
}

inline TextGraph doc_graph(const Context& ctx, const Document& doc) {
  return build_cag(doc_candidates(ctx, doc));
}

inline FeatureSet doc_features(const Context& ctx, const Document& doc) {
  return build_feature_records(doc_graph(ctx, doc), ctx.rank_params);
}

// Feature records labeled against the document's gold keywords.
inline FeatureSet doc_labeled_features(const Context& ctx, const Document& doc) {
  FeatureSet fs = doc_features(ctx, doc);
  assign_labels(fs.records, doc.gold_keywords, ctx.stopwords);
  return fs;
}

// Title words normalized exactly like candidates: lowercase, hyphens
// stripped, stopwords and single characters and pure numbers removed,
// stemmed, deduplicated.
inline std::set<std::string> title_stems(const Context& ctx, const Document& doc) {
  std::set<std::string> out;
  for (const std::string& tok : tokenize(doc.title)) {
    std::string lower = to_lower(tok);
    if (lower.size() < 2) continue;
    if (!detail::has_alpha(lower)) continue;
    if (ctx.stopwords.contains(lower)) continue;
    out.insert(porter_stem(lower));
  }
  return out;
}

struct RankedKeywords {
  std::string doc_id;
  std::vector<std::pair<std::string, double>> entries;  // stem, probability
  std::vector<std::string> warnings;
};

// All candidate stems ordered by predicted probability (descending), with
// ties broken by earlier first occurrence, then lexicographically.
inline RankedKeywords rank_all(const Context& ctx, const TrainedModel& model,
                               const Document& doc) {
  FeatureSet fs = doc_features(ctx, doc);
  struct Row {
    double prob;
    int first_position;
    const std::string* stem;
  };
  std::vector<Row> rows;
  rows.reserve(fs.records.size());
  for (const FeatureRecord& rec : fs.records) {
    rows.push_back({predict_positive_probability(model, rec), rec.first_position, &rec.stem});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.prob != b.prob) return a.prob > b.prob;
    if (a.first_position != b.first_position) return a.first_position < b.first_position;
    return *a.stem < *b.stem;
  });
  RankedKeywords out;
  out.doc_id = doc.id;
  out.warnings = std::move(fs.warnings);
  out.entries.reserve(rows.size());
  for (const Row& r : rows) out.entries.emplace_back(*r.stem, r.prob);
  return out;
}

inline RankedKeywords rank_keywords(const Context& ctx, const TrainedModel& model,
                                    const Document& doc, int k) {
  if (k < 1) throw InputError("k must be at least 1");
  RankedKeywords out = rank_all(ctx, model, doc);
  if (static_cast<int>(out.entries.size()) > k) out.entries.resize(static_cast<std::size_t>(k));
  return out;
}

// Number of distinct title stems; the adaptive cutoff for ranking.
inline int len_w(const Context& ctx, const Document& doc) {
  int n = static_cast<int>(title_stems(ctx, doc).size());
  if (n == 0)
    throw InputError("document '" + doc.id + "' has no usable title words");
  return n;
}

}  // namespace kex
