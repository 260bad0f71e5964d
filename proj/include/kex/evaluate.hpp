#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kex/dataset.hpp"
#include "kex/errors.hpp"
#include "kex/format.hpp"
#include "kex/logistic_regression.hpp"
#include "kex/metrics.hpp"
#include "kex/model.hpp"
#include "kex/naive_bayes.hpp"
#include "kex/pipeline.hpp"
#include "kex/rng.hpp"
#include "kex/smote.hpp"

namespace kex {

struct DocResult {
  std::string doc_id;
  std::string k_label;  // "-" outside title mode
  long tp = 0;
  long fp = 0;
  long fn = 0;
  PRF prf;
};

struct MacroBlock {
  std::string k_label;
  long documents = 0;
  PRF macro;  // unweighted mean of per-document metrics
};

struct EvalReport {
  std::string mode;
  std::string model_label;
  std::string corpus_label;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<DocResult> per_doc;
  std::vector<MacroBlock> blocks;
  std::vector<std::string> warnings;
  long documents_total = 0;
  long documents_skipped = 0;
};

// Ranking cutoff: a fixed k or the per-document title length.
struct Cutoff {
  bool adaptive = false;
  int k = 0;

  std::string label() const { return adaptive ? "lenW" : std::to_string(k); }
};

inline std::vector<int> make_folds(std::size_t count, int folds, std::uint64_t seed) {
  if (folds < 2) throw InputError("fold count must be at least 2");
  if (count < static_cast<std::size_t>(folds))
    throw InputError("more folds than documents (" + std::to_string(folds) + " > " +
                     std::to_string(count) + ")");
  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  Rng rng(seed);
  rng.shuffle(order);
  std::vector<int> fold_of(count);
  for (std::size_t r = 0; r < count; ++r)
    fold_of[order[r]] = static_cast<int>(r % static_cast<std::size_t>(folds));
  return fold_of;
}

using Predictor = std::function<double(const FeatureRecord&)>;
// Builds a predictor from a training split; may throw TrainingError.
using TrainerFn = std::function<Predictor(const LabeledDataset&)>;

struct CvOptions {
  int folds = 10;
  double threshold = 0.5;
  std::uint64_t seed = 42;
  std::optional<SmoteOptions> smote;
  LrConfig lr;
};

namespace detail {

struct PreparedDoc {
  std::size_t doc_index = 0;
  std::vector<FeatureRecord> records;
};

// Labeled per-document records; failures become warnings and skips.
inline std::vector<PreparedDoc> prepare_docs(const Context& ctx,
                                             const std::vector<Document>& docs,
                                             EvalReport& report) {
  std::vector<PreparedDoc> out;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    try {
      FeatureSet fs = doc_labeled_features(ctx, docs[i]);
      for (std::string& w : fs.warnings) report.warnings.push_back(std::move(w));
      out.push_back({i, std::move(fs.records)});
    } catch (const DataError& e) {
      report.warnings.push_back(std::string("skipping document: ") + e.what());
      ++report.documents_skipped;
    }
  }
  return out;
}

inline DocResult classify_doc(const std::string& doc_id, const std::vector<FeatureRecord>& records,
                              const Predictor& predict, double threshold) {
  DocResult r;
  r.doc_id = doc_id;
  r.k_label = "-";
  for (const FeatureRecord& rec : records) {
    bool predicted = predict(rec) >= threshold;
    bool actual = rec.label && *rec.label;
    if (predicted && actual) ++r.tp;
    else if (predicted && !actual) ++r.fp;
    else if (!predicted && actual) ++r.fn;
  }
  r.prf = prf_from_counts(r.tp, r.fp, r.fn);
  return r;
}

inline MacroBlock macro_over(const std::string& label, const std::vector<DocResult>& results) {
  MacroBlock b;
  b.k_label = label;
  for (const DocResult& r : results) {
    if (r.k_label != label) continue;
    ++b.documents;
    b.macro.precision += r.prf.precision;
    b.macro.recall += r.prf.recall;
    b.macro.f1 += r.prf.f1;
  }
  if (b.documents > 0) {
    b.macro.precision /= static_cast<double>(b.documents);
    b.macro.recall /= static_cast<double>(b.documents);
    b.macro.f1 /= static_cast<double>(b.documents);
  }
  return b;
}

inline void push_rank_config(std::vector<std::pair<std::string, std::string>>& config,
                             const RankParams& rp) {
  config.emplace_back("damping", fmt_double(rp.damping));
  config.emplace_back("alpha", fmt_double(rp.alpha));
  config.emplace_back("tolerance", fmt_double(rp.tolerance, 9));
  config.emplace_back("max_iterations", std::to_string(rp.max_iterations));
}

}  // namespace detail

// Document-level k-fold cross-validation with a caller-supplied trainer.
// Oversampling, when configured, happens inside each training split only;
// validation documents are always scored on natural records.
inline EvalReport cross_validate_with(const Context& ctx, const std::vector<Document>& docs,
                                      const TrainerFn& trainer, const CvOptions& opt,
                                      const std::string& model_label,
                                      const std::string& corpus_label) {
  if (!(opt.threshold > 0.0 && opt.threshold < 1.0))
    throw InputError("threshold must lie in (0, 1)");
  EvalReport report;
  report.mode = "cv";
  report.model_label = model_label;
  report.corpus_label = corpus_label;
  report.documents_total = static_cast<long>(docs.size());
  report.config.emplace_back("folds", std::to_string(opt.folds));
  report.config.emplace_back("seed", std::to_string(opt.seed));
  report.config.emplace_back("threshold", fmt_double(opt.threshold));
  if (opt.smote) {
    report.config.emplace_back("smote_percent", std::to_string(opt.smote->percent));
    report.config.emplace_back("smote_k", std::to_string(opt.smote->k));
  }
  detail::push_rank_config(report.config, ctx.rank_params);

  std::vector<detail::PreparedDoc> prepared = detail::prepare_docs(ctx, docs, report);
  std::vector<int> fold_of = make_folds(prepared.size(), opt.folds, opt.seed);

  for (int fold = 0; fold < opt.folds; ++fold) {
    LabeledDataset training;
    for (std::size_t i = 0; i < prepared.size(); ++i) {
      if (fold_of[i] == fold) continue;
      training.records.insert(training.records.end(), prepared[i].records.begin(),
                              prepared[i].records.end());
    }
    Predictor predict;
    try {
      if (opt.smote) {
        SmoteOutcome balanced =
            smote_balance(training, *opt.smote, opt.seed + static_cast<std::uint64_t>(fold) + 1);
        for (std::string& w : balanced.warnings)
          report.warnings.push_back("fold " + std::to_string(fold) + ": " + std::move(w));
        predict = trainer(balanced.dataset);
      } else {
        predict = trainer(training);
      }
    } catch (const TrainingError& e) {
      report.warnings.push_back("fold " + std::to_string(fold) + " skipped: " + e.what());
      continue;
    }
    for (std::size_t i = 0; i < prepared.size(); ++i) {
      if (fold_of[i] != fold) continue;
      report.per_doc.push_back(detail::classify_doc(docs[prepared[i].doc_index].id,
                                                    prepared[i].records, predict, opt.threshold));
    }
  }

  report.blocks.push_back(detail::macro_over("-", report.per_doc));
  return report;
}

// Standard trainers for the two bundled algorithms.
inline TrainerFn standard_trainer(Algorithm algo, const CvOptions& opt,
                                  const std::string& corpus_label) {
  if (algo == Algorithm::NaiveBayes) {
    return [corpus_label, seed = opt.seed](const LabeledDataset& data) -> Predictor {
      TrainedModel m = train_naive_bayes(data, corpus_label, seed);
      return [m](const FeatureRecord& rec) { return predict_positive_probability(m, rec); };
    };
  }
  return [corpus_label, seed = opt.seed, lr = opt.lr](const LabeledDataset& data) -> Predictor {
    TrainedModel m = train_logistic_regression(data, corpus_label, seed, lr);
    return [m](const FeatureRecord& rec) { return predict_positive_probability(m, rec); };
  };
}

inline EvalReport cross_validate(const Context& ctx, const std::vector<Document>& docs,
                                 Algorithm algo, const CvOptions& opt,
                                 const std::string& corpus_label) {
  EvalReport report = cross_validate_with(ctx, docs, standard_trainer(algo, opt, corpus_label),
                                          opt, std::string(algorithm_name(algo)), corpus_label);
  report.config.insert(report.config.begin(),
                       {"algorithm", std::string(algorithm_name(algo))});
  if (algo == Algorithm::LogisticRegression) {
    report.config.emplace_back("ridge", fmt_double(opt.lr.ridge, 12));
    report.config.emplace_back("max_epochs", std::to_string(opt.lr.max_epochs));
  }
  return report;
}

// Classify every document of a corpus with a fixed, already trained model.
inline EvalReport cross_collection_evaluate(const Context& ctx, const TrainedModel& model,
                                            const std::vector<Document>& docs, double threshold,
                                            const std::string& corpus_label) {
  if (!(threshold > 0.0 && threshold < 1.0)) throw InputError("threshold must lie in (0, 1)");
  EvalReport report;
  report.mode = "cross";
  report.model_label = std::string(algorithm_name(model.algorithm)) + " (trained on " +
                       model.meta.corpus + ")";
  report.corpus_label = corpus_label;
  report.documents_total = static_cast<long>(docs.size());
  report.config.emplace_back("threshold", fmt_double(threshold));
  detail::push_rank_config(report.config, ctx.rank_params);
  if (model.meta.corpus == corpus_label)
    report.warnings.push_back("model was trained on this corpus; scores are not held-out");

  std::vector<detail::PreparedDoc> prepared = detail::prepare_docs(ctx, docs, report);
  Predictor predict = [&model](const FeatureRecord& rec) {
    return predict_positive_probability(model, rec);
  };
  for (const detail::PreparedDoc& pd : prepared) {
    report.per_doc.push_back(
        detail::classify_doc(docs[pd.doc_index].id, pd.records, predict, threshold));
  }
  report.blocks.push_back(detail::macro_over("-", report.per_doc));
  return report;
}

// Overlap between top-ranked stems and title stems at each cutoff.
// Documents whose title has no usable stems are skipped entirely.
inline EvalReport title_overlap_evaluate(const Context& ctx, const TrainedModel& model,
                                         const std::vector<Document>& docs,
                                         const std::vector<Cutoff>& cutoffs,
                                         const std::string& corpus_label) {
  if (cutoffs.empty()) throw InputError("no ranking cutoffs given");
  for (const Cutoff& c : cutoffs)
    if (!c.adaptive && c.k < 1) throw InputError("ranking cutoffs must be at least 1");
  EvalReport report;
  report.mode = "title";
  report.model_label = std::string(algorithm_name(model.algorithm)) + " (trained on " +
                       model.meta.corpus + ")";
  report.corpus_label = corpus_label;
  report.documents_total = static_cast<long>(docs.size());
  {
    std::string joined;
    for (const Cutoff& c : cutoffs) {
      if (!joined.empty()) joined += ",";
      joined += c.label();
    }
    report.config.emplace_back("at", joined);
  }
  detail::push_rank_config(report.config, ctx.rank_params);

  for (const Document& doc : docs) {
    std::set<std::string> title = title_stems(ctx, doc);
    if (title.empty()) {
      report.warnings.push_back("skipping document '" + doc.id + "': no usable title words");
      ++report.documents_skipped;
      continue;
    }
    RankedKeywords ranked;
    try {
      ranked = rank_all(ctx, model, doc);
    } catch (const DataError& e) {
      report.warnings.push_back(std::string("skipping document: ") + e.what());
      ++report.documents_skipped;
      continue;
    }
    for (std::string& w : ranked.warnings) report.warnings.push_back(std::move(w));
    for (const Cutoff& c : cutoffs) {
      std::size_t k = c.adaptive ? title.size() : static_cast<std::size_t>(c.k);
      if (k > ranked.entries.size()) k = ranked.entries.size();
      DocResult r;
      r.doc_id = doc.id;
      r.k_label = c.label();
      for (std::size_t i = 0; i < k; ++i) {
        if (title.count(ranked.entries[i].first)) ++r.tp;
        else ++r.fp;
      }
      r.fn = static_cast<long>(title.size()) - r.tp;
      r.prf = prf_from_counts(r.tp, r.fp, r.fn);
      report.per_doc.push_back(std::move(r));
    }
  }

  for (const Cutoff& c : cutoffs) report.blocks.push_back(detail::macro_over(c.label(), report.per_doc));
  return report;
}

// Human-readable evaluation report; all floating values at fixed
// precision so identical runs render byte-identically. Macro metrics are
// reported as percentages.
inline std::string render_report(const EvalReport& r) {
  std::string out;
  out += "mode: " + r.mode + "\n";
  out += "model: " + r.model_label + "\n";
  out += "corpus: " + r.corpus_label + "\n";
  std::string config;
  for (const auto& [key, value] : r.config) {
    if (!config.empty()) config += " ";
    config += key + "=" + value;
  }
  out += "config: " + config + "\n";
  out += "documents: " + std::to_string(r.documents_total) + " total, " +
         std::to_string(r.documents_skipped) + " skipped\n";
  out += "warnings: " + std::to_string(r.warnings.size()) + "\n";
  out += "results:\n";
  for (const MacroBlock& b : r.blocks) {
    out += "  k=" + b.k_label + " documents=" + std::to_string(b.documents) +
           " precision=" + fmt_double(100.0 * b.macro.precision) +
           " recall=" + fmt_double(100.0 * b.macro.recall) +
           " f1=" + fmt_double(100.0 * b.macro.f1) + "\n";
  }
  return out;
}

// Tab-separated per-document rows, one line per (document, cutoff).
// Metrics are percentages.
inline std::string render_rows(const EvalReport& r) {
  std::string out = "doc_id\tk\ttp\tfp\tfn\tprecision\trecall\tf1\n";
  for (const DocResult& d : r.per_doc) {
    out += d.doc_id + "\t" + d.k_label + "\t" + std::to_string(d.tp) + "\t" +
           std::to_string(d.fp) + "\t" + std::to_string(d.fn) + "\t" +
           fmt_double(100.0 * d.prf.precision) + "\t" + fmt_double(100.0 * d.prf.recall) + "\t" +
           fmt_double(100.0 * d.prf.f1) + "\n";
  }
  return out;
}

}  // namespace kex
