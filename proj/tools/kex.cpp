#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kex/kex.hpp"

namespace {

struct CommonOpts {
  std::uint64_t seed = 42;
  std::string stopwords_file;
  std::string tagger = "builtin";
  kex::RankParams rank;
  int min_sentences = 0;
  int min_gold = 0;
};

void add_seed(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--seed", c.seed, "seed for all randomized steps")->capture_default_str();
}

void add_stopwords(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--stopwords", c.stopwords_file,
                  "stopword file (one word per line) replacing the built-in list");
}

void add_filters(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--min-sentences", c.min_sentences, "drop documents with fewer sentences")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--min-gold", c.min_gold, "drop documents with fewer gold unigram stems")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

void add_pipeline(CLI::App* cmd, CommonOpts& c) {
  add_stopwords(cmd, c);
  cmd->add_option("--tagger", c.tagger, "part-of-speech source")
      ->check(CLI::IsMember({"builtin", "pretagged"}))
      ->capture_default_str();
  cmd->add_option("--damping", c.rank.damping, "random-walk damping factor")
      ->check(CLI::Range(1e-9, 1.0 - 1e-9))
      ->capture_default_str();
  cmd->add_option("--alpha", c.rank.alpha, "position-biased walk damping factor")
      ->check(CLI::Range(1e-9, 1.0 - 1e-9))
      ->capture_default_str();
  cmd->add_option("--rank-tolerance", c.rank.tolerance, "iteration stopping tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-iterations", c.rank.max_iterations, "iteration cap for rank scores")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

kex::Context make_context(const CommonOpts& c) {
  kex::Context ctx;
  if (!c.stopwords_file.empty()) ctx.stopwords = kex::Stopwords::from_file(c.stopwords_file);
  ctx.tagger_mode =
      c.tagger == "pretagged" ? kex::TaggerMode::PreTagged : kex::TaggerMode::Builtin;
  ctx.rank_params = c.rank;
  ctx.rank_params.validate();
  return ctx;
}

void emit_warnings(const std::vector<std::string>& warnings) {
  for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

void emit_output(const std::string& content, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << content;
  } else {
    kex::atomic_write_file(out_file, content);
  }
}

std::vector<kex::Document> load_filtered(const std::string& corpus_file, const CommonOpts& c,
                                         const kex::Stopwords& stopwords) {
  std::vector<kex::Document> docs = kex::load_corpus_jsonl(corpus_file);
  if (c.min_sentences > 0 || c.min_gold > 0) {
    std::vector<std::string> warnings;
    docs = kex::filter_corpus(docs, c.min_sentences, c.min_gold, stopwords, &warnings);
    emit_warnings(warnings);
    if (docs.empty()) throw kex::DataError("no documents survive the corpus filters");
  }
  return docs;
}

std::string corpus_label_of(const std::string& corpus_file) {
  std::filesystem::path p(corpus_file);
  return p.filename().string();
}

// "5,7,10,lenW" -> cutoffs; validation happens via the CLI layer
std::vector<kex::Cutoff> parse_cutoffs(const std::string& spec) {
  std::vector<kex::Cutoff> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    std::string tok = comma == std::string::npos ? spec.substr(start)
                                                 : spec.substr(start, comma - start);
    std::string_view t = kex::trim(tok);
    if (!t.empty()) {
      if (t == "lenW" || t == "lenw") {
        out.push_back({true, 0});
      } else {
        int k = 0;
        for (char ch : t) {
          if (ch < '0' || ch > '9') throw kex::InputError("bad ranking cutoff: " + std::string(t));
          k = k * 10 + (ch - '0');
        }
        if (k < 1) throw kex::InputError("ranking cutoffs must be at least 1");
        out.push_back({false, k});
      }
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw kex::InputError("no ranking cutoffs given");
  return out;
}

std::string cutoff_validator(const std::string& value) {
  try {
    parse_cutoffs(value);
  } catch (const kex::Error& e) {
    return e.what();
  }
  return {};
}

kex::LabeledDataset collect_training_records(const kex::Context& ctx,
                                             const std::vector<kex::Document>& docs,
                                             long* skipped_out) {
  kex::LabeledDataset data;
  long skipped = 0;
  for (const kex::Document& doc : docs) {
    try {
      kex::FeatureSet fs = kex::doc_labeled_features(ctx, doc);
      emit_warnings(fs.warnings);
      data.records.insert(data.records.end(), fs.records.begin(), fs.records.end());
    } catch (const kex::DataError& e) {
      std::cerr << "warning: skipping document: " << e.what() << "\n";
      ++skipped;
    }
  }
  if (skipped_out) *skipped_out = skipped;
  if (data.records.empty()) throw kex::DataError("no usable documents in the corpus");
  return data;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supervised graph-based keyword extraction"};
  app.require_subcommand(1);

  // ingest
  CommonOpts ingest_opts;
  std::string ingest_format, ingest_input, ingest_output;
  CLI::App* ingest = app.add_subcommand("ingest", "convert a raw dataset into corpus JSONL");
  ingest->add_option("--format", ingest_format, "input layout")
      ->required()
      ->check(CLI::IsMember({"hulth"}));
  ingest->add_option("--input", ingest_input, "dataset directory")->required();
  ingest->add_option("--output", ingest_output, "corpus JSONL to write")->required();
  add_seed(ingest, ingest_opts);

  // stats
  CommonOpts stats_opts;
  std::string stats_corpus, stats_out;
  CLI::App* stats_cmd = app.add_subcommand("stats", "corpus summary statistics");
  stats_cmd->add_option("--corpus", stats_corpus, "corpus JSONL")->required();
  stats_cmd->add_option("--out", stats_out, "write the summary to a file instead of stdout");
  add_seed(stats_cmd, stats_opts);
  add_stopwords(stats_cmd, stats_opts);
  add_filters(stats_cmd, stats_opts);

  // train
  CommonOpts train_opts;
  std::string train_corpus, train_algo, train_model_out;
  int train_smote_percent = 0, train_smote_k = 5;
  kex::LrConfig train_lr;
  CLI::App* train = app.add_subcommand("train", "fit a keyword classifier on a corpus");
  train->add_option("--corpus", train_corpus, "corpus JSONL with gold keywords")->required();
  train->add_option("--algo", train_algo, "nb or lr")
      ->required()
      ->check(CLI::IsMember({"nb", "lr"}));
  train->add_option("--out", train_model_out, "model file to write")->required();
  train->add_option("--smote-percent", train_smote_percent,
                    "synthetic positives as a percent of natural ones (multiple of 100)")
      ->check(CLI::Validator(
          [](const std::string& v) -> std::string {
            long n = 0;
            try {
              n = std::stol(v);
            } catch (...) {
              return "not a number";
            }
            if (n < 0 || n % 100 != 0) return "must be a non-negative multiple of 100";
            return {};
          },
          "MULTIPLE_OF_100"))
      ->capture_default_str();
  train->add_option("--smote-k", train_smote_k, "oversampling neighbor pool size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train->add_option("--ridge", train_lr.ridge, "L2 penalty for lr")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  train->add_option("--lr-max-epochs", train_lr.max_epochs, "gradient-descent epoch cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train->add_option("--lr-tolerance", train_lr.tolerance, "gradient stopping tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_seed(train, train_opts);
  add_pipeline(train, train_opts);
  add_filters(train, train_opts);

  // extract
  CommonOpts extract_opts;
  std::string extract_model, extract_input, extract_dot, extract_out;
  int extract_top_k = 10;
  CLI::App* extract = app.add_subcommand("extract", "rank keywords for one text file");
  extract->add_option("--model", extract_model, "trained model file")->required();
  extract->add_option("--input", extract_input, "plain-text file to analyze")->required();
  extract->add_option("--top-k", extract_top_k, "number of stems to emit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  extract->add_option("--dot", extract_dot, "also write the document graph as Graphviz");
  extract->add_option("--out", extract_out, "write results to a file instead of stdout");
  add_seed(extract, extract_opts);
  add_pipeline(extract, extract_opts);

  // eval
  CLI::App* eval = app.add_subcommand("eval", "evaluation protocols");
  eval->require_subcommand(1);

  CommonOpts cv_opts;
  std::string cv_corpus, cv_algo, cv_rows, cv_out;
  int cv_folds = 10, cv_smote_percent = 0, cv_smote_k = 5;
  double cv_threshold = 0.5;
  kex::LrConfig cv_lr;
  CLI::App* eval_cv = eval->add_subcommand("cv", "k-fold cross-validation on one corpus");
  eval_cv->add_option("--corpus", cv_corpus, "corpus JSONL with gold keywords")->required();
  eval_cv->add_option("--algo", cv_algo, "nb or lr")
      ->required()
      ->check(CLI::IsMember({"nb", "lr"}));
  eval_cv->add_option("--folds", cv_folds, "number of document-level folds")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();
  eval_cv->add_option("--smote-percent", cv_smote_percent,
                      "oversampling percent applied inside each training split")
      ->check(CLI::Validator(
          [](const std::string& v) -> std::string {
            long n = 0;
            try {
              n = std::stol(v);
            } catch (...) {
              return "not a number";
            }
            if (n < 0 || n % 100 != 0) return "must be a non-negative multiple of 100";
            return {};
          },
          "MULTIPLE_OF_100"))
      ->capture_default_str();
  eval_cv->add_option("--smote-k", cv_smote_k, "oversampling neighbor pool size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eval_cv->add_option("--threshold", cv_threshold, "positive-class probability threshold")
      ->check(CLI::Range(1e-9, 1.0 - 1e-9))
      ->capture_default_str();
  eval_cv->add_option("--ridge", cv_lr.ridge, "L2 penalty for lr")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  eval_cv->add_option("--lr-max-epochs", cv_lr.max_epochs, "gradient-descent epoch cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eval_cv->add_option("--rows", cv_rows, "write per-document rows to this file");
  eval_cv->add_option("--out", cv_out, "write the report to a file instead of stdout");
  add_seed(eval_cv, cv_opts);
  add_pipeline(eval_cv, cv_opts);
  add_filters(eval_cv, cv_opts);

  CommonOpts cross_opts;
  std::string cross_model, cross_corpus, cross_rows, cross_out;
  double cross_threshold = 0.5;
  CLI::App* eval_cross = eval->add_subcommand("cross", "evaluate a trained model on a corpus");
  eval_cross->add_option("--model", cross_model, "trained model file")->required();
  eval_cross->add_option("--corpus", cross_corpus, "corpus JSONL with gold keywords")->required();
  eval_cross->add_option("--threshold", cross_threshold, "positive-class probability threshold")
      ->check(CLI::Range(1e-9, 1.0 - 1e-9))
      ->capture_default_str();
  eval_cross->add_option("--rows", cross_rows, "write per-document rows to this file");
  eval_cross->add_option("--out", cross_out, "write the report to a file instead of stdout");
  add_seed(eval_cross, cross_opts);
  add_pipeline(eval_cross, cross_opts);
  add_filters(eval_cross, cross_opts);

  CommonOpts title_opts;
  std::string title_model, title_corpus, title_at = "5,7,10,lenW", title_rows, title_out;
  CLI::App* eval_title = eval->add_subcommand("title", "overlap of top stems with title words");
  eval_title->add_option("--model", title_model, "trained model file")->required();
  eval_title->add_option("--corpus", title_corpus, "corpus JSONL with titles")->required();
  eval_title->add_option("--at", title_at, "comma-separated cutoffs; integers or lenW")
      ->check(CLI::Validator(cutoff_validator, "CUTOFFS"))
      ->capture_default_str();
  eval_title->add_option("--rows", title_rows, "write per-document rows to this file");
  eval_title->add_option("--out", title_out, "write the report to a file instead of stdout");
  add_seed(eval_title, title_opts);
  add_pipeline(eval_title, title_opts);
  add_filters(eval_title, title_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (ingest->parsed()) {
      std::vector<std::string> warnings;
      std::vector<kex::Document> docs = kex::ingest_hulth(ingest_input, &warnings);
      emit_warnings(warnings);
      kex::save_corpus_jsonl(docs, ingest_output);
      std::cout << "documents\t" << docs.size() << "\n";
      std::cout << "output\t" << ingest_output << "\n";
    } else if (stats_cmd->parsed()) {
      kex::Stopwords stopwords;
      if (!stats_opts.stopwords_file.empty())
        stopwords = kex::Stopwords::from_file(stats_opts.stopwords_file);
      std::vector<kex::Document> docs = load_filtered(stats_corpus, stats_opts, stopwords);
      emit_output(kex::render_stats(kex::corpus_stats(docs, stopwords)), stats_out);
    } else if (train->parsed()) {
      kex::Context ctx = make_context(train_opts);
      std::vector<kex::Document> docs = load_filtered(train_corpus, train_opts, ctx.stopwords);
      long skipped = 0;
      kex::LabeledDataset data = collect_training_records(ctx, docs, &skipped);
      if (train_smote_percent > 0) {
        kex::SmoteOutcome balanced = kex::smote_balance(
            data, {train_smote_percent, train_smote_k}, train_opts.seed);
        emit_warnings(balanced.warnings);
        data = std::move(balanced.dataset);
      }
      std::string label = corpus_label_of(train_corpus);
      kex::TrainedModel model =
          train_algo == "nb"
              ? kex::train_naive_bayes(data, label, train_opts.seed)
              : kex::train_logistic_regression(data, label, train_opts.seed, train_lr);
      if (!model.meta.converged)
        std::cerr << "warning: gradient descent stopped at the epoch cap without meeting "
                     "tolerance\n";
      kex::save_model(model, train_model_out);
      std::cout << "algorithm\t" << kex::algorithm_name(model.algorithm) << "\n";
      std::cout << "documents\t" << docs.size() << " (" << skipped << " skipped)\n";
      std::cout << "records\t" << data.records.size() << " (positive "
                << model.meta.positive_records << ", negative " << model.meta.negative_records
                << ", synthetic " << model.meta.synthetic_records << ")\n";
      std::cout << "converged\t" << (model.meta.converged ? "yes" : "no") << "\n";
      std::cout << "iterations\t" << model.meta.iterations << "\n";
      std::cout << "model\t" << train_model_out << "\n";
    } else if (extract->parsed()) {
      kex::Context ctx = make_context(extract_opts);
      kex::TrainedModel model = kex::load_model(extract_model);
      kex::Document doc;
      doc.id = std::filesystem::path(extract_input).stem().string();
      doc.body = kex::read_text_file(extract_input);
      if (!extract_dot.empty())
        kex::atomic_write_file(extract_dot, kex::to_dot(kex::doc_graph(ctx, doc)));
      kex::RankedKeywords ranked = kex::rank_keywords(ctx, model, doc, extract_top_k);
      emit_warnings(ranked.warnings);
      std::string out;
      for (const auto& [stem, prob] : ranked.entries)
        out += stem + "\t" + kex::fmt_double(prob) + "\n";
      emit_output(out, extract_out);
    } else if (eval_cv->parsed()) {
      kex::Context ctx = make_context(cv_opts);
      std::vector<kex::Document> docs = load_filtered(cv_corpus, cv_opts, ctx.stopwords);
      kex::CvOptions opt;
      opt.folds = cv_folds;
      opt.threshold = cv_threshold;
      opt.seed = cv_opts.seed;
      opt.lr = cv_lr;
      if (cv_smote_percent > 0) opt.smote = kex::SmoteOptions{cv_smote_percent, cv_smote_k};
      kex::EvalReport report = kex::cross_validate(ctx, docs, kex::parse_algorithm(cv_algo), opt,
                                                   corpus_label_of(cv_corpus));
      emit_warnings(report.warnings);
      if (!cv_rows.empty()) kex::atomic_write_file(cv_rows, kex::render_rows(report));
      emit_output(kex::render_report(report), cv_out);
    } else if (eval_cross->parsed()) {
      kex::Context ctx = make_context(cross_opts);
      kex::TrainedModel model = kex::load_model(cross_model);
      std::vector<kex::Document> docs = load_filtered(cross_corpus, cross_opts, ctx.stopwords);
      kex::EvalReport report = kex::cross_collection_evaluate(ctx, model, docs, cross_threshold,
                                                              corpus_label_of(cross_corpus));
      emit_warnings(report.warnings);
      if (!cross_rows.empty()) kex::atomic_write_file(cross_rows, kex::render_rows(report));
      emit_output(kex::render_report(report), cross_out);
    } else if (eval_title->parsed()) {
      kex::Context ctx = make_context(title_opts);
      kex::TrainedModel model = kex::load_model(title_model);
      std::vector<kex::Document> docs = load_filtered(title_corpus, title_opts, ctx.stopwords);
      kex::EvalReport report = kex::title_overlap_evaluate(ctx, model, docs,
                                                           parse_cutoffs(title_at),
                                                           corpus_label_of(title_corpus));
      emit_warnings(report.warnings);
      if (!title_rows.empty()) kex::atomic_write_file(title_rows, kex::render_rows(report));
      emit_output(kex::render_report(report), title_out);
    }
    return 0;
  } catch (const kex::TrainingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const kex::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
