#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <set>
#include <vector>

#include "kex/dataset.hpp"
#include "kex/logistic_regression.hpp"
#include "kex/naive_bayes.hpp"
#include "kex/rng.hpp"
#include "kex/smote.hpp"
#include "kex/stopwords.hpp"

namespace {

kex::FeatureRecord make_record(std::array<double, 6> f, bool label,
                               const std::string& stem = "stem") {
  kex::FeatureRecord r;
  r.doc_id = "doc";
  r.stem = stem;
  r.set_features(f);
  r.first_position = 1;
  r.label = label;
  return r;
}

kex::LabeledDataset random_dataset(kex::Rng& rng, int n) {
  kex::LabeledDataset ds;
  for (int i = 0; i < n; ++i) {
    std::array<double, 6> f;
    for (double& x : f) x = rng.uniform01() * 10.0 - 5.0;
    bool label = i < 2 ? (i == 0) : rng.uniform01() < 0.4;
    ds.records.push_back(make_record(f, label, "s" + std::to_string(i)));
  }
  return ds;
}

double nb_posterior_by_hand(const kex::TrainedModel& m, const std::array<double, 6>& f) {
  auto log_joint = [&](const kex::GaussianClass& c) {
    double lp = std::log(c.prior);
    for (std::size_t i = 0; i < 6; ++i) {
      lp += -0.5 * std::log(2.0 * 3.14159265358979323846 * c.variance[i]) -
            (f[i] - c.mean[i]) * (f[i] - c.mean[i]) / (2.0 * c.variance[i]);
    }
    return lp;
  };
  double pos = log_joint(m.nb->positive);
  double neg = log_joint(m.nb->negative);
  return 1.0 / (1.0 + std::exp(neg - pos));
}

}  // namespace

TEST_CASE("gold phrases unigram to stems", "[dataset]") {
  kex::Stopwords stop;
  auto stems = kex::gold_unigram_stems({"support vector machines", "kernel methods"}, stop);
  CHECK(stems == std::set<std::string>{"support", "vector", "machin", "kernel", "method"});

  auto with_stop = kex::gold_unigram_stems({"analysis of titles"}, stop);
  CHECK(with_stop == std::set<std::string>{"analysi", "titl"});

  CHECK(kex::gold_unigram_stems({}, stop).empty());
  CHECK(kex::gold_unigram_stems({"the of"}, stop).empty());
}

TEST_CASE("labels come from stemmed gold unigrams", "[dataset]") {
  kex::Stopwords stop;
  std::vector<kex::FeatureRecord> records;
  records.push_back(make_record({1, 0, 0, 0, 0, 0}, false, "keyword"));
  records.push_back(make_record({2, 0, 0, 0, 0, 0}, false, "graph"));
  records.push_back(make_record({3, 0, 0, 0, 0, 0}, false, "titl"));
  records[0].label.reset();
  records[1].label.reset();
  records[2].label.reset();
  kex::assign_labels(records, {"keyword extraction", "titles"}, stop);
  REQUIRE(records[0].label.has_value());
  CHECK(*records[0].label == true);
  CHECK(*records[1].label == false);
  CHECK(*records[2].label == true);
}

TEST_CASE("dataset counts", "[dataset]") {
  kex::LabeledDataset ds;
  ds.records.push_back(make_record({1, 0, 0, 0, 0, 0}, true));
  ds.records.push_back(make_record({2, 0, 0, 0, 0, 0}, false));
  ds.records.push_back(make_record({3, 0, 0, 0, 0, 0}, true));
  ds.records.back().synthetic = true;
  CHECK(ds.positive_count() == 2);
  CHECK(ds.negative_count() == 1);
  CHECK(ds.synthetic_count() == 1);
}

TEST_CASE("oversampling counts are exact", "[smote]") {
  kex::Rng rng(1);
  kex::LabeledDataset ds;
  for (int i = 0; i < 10; ++i) {
    std::array<double, 6> f;
    for (double& x : f) x = rng.uniform01();
    ds.records.push_back(make_record(f, true, "p" + std::to_string(i)));
  }
  for (int i = 0; i < 25; ++i) {
    std::array<double, 6> f;
    for (double& x : f) x = rng.uniform01() + 2.0;
    ds.records.push_back(make_record(f, false, "n" + std::to_string(i)));
  }
  auto out = kex::smote_balance(ds, {300, 5}, 7);
  CHECK(out.warnings.empty());
  CHECK(out.dataset.records.size() == ds.records.size() + 30);
  CHECK(out.dataset.positive_count() == 40);
  CHECK(out.dataset.negative_count() == 25);
  CHECK(out.dataset.synthetic_count() == 30);
  CHECK(out.dataset.origin == kex::DatasetOrigin::Oversampled);

  // natural records come first, untouched
  for (std::size_t i = 0; i < ds.records.size(); ++i) {
    CHECK(out.dataset.records[i].features() == ds.records[i].features());
    CHECK_FALSE(out.dataset.records[i].synthetic);
  }
  for (std::size_t i = ds.records.size(); i < out.dataset.records.size(); ++i) {
    CHECK(out.dataset.records[i].synthetic);
    REQUIRE(out.dataset.records[i].label.has_value());
    CHECK(*out.dataset.records[i].label);
  }
}

TEST_CASE("synthetic points sit on seed-neighbor segments", "[smote]") {
  kex::Rng rng(99);
  kex::LabeledDataset ds = random_dataset(rng, 40);
  const int percent = 400;
  auto out = kex::smote_balance(ds, {percent, 5}, 1234);

  std::vector<std::size_t> positives;
  for (std::size_t i = 0; i < ds.records.size(); ++i)
    if (ds.records[i].label && *ds.records[i].label) positives.push_back(i);
  int per_seed = percent / 100;

  // independent nearest-neighbor lists
  auto knn = [&](std::size_t a) {
    std::vector<std::pair<double, std::size_t>> dist;
    auto fa = ds.records[positives[a]].features();
    for (std::size_t b = 0; b < positives.size(); ++b) {
      if (b == a) continue;
      auto fb = ds.records[positives[b]].features();
      double d2 = 0;
      for (int c = 0; c < 6; ++c) d2 += (fa[c] - fb[c]) * (fa[c] - fb[c]);
      dist.emplace_back(d2, b);
    }
    std::sort(dist.begin(), dist.end());
    std::vector<std::size_t> ids;
    for (int c = 0; c < 5 && c < static_cast<int>(dist.size()); ++c)
      ids.push_back(dist[static_cast<std::size_t>(c)].second);
    return ids;
  };

  std::size_t synth_base = ds.records.size();
  std::size_t n_synth = out.dataset.records.size() - synth_base;
  REQUIRE(n_synth == positives.size() * static_cast<std::size_t>(per_seed));

  for (std::size_t s = 0; s < n_synth; ++s) {
    const auto& synth = out.dataset.records[synth_base + s];
    std::size_t a = s / static_cast<std::size_t>(per_seed);
    const auto& seed_rec = ds.records[positives[a]];
    CHECK(synth.doc_id == seed_rec.doc_id);
    CHECK(synth.stem == seed_rec.stem);
    CHECK(synth.first_position == seed_rec.first_position);

    auto fs = seed_rec.features();
    auto fz = synth.features();
    bool explained = false;
    for (std::size_t nb : knn(a)) {
      auto fn = ds.records[positives[nb]].features();
      // recover u from the first separating coordinate
      double u = -1.0;
      for (int c = 0; c < 6; ++c) {
        if (fn[c] != fs[c]) {
          u = (fz[c] - fs[c]) / (fn[c] - fs[c]);
          break;
        }
      }
      if (u < 0.0 || u >= 1.0) continue;
      bool all = true;
      for (int c = 0; c < 6; ++c) {
        double expect = fs[c] + u * (fn[c] - fs[c]);
        if (std::abs(fz[c] - expect) > 1e-9) all = false;
      }
      if (all) {
        explained = true;
        break;
      }
    }
    INFO("synthetic record " << s);
    CHECK(explained);

    // convexity: every coordinate inside the positive bounding box
    for (int c = 0; c < 6; ++c) {
      double lo = 1e300, hi = -1e300;
      for (std::size_t p : positives) {
        lo = std::min(lo, ds.records[p].features()[static_cast<std::size_t>(c)]);
        hi = std::max(hi, ds.records[p].features()[static_cast<std::size_t>(c)]);
      }
      CHECK(fz[static_cast<std::size_t>(c)] >= lo - 1e-12);
      CHECK(fz[static_cast<std::size_t>(c)] <= hi + 1e-12);
    }
  }
}

TEST_CASE("oversampling is deterministic in the seed", "[smote]") {
  kex::Rng rng(5);
  kex::LabeledDataset ds = random_dataset(rng, 30);
  auto a = kex::smote_balance(ds, {300, 5}, 42);
  auto b = kex::smote_balance(ds, {300, 5}, 42);
  REQUIRE(a.dataset.records.size() == b.dataset.records.size());
  for (std::size_t i = 0; i < a.dataset.records.size(); ++i)
    CHECK(a.dataset.records[i].features() == b.dataset.records[i].features());

  auto c = kex::smote_balance(ds, {300, 5}, 43);
  bool any_diff = false;
  for (std::size_t i = 0; i < a.dataset.records.size(); ++i)
    if (a.dataset.records[i].features() != c.dataset.records[i].features()) any_diff = true;
  CHECK(any_diff);
}

TEST_CASE("oversampling edge cases", "[smote]") {
  kex::Rng rng(6);
  kex::LabeledDataset ds = random_dataset(rng, 20);

  auto id = kex::smote_balance(ds, {0, 5}, 1);
  CHECK(id.dataset.records.size() == ds.records.size());
  CHECK(id.dataset.origin == kex::DatasetOrigin::Natural);
  CHECK(id.warnings.empty());

  CHECK_THROWS_AS(kex::smote_balance(ds, {150, 5}, 1), kex::InputError);
  CHECK_THROWS_AS(kex::smote_balance(ds, {-100, 5}, 1), kex::InputError);
  CHECK_THROWS_AS(kex::smote_balance(ds, {300, 0}, 1), kex::InputError);

  kex::LabeledDataset lonely;
  lonely.records.push_back(make_record({1, 1, 1, 1, 1, 1}, true));
  lonely.records.push_back(make_record({0, 0, 0, 0, 0, 0}, false));
  CHECK_THROWS_AS(kex::smote_balance(lonely, {300, 5}, 1), kex::BalanceError);

  kex::LabeledDataset three;
  three.records.push_back(make_record({1, 0, 0, 0, 0, 0}, true, "a"));
  three.records.push_back(make_record({2, 0, 0, 0, 0, 0}, true, "b"));
  three.records.push_back(make_record({3, 0, 0, 0, 0, 0}, true, "c"));
  three.records.push_back(make_record({9, 0, 0, 0, 0, 0}, false, "n"));
  auto clamped = kex::smote_balance(three, {200, 5}, 1);
  REQUIRE(clamped.warnings.size() == 1);
  CHECK(clamped.warnings[0].find("clamped") != std::string::npos);
  CHECK(clamped.dataset.synthetic_count() == 6);
}

TEST_CASE("two-gaussian worked example", "[nb]") {
  kex::LabeledDataset ds;
  ds.records.push_back(make_record({1, 0, 0, 0, 0, 0}, true));
  ds.records.push_back(make_record({3, 0, 0, 0, 0, 0}, true));
  ds.records.push_back(make_record({-1, 0, 0, 0, 0, 0}, false));
  ds.records.push_back(make_record({-3, 0, 0, 0, 0, 0}, false));
  auto m = kex::train_naive_bayes(ds, "toy", 0);

  REQUIRE(m.nb.has_value());
  CHECK(m.nb->positive.prior == 0.5);
  CHECK(m.nb->positive.mean[0] == 2.0);
  CHECK(m.nb->positive.variance[0] == 2.0);
  CHECK(m.nb->negative.mean[0] == -2.0);

  CHECK_THAT(kex::predict_positive_probability(m, make_record({0, 0, 0, 0, 0, 0}, false)),
             Catch::Matchers::WithinAbs(0.5, 1e-12));
  CHECK(kex::predict_positive_probability(m, make_record({2, 0, 0, 0, 0, 0}, false)) > 0.5);
  // closed form at x = 1: log-density gap is exactly 2
  CHECK_THAT(kex::predict_positive_probability(m, make_record({1, 0, 0, 0, 0, 0}, false)),
             Catch::Matchers::WithinAbs(1.0 / (1.0 + std::exp(-2.0)), 1e-12));
}

TEST_CASE("posterior equals the direct Bayes computation", "[nb]") {
  kex::Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    kex::LabeledDataset ds = random_dataset(rng, 12 + static_cast<int>(rng.below(30)));
    auto m = kex::train_naive_bayes(ds, "toy", 0);
    for (int q = 0; q < 20; ++q) {
      std::array<double, 6> f;
      for (double& x : f) x = rng.uniform01() * 12.0 - 6.0;
      double got = kex::predict_positive_probability(m, make_record(f, false));
      CHECK_THAT(got, Catch::Matchers::WithinAbs(nb_posterior_by_hand(m, f), 1e-12));
      CHECK(got >= 0.0);
      CHECK(got <= 1.0);
    }
  }
}

TEST_CASE("variance floor protects constant features", "[nb]") {
  kex::LabeledDataset ds;
  ds.records.push_back(make_record({1, 7, 0, 0, 0, 0}, true));
  ds.records.push_back(make_record({1, 8, 0, 0, 0, 0}, true));
  ds.records.push_back(make_record({5, 1, 0, 0, 0, 0}, false));
  ds.records.push_back(make_record({5, 2, 0, 0, 0, 0}, false));
  auto m = kex::train_naive_bayes(ds, "toy", 0);
  CHECK(m.nb->positive.variance[0] == kex::kVarianceFloor);
  double p = kex::predict_positive_probability(m, make_record({1, 7.5, 0, 0, 0, 0}, false));
  CHECK(std::isfinite(p));
  CHECK(p > 0.5);
}

TEST_CASE("single-class training refuses", "[nb][lr]") {
  kex::LabeledDataset ds;
  ds.records.push_back(make_record({1, 0, 0, 0, 0, 0}, true));
  ds.records.push_back(make_record({2, 0, 0, 0, 0, 0}, true));
  CHECK_THROWS_AS(kex::train_naive_bayes(ds, "toy", 0), kex::TrainingError);
  CHECK_THROWS_AS(kex::train_logistic_regression(ds, "toy", 0), kex::TrainingError);
}

TEST_CASE("training metadata is recorded", "[nb]") {
  kex::Rng rng(123);
  kex::LabeledDataset ds = random_dataset(rng, 25);
  auto m = kex::train_naive_bayes(ds, "mini", 77);
  CHECK(m.meta.corpus == "mini");
  CHECK(m.meta.seed == 77);
  CHECK(m.meta.positive_records == ds.positive_count());
  CHECK(m.meta.negative_records == ds.negative_count());
  CHECK(m.meta.synthetic_records == 0);
  CHECK(m.meta.converged);
}

TEST_CASE("gradient matches central finite differences", "[lr]") {
  kex::Rng rng(314159);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 5 + static_cast<int>(rng.below(36));
    std::vector<std::array<double, 6>> x(static_cast<std::size_t>(n));
    std::vector<int> y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      for (double& v : x[static_cast<std::size_t>(i)]) v = rng.uniform01() * 4.0 - 2.0;
      y[static_cast<std::size_t>(i)] = rng.uniform01() < 0.5 ? 1 : 0;
    }
    std::array<double, 6> w;
    for (double& v : w) v = rng.uniform01() * 2.0 - 1.0;
    double b = rng.uniform01() * 2.0 - 1.0;
    double ridge = trial % 3 == 0 ? 0.0 : 1e-3;

    auto g = kex::lr_detail::gradient(x, y, w, b, ridge);

    auto loss_at = [&](const std::array<double, 6>& wv, double bv) {
      return kex::lr_detail::loss(x, y, wv, bv, ridge);
    };
    for (int c = 0; c < 7; ++c) {
      double h = 1e-6;
      double fd;
      if (c < 6) {
        auto wp = w, wm = w;
        wp[static_cast<std::size_t>(c)] += h;
        wm[static_cast<std::size_t>(c)] -= h;
        fd = (loss_at(wp, b) - loss_at(wm, b)) / (2 * h);
      } else {
        fd = (loss_at(w, b + h) - loss_at(w, b - h)) / (2 * h);
      }
      double analytic = c < 6 ? g.w[static_cast<std::size_t>(c)] : g.b;
      INFO("trial " << trial << " component " << c);
      CHECK(std::abs(analytic - fd) <= 1e-5 * std::max(1.0, std::abs(analytic)));
    }
  }
}

TEST_CASE("zero parameters predict one half", "[lr]") {
  kex::TrainedModel m;
  m.algorithm = kex::Algorithm::LogisticRegression;
  m.lr = kex::LrParams{};
  CHECK(kex::predict_positive_probability(m, make_record({3, -1, 4, 1, 5, -9}, false)) == 0.5);
}

TEST_CASE("separable data trains to perfect accuracy", "[lr]") {
  kex::Rng rng(2020);
  kex::LabeledDataset ds;
  for (int i = 0; i < 30; ++i) {
    std::array<double, 6> f;
    for (double& v : f) v = rng.uniform01();
    bool pos = i % 2 == 0;
    f[0] = pos ? 2.0 + rng.uniform01() : -2.0 - rng.uniform01();
    ds.records.push_back(make_record(f, pos, "s" + std::to_string(i)));
  }
  auto m = kex::train_logistic_regression(ds, "toy", 0);
  for (const auto& r : ds.records) {
    double p = kex::predict_positive_probability(m, r);
    CHECK((p >= 0.5) == *r.label);
  }
}

TEST_CASE("loss never increases with more epochs", "[lr]") {
  kex::Rng rng(40);
  kex::LabeledDataset ds = random_dataset(rng, 35);
  kex::LrConfig cfg;
  double prev = 1e300;
  for (int epochs : {1, 2, 5, 20, 100, 400}) {
    cfg.max_epochs = epochs;
    auto m = kex::train_logistic_regression(ds, "toy", 0, cfg);
    std::vector<std::array<double, 6>> x;
    std::vector<int> y;
    for (const auto& r : ds.records) {
      x.push_back(m.scaler.transform(r.features()));
      y.push_back(*r.label ? 1 : 0);
    }
    double loss = kex::lr_detail::loss(x, y, m.lr->weights, m.lr->bias, m.lr->ridge);
    CHECK(loss <= prev + 1e-12);
    prev = loss;
  }
}

TEST_CASE("training is deterministic", "[lr]") {
  kex::Rng rng(41);
  kex::LabeledDataset ds = random_dataset(rng, 30);
  auto a = kex::train_logistic_regression(ds, "toy", 9);
  auto b = kex::train_logistic_regression(ds, "toy", 9);
  CHECK(a.lr->weights == b.lr->weights);
  CHECK(a.lr->bias == b.lr->bias);
  CHECK(a.meta.iterations == b.meta.iterations);
}

TEST_CASE("scaler stores training statistics", "[lr]") {
  kex::Rng rng(42);
  kex::LabeledDataset ds = random_dataset(rng, 20);
  auto m = kex::train_logistic_regression(ds, "toy", 0);
  for (int c = 0; c < 6; ++c) {
    double mean = 0;
    for (const auto& r : ds.records) mean += r.features()[static_cast<std::size_t>(c)];
    mean /= static_cast<double>(ds.records.size());
    CHECK_THAT(m.scaler.mean[static_cast<std::size_t>(c)],
               Catch::Matchers::WithinAbs(mean, 1e-12));
    double sq = 0;
    for (const auto& r : ds.records) {
      double d = r.features()[static_cast<std::size_t>(c)] - mean;
      sq += d * d;
    }
    double sd = std::sqrt(sq / static_cast<double>(ds.records.size() - 1));
    CHECK_THAT(m.scaler.stddev[static_cast<std::size_t>(c)],
               Catch::Matchers::WithinAbs(sd, 1e-12));
  }
}

TEST_CASE("monotone response to a positively weighted feature", "[lr]") {
  kex::TrainedModel m;
  m.algorithm = kex::Algorithm::LogisticRegression;
  m.lr = kex::LrParams{{1.0, 0, 0, 0, 0, 0}, 0.0, 0.0};
  double last = -1.0;
  for (double v : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
    double p = kex::predict_positive_probability(m, make_record({v, 9, 9, 9, 9, 9}, false));
    CHECK(p > last);
    last = p;
  }
}

TEST_CASE("epoch cap reports non-convergence", "[lr]") {
  kex::Rng rng(43);
  kex::LabeledDataset ds = random_dataset(rng, 40);
  kex::LrConfig cfg;
  cfg.max_epochs = 1;
  auto m = kex::train_logistic_regression(ds, "toy", 0, cfg);
  CHECK_FALSE(m.meta.converged);
  CHECK(m.meta.iterations == 1);
}

TEST_CASE("config validation", "[lr]") {
  kex::Rng rng(44);
  kex::LabeledDataset ds = random_dataset(rng, 10);
  kex::LrConfig bad;
  bad.ridge = -1.0;
  CHECK_THROWS_AS(kex::train_logistic_regression(ds, "toy", 0, bad), kex::InputError);
  bad = {};
  bad.max_epochs = 0;
  CHECK_THROWS_AS(kex::train_logistic_regression(ds, "toy", 0, bad), kex::InputError);
}
