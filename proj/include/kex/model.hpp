#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kex/errors.hpp"
#include "kex/features.hpp"
#include "kex/format.hpp"

namespace kex {

enum class Algorithm { NaiveBayes, LogisticRegression };

inline std::string_view algorithm_name(Algorithm a) {
  return a == Algorithm::NaiveBayes ? "naive_bayes" : "logistic_regression";
}

inline Algorithm parse_algorithm(std::string_view s) {
  if (s == "naive_bayes" || s == "nb") return Algorithm::NaiveBayes;
  if (s == "logistic_regression" || s == "lr") return Algorithm::LogisticRegression;
  throw InputError("unknown algorithm: " + std::string(s));
}

// Per-feature z-score parameters. Identity (mean 0, stddev 1) when the
// algorithm does not standardize.
struct Scaler {
  std::array<double, 6> mean{0, 0, 0, 0, 0, 0};
  std::array<double, 6> stddev{1, 1, 1, 1, 1, 1};

  std::array<double, 6> transform(const std::array<double, 6>& f) const {
    std::array<double, 6> out{};
    for (std::size_t i = 0; i < 6; ++i) out[i] = (f[i] - mean[i]) / stddev[i];
    return out;
  }
};

struct GaussianClass {
  double prior = 0.5;
  std::array<double, 6> mean{};
  std::array<double, 6> variance{};
};

struct NbParams {
  GaussianClass positive;
  GaussianClass negative;
};

struct LrParams {
  std::array<double, 6> weights{};
  double bias = 0.0;
  double ridge = 0.0;
};

struct TrainingMeta {
  std::string corpus;
  long positive_records = 0;
  long negative_records = 0;
  long synthetic_records = 0;
  std::uint64_t seed = 0;
  bool converged = true;
  int iterations = 0;
};

struct TrainedModel {
  Algorithm algorithm = Algorithm::NaiveBayes;
  std::array<std::string, 6> feature_order{};
  Scaler scaler;
  std::optional<NbParams> nb;
  std::optional<LrParams> lr;
  TrainingMeta meta;
};

namespace detail {

inline double log1pexp(double z) {
  return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

inline double sigmoid(double z) {
  return z >= 0.0 ? 1.0 / (1.0 + std::exp(-z)) : std::exp(z) / (1.0 + std::exp(z));
}

inline double gaussian_log_density(double x, double mean, double variance) {
  static const double kLog2Pi = std::log(2.0 * std::acos(-1.0));
  double diff = x - mean;
  return -0.5 * (kLog2Pi + std::log(variance) + diff * diff / variance);
}

}  // namespace detail

// P(positive | features); the two class probabilities always sum to 1.
inline double predict_positive_probability(const TrainedModel& model, const FeatureRecord& rec) {
  std::array<double, 6> x = rec.features();
  if (model.algorithm == Algorithm::LogisticRegression) {
    if (!model.lr) throw ModelIoError("model is missing its parameter block");
    std::array<double, 6> z = model.scaler.transform(x);
    double s = model.lr->bias;
    for (std::size_t i = 0; i < 6; ++i) s += model.lr->weights[i] * z[i];
    return detail::sigmoid(s);
  }
  if (!model.nb) throw ModelIoError("model is missing its parameter block");
  double log_pos = std::log(model.nb->positive.prior);
  double log_neg = std::log(model.nb->negative.prior);
  for (std::size_t i = 0; i < 6; ++i) {
    log_pos += detail::gaussian_log_density(x[i], model.nb->positive.mean[i],
                                            model.nb->positive.variance[i]);
    log_neg += detail::gaussian_log_density(x[i], model.nb->negative.mean[i],
                                            model.nb->negative.variance[i]);
  }
  return detail::sigmoid(log_pos - log_neg);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace detail {

inline std::string fnv1a64_hex(std::string_view s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(s)));
  return std::string("fnv1a64:") + buf;
}

inline nlohmann::json model_to_json(const TrainedModel& m) {
  nlohmann::json j;
  j["format_version"] = 1;
  j["algorithm"] = std::string(algorithm_name(m.algorithm));
  j["feature_order"] = m.feature_order;
  j["seed"] = m.meta.seed;
  j["scaler"] = {{"mean", m.scaler.mean}, {"stddev", m.scaler.stddev}};
  if (m.algorithm == Algorithm::LogisticRegression) {
    if (!m.lr) throw ModelIoError("model is missing its parameter block");
    j["params"] = {{"weights", m.lr->weights}, {"bias", m.lr->bias}, {"ridge", m.lr->ridge}};
  } else {
    if (!m.nb) throw ModelIoError("model is missing its parameter block");
    j["params"] = {
        {"priors", {{"positive", m.nb->positive.prior}, {"negative", m.nb->negative.prior}}},
        {"positive_mean", m.nb->positive.mean},
        {"positive_variance", m.nb->positive.variance},
        {"negative_mean", m.nb->negative.mean},
        {"negative_variance", m.nb->negative.variance}};
  }
  j["training_meta"] = {{"corpus", m.meta.corpus},
                        {"positive_records", m.meta.positive_records},
                        {"negative_records", m.meta.negative_records},
                        {"synthetic_records", m.meta.synthetic_records},
                        {"converged", m.meta.converged},
                        {"iterations", m.meta.iterations}};
  return j;
}

template <std::size_t N>
void json_to_array(const nlohmann::json& j, std::array<double, N>& out) {
  if (!j.is_array() || j.size() != N)
    throw ModelIoError("expected an array of " + std::to_string(N) + " numbers");
  for (std::size_t i = 0; i < N; ++i) out[i] = j[i].get<double>();
}

inline void require_finite(const std::array<double, 6>& a, const char* what) {
  for (double x : a)
    if (!std::isfinite(x)) throw ModelIoError(std::string("non-finite value in ") + what);
}

}  // namespace detail

inline void save_model(const TrainedModel& m, const std::filesystem::path& path) {
  nlohmann::json j = detail::model_to_json(m);
  j["checksum"] = detail::fnv1a64_hex(j.dump());
  atomic_write_file(path, j.dump(2) + "\n");
}

inline TrainedModel load_model(const std::filesystem::path& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw ModelIoError("model file " + path.string() + " is not valid JSON: " + e.what());
  }
  try {
    if (!j.is_object()) throw ModelIoError("model file is not a JSON object");
    if (!j.contains("format_version") || !j["format_version"].is_number_integer() ||
        j["format_version"].get<int>() != 1)
      throw ModelIoError("unsupported model format_version in " + path.string());
    if (!j.contains("checksum") || !j["checksum"].is_string())
      throw ModelIoError("model file " + path.string() + " has no checksum");
    std::string stored = j["checksum"].get<std::string>();
    nlohmann::json without = j;
    without.erase("checksum");
    if (detail::fnv1a64_hex(without.dump()) != stored)
      throw ModelIoError("model file " + path.string() + " failed its checksum");

    TrainedModel m;
    m.algorithm = parse_algorithm(j.at("algorithm").get<std::string>());
    auto order = j.at("feature_order");
    if (!order.is_array() || order.size() != 6)
      throw ModelIoError("feature_order must list 6 features");
    for (std::size_t i = 0; i < 6; ++i) {
      m.feature_order[i] = order[i].get<std::string>();
      if (m.feature_order[i] != kFeatureNames[i])
        throw ModelIoError("feature_order mismatch at position " + std::to_string(i));
    }
    detail::json_to_array(j.at("scaler").at("mean"), m.scaler.mean);
    detail::json_to_array(j.at("scaler").at("stddev"), m.scaler.stddev);
    detail::require_finite(m.scaler.mean, "scaler.mean");
    detail::require_finite(m.scaler.stddev, "scaler.stddev");
    for (double s : m.scaler.stddev)
      if (!(s > 0.0)) throw ModelIoError("scaler.stddev entries must be positive");

    const auto& params = j.at("params");
    if (m.algorithm == Algorithm::LogisticRegression) {
      LrParams lr;
      detail::json_to_array(params.at("weights"), lr.weights);
      lr.bias = params.at("bias").get<double>();
      lr.ridge = params.at("ridge").get<double>();
      detail::require_finite(lr.weights, "weights");
      if (!std::isfinite(lr.bias) || !std::isfinite(lr.ridge) || lr.ridge < 0.0)
        throw ModelIoError("invalid bias or ridge value");
      m.lr = lr;
    } else {
      NbParams nb;
      nb.positive.prior = params.at("priors").at("positive").get<double>();
      nb.negative.prior = params.at("priors").at("negative").get<double>();
      double prior_sum = nb.positive.prior + nb.negative.prior;
      if (!(nb.positive.prior > 0.0) || !(nb.negative.prior > 0.0) ||
          std::abs(prior_sum - 1.0) > 1e-9)
        throw ModelIoError("class priors must be positive and sum to 1");
      detail::json_to_array(params.at("positive_mean"), nb.positive.mean);
      detail::json_to_array(params.at("positive_variance"), nb.positive.variance);
      detail::json_to_array(params.at("negative_mean"), nb.negative.mean);
      detail::json_to_array(params.at("negative_variance"), nb.negative.variance);
      detail::require_finite(nb.positive.mean, "positive_mean");
      detail::require_finite(nb.negative.mean, "negative_mean");
      for (double v : nb.positive.variance)
        if (!(v > 0.0)) throw ModelIoError("variances must be positive");
      for (double v : nb.negative.variance)
        if (!(v > 0.0)) throw ModelIoError("variances must be positive");
      m.nb = nb;
    }

    const auto& meta = j.at("training_meta");
    m.meta.corpus = meta.at("corpus").get<std::string>();
    m.meta.positive_records = meta.at("positive_records").get<long>();
    m.meta.negative_records = meta.at("negative_records").get<long>();
    m.meta.synthetic_records = meta.at("synthetic_records").get<long>();
    m.meta.converged = meta.at("converged").get<bool>();
    m.meta.iterations = meta.at("iterations").get<int>();
    m.meta.seed = j.at("seed").get<std::uint64_t>();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw ModelIoError("model file " + path.string() + " is malformed: " + e.what());
  }
}

}  // namespace kex
