#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kex/centrality.hpp"
#include "kex/clustering.hpp"
#include "kex/coreness.hpp"
#include "kex/text_graph.hpp"

namespace kex {

inline constexpr std::array<std::string_view, 6> kFeatureNames = {
    "degree", "prestige", "pagerank", "positionrank", "coreness", "clustering"};

// One candidate stem with its six node features. Coreness is stored as a
// double so oversampled records can hold convex combinations; records
// built from a graph always carry integral values.
struct FeatureRecord {
  std::string doc_id;
  std::string stem;
  double degree = 0.0;
  double prestige = 0.0;
  double pagerank = 0.0;
  double positionrank = 0.0;
  double coreness = 0.0;
  double clustering = 0.0;
  int first_position = 0;
  std::optional<bool> label;
  bool synthetic = false;

  std::array<double, 6> features() const {
    return {degree, prestige, pagerank, positionrank, coreness, clustering};
  }

  void set_features(const std::array<double, 6>& f) {
    degree = f[0];
    prestige = f[1];
    pagerank = f[2];
    positionrank = f[3];
    coreness = f[4];
    clustering = f[5];
  }
};

struct FeatureSet {
  std::vector<FeatureRecord> records;  // graph node order (lexicographic)
  std::vector<std::string> warnings;
};

inline FeatureSet build_feature_records(const TextGraph& g, const RankParams& params = {}) {
  FeatureSet fs;
  std::vector<double> deg = degree_centrality(g);
  RankResult prestige = eigenvector_centrality(g, params);
  RankResult pr = pagerank_scores(g, params);
  RankResult posr = position_rank_scores(g, params);
  std::vector<int> core = coreness(g);
  std::vector<double> cc = clustering_coefficients(g);

  if (!prestige.converged)
    fs.warnings.push_back("document '" + g.doc_id + "': prestige did not converge within " +
                          std::to_string(params.max_iterations) + " iterations");
  if (!pr.converged)
    fs.warnings.push_back("document '" + g.doc_id + "': pagerank did not converge within " +
                          std::to_string(params.max_iterations) + " iterations");
  if (!posr.converged)
    fs.warnings.push_back("document '" + g.doc_id + "': positionrank did not converge within " +
                          std::to_string(params.max_iterations) + " iterations");

  fs.records.reserve(static_cast<std::size_t>(g.node_count()));
  for (int i = 0; i < g.node_count(); ++i) {
    std::size_t u = static_cast<std::size_t>(i);
    FeatureRecord rec;
    rec.doc_id = g.doc_id;
    rec.stem = g.stems[u];
    rec.degree = deg[u];
    rec.prestige = prestige.scores[u];
    rec.pagerank = pr.scores[u];
    rec.positionrank = posr.scores[u];
    rec.coreness = static_cast<double>(core[u]);
    rec.clustering = cc[u];
    rec.first_position = g.first_position(i);
    fs.records.push_back(std::move(rec));
  }
  return fs;
}

}  // namespace kex
