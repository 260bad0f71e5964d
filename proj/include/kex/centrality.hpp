#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "kex/errors.hpp"
#include "kex/text_graph.hpp"

namespace kex {

struct RankParams {
  double damping = 0.85;    // random-walk score
  double alpha = 0.85;      // position-biased score
  double tolerance = 1e-6;  // max absolute per-node change
  int max_iterations = 100;

  void validate() const {
    if (!(damping > 0.0 && damping < 1.0)) throw InputError("damping must lie in (0, 1)");
    if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("alpha must lie in (0, 1)");
    if (!(tolerance > 0.0)) throw InputError("tolerance must be positive");
    if (max_iterations < 1) throw InputError("max_iterations must be at least 1");
  }
};

struct RankResult {
  std::vector<double> scores;  // aligned with TextGraph::stems
  bool converged = true;
  int iterations = 0;
};

// Sum of incident edge weights.
inline std::vector<double> degree_centrality(const TextGraph& g) {
  std::vector<double> out(static_cast<std::size_t>(g.node_count()), 0.0);
  for (int i = 0; i < g.node_count(); ++i) {
    double sum = 0.0;
    for (const auto& [nb, w] : g.adjacency[static_cast<std::size_t>(i)]) sum += w;
    out[static_cast<std::size_t>(i)] = sum;
  }
  return out;
}

// Dominant eigenvector of the weight matrix by power iteration, started
// uniform and L2-normalized every step. Iterating on W + I instead of W
// keeps the same eigenvectors but makes the dominant eigenvalue strictly
// dominant, so bipartite graphs (for which plain iteration oscillates
// forever) converge too.
inline RankResult eigenvector_centrality(const TextGraph& g, const RankParams& params = {}) {
  params.validate();
  int n = g.node_count();
  std::vector<double> v(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> next(static_cast<std::size_t>(n), 0.0);
  for (int it = 1; it <= params.max_iterations; ++it) {
    for (int i = 0; i < n; ++i) {
      double sum = v[static_cast<std::size_t>(i)];
      for (const auto& [nb, w] : g.adjacency[static_cast<std::size_t>(i)])
        sum += w * v[static_cast<std::size_t>(nb)];
      next[static_cast<std::size_t>(i)] = sum;
    }
    double norm = 0.0;
    for (double x : next) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : next) x /= norm;
    double delta = 0.0;
    for (int i = 0; i < n; ++i)
      delta = std::max(delta, std::abs(next[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i)]));
    v.swap(next);
    if (delta < params.tolerance) return {std::move(v), true, it};
  }
  return {std::move(v), false, params.max_iterations};
}

namespace detail {

inline std::vector<double> weighted_out(const TextGraph& g) {
  std::vector<double> out(static_cast<std::size_t>(g.node_count()), 0.0);
  for (int i = 0; i < g.node_count(); ++i) {
    double sum = 0.0;
    for (const auto& [nb, w] : g.adjacency[static_cast<std::size_t>(i)]) sum += w;
    out[static_cast<std::size_t>(i)] = sum;
  }
  return out;
}

// Fixed-point iteration x <- F(x); returns the first iterate whose
// residual max|F(x) - x| drops below tolerance.
template <typename Step>
RankResult iterate_to_fixpoint(std::vector<double> x, Step step, const RankParams& params) {
  std::vector<double> next(x.size(), 0.0);
  for (int it = 1; it <= params.max_iterations; ++it) {
    step(x, next);
    double delta = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) delta = std::max(delta, std::abs(next[i] - x[i]));
    if (delta < params.tolerance) return {std::move(x), true, it};
    x.swap(next);
  }
  return {std::move(x), false, params.max_iterations};
}

}  // namespace detail

// Weighted random-walk score with damping, started at 1 per node. Scores
// are left unnormalized, so they do not sum to 1.
inline RankResult pagerank_scores(const TextGraph& g, const RankParams& params = {}) {
  params.validate();
  int n = g.node_count();
  std::vector<double> out = detail::weighted_out(g);
  std::vector<double> x(static_cast<std::size_t>(n), 1.0);
  auto step = [&](const std::vector<double>& cur, std::vector<double>& next) {
    for (int i = 0; i < n; ++i) {
      double sum = 0.0;
      for (const auto& [j, w] : g.adjacency[static_cast<std::size_t>(i)])
        sum += w / out[static_cast<std::size_t>(j)] * cur[static_cast<std::size_t>(j)];
      next[static_cast<std::size_t>(i)] = (1.0 - params.damping) + params.damping * sum;
    }
  };
  return detail::iterate_to_fixpoint(std::move(x), step, params);
}

// Position-biased random walk: the teleport distribution weights each node
// by the sum of reciprocals of its occurrence positions, normalized to sum
// to 1. Scores start at the teleport distribution and stay a probability
// distribution at every iteration.
inline RankResult position_rank_scores(const TextGraph& g, const RankParams& params = {}) {
  params.validate();
  int n = g.node_count();
  std::vector<double> p(static_cast<std::size_t>(n), 0.0);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int pos : g.positions[static_cast<std::size_t>(i)]) sum += 1.0 / pos;
    p[static_cast<std::size_t>(i)] = sum;
    total += sum;
  }
  for (double& x : p) x /= total;

  std::vector<double> out = detail::weighted_out(g);
  auto step = [&](const std::vector<double>& cur, std::vector<double>& next) {
    for (int i = 0; i < n; ++i) {
      double sum = 0.0;
      for (const auto& [j, w] : g.adjacency[static_cast<std::size_t>(i)])
        sum += w / out[static_cast<std::size_t>(j)] * cur[static_cast<std::size_t>(j)];
      next[static_cast<std::size_t>(i)] =
          (1.0 - params.alpha) * p[static_cast<std::size_t>(i)] + params.alpha * sum;
    }
  };
  return detail::iterate_to_fixpoint(p, step, params);
}

}  // namespace kex
