#pragma once

#include <vector>

#include "kex/text_graph.hpp"

namespace kex {

// Local clustering coefficient: the fraction of pairs of neighbors that
// are themselves adjacent. Nodes with fewer than two neighbors score 0.
inline std::vector<double> clustering_coefficients(const TextGraph& g) {
  int n = g.node_count();
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    const auto& nbrs = g.adjacency[static_cast<std::size_t>(i)];
    std::size_t d = nbrs.size();
    if (d < 2) continue;
    long long closed = 0;
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = a + 1; b < d; ++b) {
        if (g.has_edge(nbrs[a].first, nbrs[b].first)) ++closed;
      }
    }
    out[static_cast<std::size_t>(i)] =
        2.0 * static_cast<double>(closed) / (static_cast<double>(d) * (static_cast<double>(d) - 1.0));
  }
  return out;
}

}  // namespace kex
