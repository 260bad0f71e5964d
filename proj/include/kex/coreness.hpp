#pragma once

#include <vector>

#include "kex/text_graph.hpp"

namespace kex {

// Core number of each node by min-degree peeling on the unweighted graph.
// A node's coreness is the largest k such that it survives in the subgraph
// where every node has unweighted degree >= k.
inline std::vector<int> coreness(const TextGraph& g) {
  int n = g.node_count();
  std::vector<int> degree(static_cast<std::size_t>(n));
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  std::vector<int> core(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    degree[static_cast<std::size_t>(i)] = static_cast<int>(g.adjacency[static_cast<std::size_t>(i)].size());

  int level = 0;
  for (int removed = 0; removed < n; ++removed) {
    int v = -1;
    for (int i = 0; i < n; ++i) {
      if (alive[static_cast<std::size_t>(i)] &&
          (v < 0 || degree[static_cast<std::size_t>(i)] < degree[static_cast<std::size_t>(v)]))
        v = i;
    }
    if (degree[static_cast<std::size_t>(v)] > level) level = degree[static_cast<std::size_t>(v)];
    core[static_cast<std::size_t>(v)] = level;
    alive[static_cast<std::size_t>(v)] = false;
    for (const auto& [nb, w] : g.adjacency[static_cast<std::size_t>(v)])
      if (alive[static_cast<std::size_t>(nb)]) --degree[static_cast<std::size_t>(nb)];
  }
  return core;
}

}  // namespace kex
