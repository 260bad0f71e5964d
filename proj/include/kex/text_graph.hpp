#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kex/errors.hpp"
#include "kex/textproc.hpp"

namespace kex {

// Undirected weighted co-occurrence graph over candidate stems. Nodes are
// sorted lexicographically; adjacency lists are sorted by neighbor index.
// Only stems that participate in at least one edge become nodes.
struct TextGraph {
  std::string doc_id;
  std::vector<std::string> stems;
  std::vector<std::vector<int>> positions;                 // ascending, 1-based
  std::vector<std::vector<std::pair<int, int>>> adjacency; // (neighbor, weight)

  int node_count() const { return static_cast<int>(stems.size()); }

  int edge_count() const {
    std::size_t twice = 0;
    for (const auto& nbrs : adjacency) twice += nbrs.size();
    return static_cast<int>(twice / 2);
  }

  int index_of(std::string_view stem) const {
    auto it = std::lower_bound(stems.begin(), stems.end(), stem);
    if (it == stems.end() || *it != stem) return -1;
    return static_cast<int>(it - stems.begin());
  }

  int first_position(int node) const { return positions[static_cast<std::size_t>(node)].front(); }

  bool has_edge(int a, int b) const {
    const auto& nbrs = adjacency[static_cast<std::size_t>(a)];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), std::make_pair(b, 0));
    return it != nbrs.end() && it->first == b;
  }

  int edge_weight(int a, int b) const {
    const auto& nbrs = adjacency[static_cast<std::size_t>(a)];
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), std::make_pair(b, 0));
    return (it != nbrs.end() && it->first == b) ? it->second : 0;
  }
};

// Each window is a pair of consecutive sentences (a single-sentence
// document is its own window). Every unordered pair of distinct stems
// present in a window adds one to that pair's weight, regardless of how
// often either stem repeats inside the window.
inline TextGraph build_cag(const CandidateSequence& seq) {
  int s = seq.sentence_count;
  std::vector<std::set<std::string>> stems_in_sentence(static_cast<std::size_t>(s));
  std::map<std::string, std::vector<int>> all_positions;
  for (const CandidateToken& tok : seq.tokens) {
    stems_in_sentence[static_cast<std::size_t>(tok.sentence_index)].insert(tok.stem);
    all_positions[tok.stem].push_back(tok.token_position);
  }

  std::map<std::pair<std::string, std::string>, int> weights;
  auto add_window = [&weights](const std::set<std::string>& window) {
    for (auto it = window.begin(); it != window.end(); ++it) {
      auto jt = it;
      for (++jt; jt != window.end(); ++jt) {
        ++weights[{*it, *jt}];
      }
    }
  };

  if (s == 1) {
    add_window(stems_in_sentence[0]);
  } else {
    for (int i = 0; i + 1 < s; ++i) {
      std::set<std::string> window = stems_in_sentence[static_cast<std::size_t>(i)];
      window.insert(stems_in_sentence[static_cast<std::size_t>(i) + 1].begin(),
                    stems_in_sentence[static_cast<std::size_t>(i) + 1].end());
      add_window(window);
    }
  }

  if (weights.empty())
    throw EmptyGraphError("document '" + seq.doc_id + "' yields no co-occurrence edges");

  std::set<std::string> connected;
  for (const auto& [pair, w] : weights) {
    connected.insert(pair.first);
    connected.insert(pair.second);
  }

  TextGraph g;
  g.doc_id = seq.doc_id;
  g.stems.assign(connected.begin(), connected.end());
  g.positions.resize(g.stems.size());
  g.adjacency.resize(g.stems.size());
  for (std::size_t i = 0; i < g.stems.size(); ++i) {
    g.positions[i] = all_positions[g.stems[i]];
  }
  for (const auto& [pair, w] : weights) {
    int a = g.index_of(pair.first);
    int b = g.index_of(pair.second);
    g.adjacency[static_cast<std::size_t>(a)].emplace_back(b, w);
    g.adjacency[static_cast<std::size_t>(b)].emplace_back(a, w);
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

// Graphviz rendering with stems as node labels and co-occurrence counts as
// edge weights. Edge order is deterministic (lexicographic by endpoints).
inline std::string to_dot(const TextGraph& g) {
  std::string out = "graph \"" + g.doc_id + "\" {\n";
  for (int a = 0; a < g.node_count(); ++a) {
    for (const auto& [b, w] : g.adjacency[static_cast<std::size_t>(a)]) {
      if (b < a) continue;
      out += "  \"" + g.stems[static_cast<std::size_t>(a)] + "\" -- \"" +
             g.stems[static_cast<std::size_t>(b)] + "\" [weight=" + std::to_string(w) + "];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace kex
