#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is written against dense matrices or straight from the
// defining formulas, deliberately sharing no code with the headers under
// test.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kex/rng.hpp"
#include "kex/text_graph.hpp"

namespace oracle {

struct EdgeSpec {
  int a;
  int b;
  int w;
};

// Builds a TextGraph directly from an edge list. Node i is named so that
// numeric order equals lexicographic order, and occupies token position
// i+1 unless positions are supplied.
inline kex::TextGraph make_graph(int n, const std::vector<EdgeSpec>& edges,
                                 const std::vector<std::vector<int>>& positions = {}) {
  kex::TextGraph g;
  g.doc_id = "synthetic";
  for (int i = 0; i < n; ++i) {
    char name[16];
    std::snprintf(name, sizeof name, "n%02d", i);
    g.stems.push_back(name);
  }
  g.positions.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (!positions.empty())
      g.positions[static_cast<std::size_t>(i)] = positions[static_cast<std::size_t>(i)];
    else
      g.positions[static_cast<std::size_t>(i)] = {i + 1};
  }
  g.adjacency.resize(static_cast<std::size_t>(n));
  for (const EdgeSpec& e : edges) {
    g.adjacency[static_cast<std::size_t>(e.a)].emplace_back(e.b, e.w);
    g.adjacency[static_cast<std::size_t>(e.b)].emplace_back(e.a, e.w);
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

// Random connected-enough graph: every node gets at least one edge.
inline kex::TextGraph random_graph(kex::Rng& rng, int max_nodes = 12, int max_weight = 5) {
  int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_nodes - 1)));
  std::map<std::pair<int, int>, int> w;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng.uniform01() < 0.35)
        w[{a, b}] = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_weight)));
  for (int a = 0; a < n; ++a) {
    bool has = false;
    for (const auto& [e, ww] : w)
      if (e.first == a || e.second == a) has = true;
    if (!has) {
      int b = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      if (b == a) b = (a + 1) % n;
      w[{std::min(a, b), std::max(a, b)}] = 1 + static_cast<int>(rng.below(max_weight));
    }
  }
  std::vector<EdgeSpec> edges;
  for (const auto& [e, ww] : w) edges.push_back({e.first, e.second, ww});

  // scatter 1..total distinct token positions across nodes
  std::vector<int> counts(static_cast<std::size_t>(n));
  int total = 0;
  for (int i = 0; i < n; ++i) {
    counts[static_cast<std::size_t>(i)] = 1 + static_cast<int>(rng.below(3));
    total += counts[static_cast<std::size_t>(i)];
  }
  std::vector<int> slots(static_cast<std::size_t>(total));
  for (int i = 0; i < total; ++i) slots[static_cast<std::size_t>(i)] = i + 1;
  rng.shuffle(slots);
  std::vector<std::vector<int>> positions(static_cast<std::size_t>(n));
  std::size_t cursor = 0;
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < counts[static_cast<std::size_t>(i)]; ++c)
      positions[static_cast<std::size_t>(i)].push_back(slots[cursor++]);
    std::sort(positions[static_cast<std::size_t>(i)].begin(),
              positions[static_cast<std::size_t>(i)].end());
  }
  return make_graph(n, edges, positions);
}

inline std::vector<std::vector<double>> weight_matrix(const kex::TextGraph& g) {
  int n = g.node_count();
  std::vector<std::vector<double>> m(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int a = 0; a < n; ++a)
    for (const auto& [b, w] : g.adjacency[static_cast<std::size_t>(a)])
      m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = w;
  return m;
}

// Definition-based core numbers: for each k, repeatedly delete nodes of
// unweighted degree < k; a node's coreness is the largest k it survives.
inline std::vector<int> coreness_bruteforce(const kex::TextGraph& g) {
  int n = g.node_count();
  std::vector<std::vector<double>> m = weight_matrix(g);
  std::vector<int> core(static_cast<std::size_t>(n), 0);
  for (int k = 1; k <= n; ++k) {
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n; ++v) {
        if (!alive[static_cast<std::size_t>(v)]) continue;
        int deg = 0;
        for (int u = 0; u < n; ++u)
          if (alive[static_cast<std::size_t>(u)] &&
              m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] > 0)
            ++deg;
        if (deg < k) {
          alive[static_cast<std::size_t>(v)] = false;
          changed = true;
        }
      }
    }
    for (int v = 0; v < n; ++v)
      if (alive[static_cast<std::size_t>(v)]) core[static_cast<std::size_t>(v)] = k;
  }
  return core;
}

inline std::vector<double> clustering_exhaustive(const kex::TextGraph& g) {
  int n = g.node_count();
  std::vector<std::vector<double>> m = weight_matrix(g);
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int v = 0; v < n; ++v) {
    std::vector<int> nbrs;
    for (int u = 0; u < n; ++u)
      if (m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] > 0) nbrs.push_back(u);
    std::size_t d = nbrs.size();
    if (d < 2) continue;
    long long closed = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        if (m[static_cast<std::size_t>(nbrs[i])][static_cast<std::size_t>(nbrs[j])] > 0) ++closed;
    out[static_cast<std::size_t>(v)] =
        2.0 * static_cast<double>(closed) / (static_cast<double>(d) * (static_cast<double>(d) - 1.0));
  }
  return out;
}

// Gaussian elimination with partial pivoting.
inline std::vector<double> solve_linear(std::vector<std::vector<double>> a, std::vector<double> b) {
  std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0.0) continue;
      double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Exact damped-walk scores: x = (1-d) 1 + d P x solved directly, where
// P[i][j] = w_ij / out_j for j adjacent to i.
inline std::vector<double> pagerank_direct(const kex::TextGraph& g, double d) {
  int n = g.node_count();
  std::vector<std::vector<double>> m = weight_matrix(g);
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(j)] += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  std::vector<std::vector<double>> a(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), 0.0));
  std::vector<double> b(static_cast<std::size_t>(n), 1.0 - d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double p = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] / out[static_cast<std::size_t>(j)];
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          (i == j ? 1.0 : 0.0) - d * p;
    }
  }
  return solve_linear(std::move(a), std::move(b));
}

// Same fixed point for the position-biased walk.
inline std::vector<double> position_rank_direct(const kex::TextGraph& g, double alpha) {
  int n = g.node_count();
  std::vector<std::vector<double>> m = weight_matrix(g);
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(j)] += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  std::vector<double> p(static_cast<std::size_t>(n), 0.0);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int pos : g.positions[static_cast<std::size_t>(i)]) p[static_cast<std::size_t>(i)] += 1.0 / pos;
    total += p[static_cast<std::size_t>(i)];
  }
  for (double& x : p) x /= total;
  std::vector<std::vector<double>> a(static_cast<std::size_t>(n),
                                     std::vector<double>(static_cast<std::size_t>(n), 0.0));
  std::vector<double> b(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    b[static_cast<std::size_t>(i)] = (1.0 - alpha) * p[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      double pij = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] / out[static_cast<std::size_t>(j)];
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i == j ? 1.0 : 0.0) - alpha * pij;
    }
  }
  return solve_linear(std::move(a), std::move(b));
}

// Dense power iteration on W + I with the same start and stopping rule as
// the library, but over an explicit matrix.
inline std::vector<double> eigenvector_dense(const kex::TextGraph& g, double tol, int max_iters) {
  int n = g.node_count();
  std::vector<std::vector<double>> m = weight_matrix(g);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += 1.0;
  std::vector<double> v(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
  for (int it = 0; it < max_iters; ++it) {
    std::vector<double> u(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        u[static_cast<std::size_t>(i)] +=
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
    double norm = 0.0;
    for (double x : u) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : u) x /= norm;
    double delta = 0.0;
    for (int i = 0; i < n; ++i)
      delta = std::max(delta, std::abs(u[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i)]));
    v = u;
    if (delta < tol) break;
  }
  return v;
}

}  // namespace oracle
