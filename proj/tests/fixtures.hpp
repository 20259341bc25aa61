#pragma once

// Small named graphs and exhaustive-search oracles shared by the unit and
// acceptance tests. The oracles enumerate subsets or paths directly and share
// no code with the library algorithms they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "zdg/graph.hpp"

namespace zdg::testing {

struct NamedGraph {
  std::string name;
  Graph graph;
};

inline Graph make_graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<Graph::Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

inline Graph complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return make_graph(n, e);
}

inline Graph path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

inline Graph cycle(std::size_t n) {
  auto e = std::vector<std::pair<std::size_t, std::size_t>>{};
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make_graph(n, e);
}

inline Graph star(std::size_t leaves) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return make_graph(leaves + 1, e);
}

inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  }
  return make_graph(a + b, e);
}

inline Graph wheel(std::size_t rim) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < rim; ++i) {
    e.emplace_back(0, i + 1);
    e.emplace_back(i + 1, (i + 1) % rim + 1);
  }
  return make_graph(rim + 1, e);
}

/// Two triangles joined by the single edge 2-3.
inline Graph bridge_graph() { return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}}); }

/// Clique {0..k-1} joined to an independent set {k..k+s-1}.
inline Graph complete_split(std::size_t k, std::size_t s) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) e.emplace_back(i, j);
    for (std::size_t j = 0; j < s; ++j) e.emplace_back(i, k + j);
  }
  return make_graph(k + s, e);
}

/// Connected G(n, q) sample: a random spanning tree plus independent extra edges.
inline Graph random_connected(std::size_t n, double q, std::mt19937& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
  for (std::size_t v = 1; v < n; ++v) {
    const auto u = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
    e.emplace_back(u, v);
    has[u][v] = has[v][u] = true;
  }
  std::bernoulli_distribution coin(q);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!has[i][j] && coin(rng)) e.emplace_back(i, j);
    }
  }
  return make_graph(n, e);
}

/// Fixture corpus, every graph with at most 8 vertices.
inline std::vector<NamedGraph> small_corpus() {
  std::vector<NamedGraph> out{
      {"K2", complete(2)},          {"K3", complete(3)},
      {"K4", complete(4)},          {"K5", complete(5)},
      {"P3", path(3)},              {"P5", path(5)},
      {"C4", cycle(4)},             {"C5", cycle(5)},
      {"C7", cycle(7)},             {"K1,3", star(3)},
      {"K1,5", star(5)},            {"K2,3", complete_bipartite(2, 3)},
      {"K3,3", complete_bipartite(3, 3)}, {"W5", wheel(5)},
      {"bridge", bridge_graph()},   {"split(2,6)", complete_split(2, 6)},
      {"split(3,4)", complete_split(3, 4)},
  };
  std::mt19937 rng(20240917);
  for (int i = 0; i < 8; ++i) {
    const std::size_t n = 5 + static_cast<std::size_t>(i % 4);
    out.push_back({"random" + std::to_string(i), random_connected(n, 0.35, rng)});
  }
  return out;
}

// ---- exhaustive oracles -------------------------------------------------

inline bool adjacent_bits(const Graph& g, std::size_t u, std::size_t v) { return g.adjacent(u, v); }

inline bool connected_after_removing(const Graph& g, std::uint32_t removed_mask) {
  const auto n = g.order();
  std::size_t start = n;
  std::size_t remaining = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (!(removed_mask >> v & 1u)) {
      ++remaining;
      if (start == n) start = v;
    }
  }
  if (remaining <= 1) return true;
  std::uint32_t seen = 1u << start;
  std::vector<std::size_t> stack{start};
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      if ((removed_mask >> w & 1u) || (seen >> w & 1u) || !g.adjacent(v, w)) continue;
      seen |= 1u << w;
      stack.push_back(w);
    }
  }
  return static_cast<std::size_t>(__builtin_popcount(seen)) == remaining;
}

inline std::size_t brute_clique(const Graph& g) {
  const auto n = g.order();
  std::size_t best = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        if ((mask >> i & 1u) && (mask >> j & 1u) && !g.adjacent(i, j)) ok = false;
      }
    }
    if (ok) best = std::max<std::size_t>(best, __builtin_popcount(mask));
  }
  return best;
}

/// Smallest k for which some assignment V -> {0..k-1} is proper (all k^n tried).
inline std::size_t brute_chromatic(const Graph& g) {
  const auto n = g.order();
  if (n == 0) return 0;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::size_t> color(n, 0);
    while (true) {
      bool proper = true;
      for (const auto& e : g.edges()) {
        if (color[e.u] == color[e.v]) {
          proper = false;
          break;
        }
      }
      if (proper) return k;
      std::size_t i = 0;
      while (i < n && ++color[i] == k) color[i++] = 0;
      if (i == n) break;
    }
  }
  return n;
}

/// Smallest vertex set whose removal disconnects; n-1 for complete graphs.
inline std::size_t brute_vertex_connectivity(const Graph& g) {
  const auto n = g.order();
  std::size_t best = n - 1;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size >= best || n - size < 2) continue;
    if (!connected_after_removing(g, mask)) best = size;
  }
  return best;
}

/// Minimum over vertex bipartitions of the number of crossing edges.
inline std::size_t brute_edge_connectivity(const Graph& g) {
  const auto n = g.order();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    std::size_t crossing = 0;
    for (const auto& e : g.edges()) {
      if ((mask >> e.u & 1u) != (mask >> e.v & 1u)) ++crossing;
    }
    best = std::min(best, crossing);
  }
  return best;
}

/// Floyd–Warshall; SIZE_MAX when disconnected.
inline std::size_t brute_diameter(const Graph& g) {
  const auto n = g.order();
  const std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  std::size_t best = 0;
  for (const auto& row : d) {
    for (auto x : row) {
      if (x >= inf) return std::numeric_limits<std::size_t>::max();
      best = std::max(best, x);
    }
  }
  return best;
}

/// Shortest cycle by enumerating simple paths that return to their minimum vertex; 0 if acyclic.
inline std::size_t brute_girth(const Graph& g) {
  const auto n = g.order();
  std::size_t best = 0;
  std::function<void(std::size_t, std::size_t, std::uint32_t, std::size_t)> walk =
      [&](std::size_t start, std::size_t v, std::uint32_t used, std::size_t len) {
        for (std::size_t w = 0; w < n; ++w) {
          if (!g.adjacent(v, w)) continue;
          if (w == start && len >= 3) {
            if (best == 0 || len < best) best = len;
          } else if (w > start && !(used >> w & 1u)) {
            walk(start, w, used | (1u << w), len + 1);
          }
        }
      };
  for (std::size_t s = 0; s < n; ++s) walk(s, s, 1u << s, 1);
  return best;
}

}  // namespace zdg::testing
