#include "zdg/invariants.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace zdg {
namespace {

constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs_distances(const Graph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.order(), kUnreached);
  std::queue<std::size_t> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const auto v = frontier.front();
    frontier.pop();
    for (auto w : g.neighbors(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

using Bitset = std::vector<bool>;

struct CliqueSearch {
  const Graph& g;
  std::size_t best = 0;

  void expand(std::size_t size, std::vector<std::size_t> cand, std::vector<std::size_t> excl) {
    if (cand.empty()) {
      if (excl.empty()) best = std::max(best, size);
      return;
    }
    if (size + cand.size() <= best) return;

    // Pivot maximizing |cand ∩ N(pivot)|.
    std::size_t pivot = cand.front();
    std::size_t pivot_hits = 0;
    auto consider = [&](std::size_t u) {
      std::size_t hits = 0;
      for (auto v : cand) hits += g.adjacent(u, v) ? 1 : 0;
      if (hits > pivot_hits) {
        pivot = u;
        pivot_hits = hits;
      }
    };
    for (auto u : cand) consider(u);
    for (auto u : excl) consider(u);

    std::vector<std::size_t> branch;
    for (auto v : cand) {
      if (!g.adjacent(pivot, v)) branch.push_back(v);
    }
    for (auto v : branch) {
      std::vector<std::size_t> next_cand, next_excl;
      for (auto w : cand) {
        if (g.adjacent(v, w)) next_cand.push_back(w);
      }
      for (auto w : excl) {
        if (g.adjacent(v, w)) next_excl.push_back(w);
      }
      expand(size + 1, std::move(next_cand), std::move(next_excl));
      cand.erase(std::find(cand.begin(), cand.end(), v));
      excl.push_back(v);
      if (size + cand.size() <= best) return;
    }
  }
};

// Smallest-last ordering, then first-fit coloring in reverse removal order.
std::size_t greedy_upper_bound(const Graph& g) {
  const auto n = g.order();
  std::vector<std::size_t> deg = g.degrees();
  std::vector<bool> removed(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!removed[v] && (pick == n || deg[v] < deg[pick])) pick = v;
    }
    removed[pick] = true;
    order.push_back(pick);
    for (auto w : g.neighbors(pick)) {
      if (!removed[w]) --deg[w];
    }
  }
  std::reverse(order.begin(), order.end());

  std::vector<std::size_t> color(n, kUnreached);
  std::size_t used = 0;
  for (auto v : order) {
    std::vector<bool> taken(used + 1, false);
    for (auto w : g.neighbors(v)) {
      if (color[w] != kUnreached) taken[color[w]] = true;
    }
    std::size_t c = 0;
    while (taken[c]) ++c;
    color[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

struct DsaturSearch {
  const Graph& g;
  std::size_t colors;
  std::vector<std::size_t> color;
  // neighbor_color_count[v][c] = number of colored neighbors of v with color c
  std::vector<std::vector<std::size_t>> neighbor_color_count;

  DsaturSearch(const Graph& graph, std::size_t k)
      : g(graph),
        colors(k),
        color(graph.order(), kUnreached),
        neighbor_color_count(graph.order(), std::vector<std::size_t>(k, 0)) {}

  std::size_t saturation(std::size_t v) const {
    std::size_t s = 0;
    for (auto count : neighbor_color_count[v]) s += count > 0 ? 1 : 0;
    return s;
  }

  // Highest saturation, then highest degree, then lowest index.
  std::size_t select() const {
    std::size_t pick = kUnreached;
    std::size_t pick_sat = 0;
    for (std::size_t v = 0; v < g.order(); ++v) {
      if (color[v] != kUnreached) continue;
      const auto sat = saturation(v);
      if (pick == kUnreached || sat > pick_sat ||
          (sat == pick_sat && g.degree(v) > g.degree(pick))) {
        pick = v;
        pick_sat = sat;
      }
    }
    return pick;
  }

  void assign(std::size_t v, std::size_t c, bool on) {
    color[v] = on ? c : kUnreached;
    for (auto w : g.neighbors(v)) {
      if (on) {
        ++neighbor_color_count[w][c];
      } else {
        --neighbor_color_count[w][c];
      }
    }
  }

  bool solve(std::size_t colored, std::size_t used) {
    if (colored == g.order()) return true;
    const auto v = select();
    // Colors beyond the first unused one are symmetric; try at most one fresh color.
    const auto limit = std::min(colors, used + 1);
    for (std::size_t c = 0; c < limit; ++c) {
      if (neighbor_color_count[v][c] > 0) continue;
      assign(v, c, true);
      if (solve(colored + 1, std::max(used, c + 1))) return true;
      assign(v, c, false);
    }
    return false;
  }
};

bool colorable_with(const Graph& g, std::size_t k) {
  if (g.order() == 0) return true;
  if (k == 0) return false;
  DsaturSearch search(g, k);
  return search.solve(0, 0);
}

// Residual graph for vertex-disjoint paths: vertex v becomes v_in = 2v and
// v_out = 2v+1 joined by a unit arc; each edge {u,w} gives u_out->w_in and w_out->u_in.
class SplitFlow {
 public:
  explicit SplitFlow(const Graph& g) : nodes_(2 * g.order()), head_(nodes_, kNone) {
    for (std::size_t v = 0; v < g.order(); ++v) add_arc(2 * v, 2 * v + 1);
    for (const auto& e : g.edges()) {
      add_arc(2 * e.u + 1, 2 * e.v);
      add_arc(2 * e.v + 1, 2 * e.u);
    }
  }

  std::size_t max_flow(std::size_t source, std::size_t sink, std::size_t cap) {
    for (auto& arc : arcs_) arc.flow = 0;
    std::size_t flow = 0;
    std::vector<std::size_t> via(nodes_);
    while (flow < cap) {
      std::fill(via.begin(), via.end(), kNone);
      std::queue<std::size_t> frontier;
      frontier.push(source);
      via[source] = kSource;
      while (!frontier.empty() && via[sink] == kNone) {
        const auto x = frontier.front();
        frontier.pop();
        for (auto a = head_[x]; a != kNone; a = arcs_[a].next) {
          const auto& arc = arcs_[a];
          if (arc.capacity - arc.flow > 0 && via[arc.to] == kNone) {
            via[arc.to] = a;
            frontier.push(arc.to);
          }
        }
      }
      if (via[sink] == kNone) break;
      for (auto x = sink; x != source;) {
        const auto a = via[x];
        arcs_[a].flow += 1;
        arcs_[a ^ 1].flow -= 1;
        x = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  static constexpr std::size_t kSource = kNone - 1;

  struct Arc {
    std::size_t to;
    std::size_t next;
    int capacity;
    int flow;
  };

  void add_arc(std::size_t from, std::size_t to) {
    arcs_.push_back({to, head_[from], 1, 0});
    head_[from] = arcs_.size() - 1;
    arcs_.push_back({from, head_[to], 0, 0});
    head_[to] = arcs_.size() - 1;
  }

  std::size_t nodes_;
  std::vector<std::size_t> head_;
  std::vector<Arc> arcs_;
};

std::size_t stoer_wagner(const std::vector<std::vector<std::size_t>>& weight) {
  const auto n = weight.size();
  auto w = weight;
  std::vector<std::size_t> alive(n);
  for (std::size_t i = 0; i < n; ++i) alive[i] = i;
  auto best = std::numeric_limits<std::size_t>::max();

  while (alive.size() > 1) {
    const auto m = alive.size();
    std::vector<std::size_t> key(m, 0);
    std::vector<bool> added(m, false);
    std::size_t prev = 0, last = 0;
    for (std::size_t step = 0; step < m; ++step) {
      std::size_t pick = m;
      for (std::size_t i = 0; i < m; ++i) {
        if (!added[i] && (pick == m || key[i] > key[pick])) pick = i;
      }
      added[pick] = true;
      prev = last;
      last = pick;
      if (step == m - 1) {
        best = std::min(best, key[pick]);
        break;
      }
      for (std::size_t i = 0; i < m; ++i) {
        if (!added[i]) key[i] += w[alive[pick]][alive[i]];
      }
    }
    // Merge `last` into `prev`.
    const auto s = alive[prev], t = alive[last];
    for (auto v : alive) {
      w[s][v] += w[t][v];
      w[v][s] = w[s][v];
    }
    w[s][s] = 0;
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(last));
  }
  return best;
}

}  // namespace

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (std::size_t s = 0; s < g.order(); ++s) {
    for (auto d : bfs_distances(g, s)) {
      if (d == kUnreached) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

std::optional<std::size_t> girth(const Graph& g) {
  std::size_t best = kUnreached;
  for (std::size_t root = 0; root < g.order(); ++root) {
    std::vector<std::size_t> dist(g.order(), kUnreached), parent(g.order(), kUnreached);
    std::queue<std::size_t> frontier;
    dist[root] = 0;
    frontier.push(root);
    while (!frontier.empty()) {
      const auto v = frontier.front();
      frontier.pop();
      if (2 * dist[v] + 1 >= best) break;
      for (auto w : g.neighbors(v)) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          frontier.push(w);
        } else if (parent[v] != w) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  if (best == kUnreached) return std::nullopt;
  return best;
}

std::size_t clique_number(const Graph& g) {
  if (g.order() == 0) return 0;
  CliqueSearch search{g};
  std::vector<std::size_t> all(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) all[v] = v;
  search.expand(0, std::move(all), {});
  return search.best;
}

std::size_t chromatic_number(const Graph& g) {
  const auto lower = clique_number(g);
  const auto upper = greedy_upper_bound(g);
  for (auto k = lower; k < upper; ++k) {
    if (colorable_with(g, k)) return k;
  }
  return upper;
}

std::size_t local_vertex_connectivity(const Graph& g, std::size_t s, std::size_t t,
                                      std::size_t cap) {
  SplitFlow flow(g);
  return flow.max_flow(2 * s + 1, 2 * t, cap);
}

std::size_t vertex_connectivity(const Graph& g) {
  const auto n = g.order();
  if (n <= 1) return 0;
  if (!g.is_connected()) return 0;
  std::size_t best = n - 1;
  SplitFlow flow(g);
  // Even's scheme: some vertex among the first best+1 lies outside a minimum
  // separator, so sources beyond that index are never needed.
  for (std::size_t s = 0; s < n && s <= best; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      best = std::min(best, flow.max_flow(2 * s + 1, 2 * t, best));
    }
  }
  return best;
}

std::size_t edge_connectivity(const Graph& g) {
  const auto n = g.order();
  if (n <= 1) return 0;
  if (!g.is_connected()) return 0;
  std::vector<std::vector<std::size_t>> weight(n, std::vector<std::size_t>(n, 0));
  for (const auto& e : g.edges()) {
    weight[e.u][e.v] = 1;
    weight[e.v][e.u] = 1;
  }
  return stoer_wagner(weight);
}

InvariantReport compute_invariants(const Graph& g) {
  InvariantReport r;
  r.diameter = diameter(g);
  r.girth = girth(g);
  r.clique_number = clique_number(g);
  r.chromatic_number = chromatic_number(g);
  r.vertex_connectivity = vertex_connectivity(g);
  r.edge_connectivity = edge_connectivity(g);
  r.min_degree = g.min_degree();
  return r;
}

}  // namespace zdg
