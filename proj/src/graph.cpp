#include "zdg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace zdg {

Graph::Graph(std::size_t order, std::vector<Edge> edges)
    : adjacency_(order), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.u >= order || e.v >= order) throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop in simple graph");
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw std::invalid_argument("parallel edge in simple graph");
    }
  }
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(order());
  for (std::size_t v = 0; v < order(); ++v) out[v] = adjacency_[v].size();
  return out;
}

std::size_t Graph::min_degree() const {
  if (order() == 0) return 0;
  std::size_t best = adjacency_[0].size();
  for (const auto& nbrs : adjacency_) best = std::min(best, nbrs.size());
  return best;
}

std::vector<std::size_t> Graph::components() const {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(order(), kUnset);
  std::size_t next = 0;
  for (std::size_t s = 0; s < order(); ++s) {
    if (comp[s] != kUnset) continue;
    std::queue<std::size_t> frontier;
    frontier.push(s);
    comp[s] = next;
    while (!frontier.empty()) {
      const auto v = frontier.front();
      frontier.pop();
      for (auto w : adjacency_[v]) {
        if (comp[w] == kUnset) {
          comp[w] = next;
          frontier.push(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::size_t Graph::component_count() const {
  const auto comp = components();
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

bool Graph::is_connected() const { return order() > 0 && component_count() == 1; }

const char* to_string(EdgeBlock block) noexcept {
  switch (block) {
    case EdgeBlock::AuAu2: return "Au-Au2";
    case EdgeBlock::Au2Au2: return "Au2-Au2";
    case EdgeBlock::Au2AuPlusU2: return "Au2-AuPlusU2";
    case EdgeBlock::AuAu: return "Au-Au";
    case EdgeBlock::AuAuPlusU2: return "Au-AuPlusU2";
    case EdgeBlock::AuPlusU2AuPlusU2: return "AuPlusU2-AuPlusU2";
  }
  return "?";
}

EdgeBlock block_of(VertexClass x, VertexClass y) noexcept {
  if (y < x) std::swap(x, y);
  using VC = VertexClass;
  if (x == VC::Au && y == VC::Au) return EdgeBlock::AuAu;
  if (x == VC::Au && y == VC::Au2) return EdgeBlock::AuAu2;
  if (x == VC::Au && y == VC::AuPlusU2) return EdgeBlock::AuAuPlusU2;
  if (x == VC::Au2 && y == VC::Au2) return EdgeBlock::Au2Au2;
  if (x == VC::Au2 && y == VC::AuPlusU2) return EdgeBlock::Au2AuPlusU2;
  return EdgeBlock::AuPlusU2AuPlusU2;
}

namespace {

std::vector<EdgeBlock> blocks_for(const std::vector<Vertex>& vertices,
                                  const std::vector<Graph::Edge>& edges) {
  std::vector<EdgeBlock> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back(block_of(vertices[e.u].cls, vertices[e.v].cls));
  return out;
}

// Canonical edge key. Within the Au2 -> AuPlusU2 block edges group by the
// AuPlusU2 endpoint first so incidence columns form D-blocks row by row.
std::tuple<int, std::size_t, std::size_t> edge_key(const std::vector<Vertex>& vertices,
                                                   const Graph::Edge& e) {
  const auto lo = std::min(e.u, e.v);
  const auto hi = std::max(e.u, e.v);
  const auto block = block_of(vertices[lo].cls, vertices[hi].cls);
  if (block == EdgeBlock::Au2AuPlusU2) return {static_cast<int>(block), hi, lo};
  return {static_cast<int>(block), lo, hi};
}

std::vector<Vertex> canonical_vertices(Prime p) {
  std::vector<Vertex> out;
  for (const auto& x : nonzero_zero_divisors(p)) out.push_back({x, classify(x)});
  return out;
}

}  // namespace

ZdGraph::ZdGraph(Prime p, std::vector<Vertex> vertices, std::vector<Graph::Edge> edges)
    : p_(p),
      vertices_(std::move(vertices)),
      graph_(vertices_.size(), edges),
      blocks_(blocks_for(vertices_, edges)) {}

ZdGraph build_bruteforce(Prime p) {
  auto vertices = canonical_vertices(p);
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (is_zero(ring_mul(vertices[i].elem, vertices[j].elem, p))) edges.push_back({i, j});
    }
  }
  std::stable_sort(edges.begin(), edges.end(), [&](const auto& x, const auto& y) {
    return edge_key(vertices, x) < edge_key(vertices, y);
  });
  return ZdGraph(p, std::move(vertices), std::move(edges));
}

ZdGraph build_structured(Prime p) {
  const std::size_t m = p.value() - 1;  // |A_u| = |A_{u^2}|
  std::vector<Vertex> vertices;
  vertices.reserve(m * (m + 2));
  for (std::uint32_t b = 1; b <= m; ++b) vertices.push_back({{0, b, 0}, VertexClass::Au});
  for (std::uint32_t c = 1; c <= m; ++c) vertices.push_back({{0, 0, c}, VertexClass::Au2});
  for (std::uint32_t b = 1; b <= m; ++b) {
    for (std::uint32_t c = 1; c <= m; ++c) vertices.push_back({{0, b, c}, VertexClass::AuPlusU2});
  }

  const std::size_t au = 0, au2 = m, mixed = 2 * m;
  std::vector<Graph::Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) edges.push_back({au + i, au2 + j});
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) edges.push_back({au2 + i, au2 + j});
  }
  for (std::size_t k = 0; k < m * m; ++k) {
    for (std::size_t j = 0; j < m; ++j) edges.push_back({au2 + j, mixed + k});
  }
  return ZdGraph(p, std::move(vertices), std::move(edges));
}

std::size_t degree_of(const ZdGraph& g, std::size_t v) {
  if (v >= g.order()) throw std::out_of_range("vertex index out of range");
  return g.graph().degree(v);
}

}  // namespace zdg
