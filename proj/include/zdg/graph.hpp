#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "zdg/ring.hpp"

namespace zdg {

/// Simple undirected graph with sorted neighbor lists and an ordered edge list.
/// Edge order is whatever the builder supplied; algorithms never depend on it,
/// exports and the incidence matrix do.
class Graph {
 public:
  struct Edge {
    std::size_t u;
    std::size_t v;
    friend bool operator==(const Edge&, const Edge&) = default;
  };

  Graph() = default;

  /// Throws std::invalid_argument on self-loops, duplicates or out-of-range endpoints.
  Graph(std::size_t order, std::vector<Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const std::size_t> neighbors(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }
  bool adjacent(std::size_t u, std::size_t v) const;

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::vector<std::size_t> degrees() const;
  std::size_t min_degree() const;

  /// Component id per vertex, ids assigned in order of first vertex.
  std::vector<std::size_t> components() const;
  std::size_t component_count() const;
  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<Edge> edges_;
};

/// The class pair an edge joins; the first three are the blocks that occur in Γ(R).
enum class EdgeBlock { AuAu2, Au2Au2, Au2AuPlusU2, AuAu, AuAuPlusU2, AuPlusU2AuPlusU2 };

const char* to_string(EdgeBlock block) noexcept;
EdgeBlock block_of(VertexClass x, VertexClass y) noexcept;

struct Vertex {
  RingElem elem;
  VertexClass cls;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Zero-divisor graph of F_p[u]/(u^3) in canonical vertex and edge order.
class ZdGraph {
 public:
  ZdGraph(Prime p, std::vector<Vertex> vertices, std::vector<Graph::Edge> edges);

  Prime prime() const noexcept { return p_; }
  const Graph& graph() const noexcept { return graph_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<EdgeBlock>& edge_blocks() const noexcept { return blocks_; }

  std::size_t order() const noexcept { return graph_.order(); }
  std::size_t size() const noexcept { return graph_.size(); }

  friend bool operator==(const ZdGraph&, const ZdGraph&) = default;

 private:
  Prime p_;
  std::vector<Vertex> vertices_;
  Graph graph_;
  std::vector<EdgeBlock> blocks_;
};

/// Edges from ring multiplication: {x, y} iff x != y and x*y = 0.
ZdGraph build_bruteforce(Prime p);

/// Edges from the block description alone (clique A_{u^2} joined to everything),
/// with no ring multiplication.
ZdGraph build_structured(Prime p);

/// Throws std::out_of_range for a bad index.
std::size_t degree_of(const ZdGraph& g, std::size_t v);

}  // namespace zdg
