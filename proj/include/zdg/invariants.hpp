#pragma once

#include <cstddef>
#include <optional>

#include "zdg/graph.hpp"

// Exact graph invariants by general-purpose search. Nothing here knows about
// the ring; every routine works on an arbitrary simple graph.
namespace zdg {

/// Longest shortest path; nullopt when the graph is disconnected.
std::optional<std::size_t> diameter(const Graph& g);

/// Shortest cycle length; nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

/// Bron–Kerbosch with Tomita pivoting.
std::size_t clique_number(const Graph& g);

/// Clique lower bound, smallest-last greedy upper bound, DSATUR backtracking
/// to close any gap.
std::size_t chromatic_number(const Graph& g);

/// Menger via unit-capacity max-flow on the vertex-split digraph. A complete
/// graph returns order-1. A disconnected graph returns 0.
std::size_t vertex_connectivity(const Graph& g);

/// Local vertex connectivity between two distinct non-adjacent vertices,
/// stopping once `cap` disjoint paths are found.
std::size_t local_vertex_connectivity(const Graph& g, std::size_t s, std::size_t t,
                                      std::size_t cap);

/// Stoer–Wagner global minimum cut with unit weights; 0 when disconnected.
std::size_t edge_connectivity(const Graph& g);

struct InvariantReport {
  std::optional<std::size_t> diameter;
  std::optional<std::size_t> girth;
  std::size_t clique_number = 0;
  std::size_t chromatic_number = 0;
  std::size_t vertex_connectivity = 0;
  std::size_t edge_connectivity = 0;
  std::size_t min_degree = 0;
};

InvariantReport compute_invariants(const Graph& g);

}  // namespace zdg
