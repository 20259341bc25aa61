#pragma once

#include <cstdint>

#include "zdg/graph.hpp"

namespace zdg {

/// Sum of BFS distances over unordered vertex pairs. Throws std::domain_error
/// when the graph is disconnected.
std::uint64_t wiener(const Graph& g);

/// Sum over edges of 1/sqrt(d_a d_b), Neumaier-compensated.
double randic(const Graph& g);

/// Sum over vertices of d_a^2.
std::uint64_t zagreb_first(const Graph& g);

/// Sum over edges of d_a d_b.
std::uint64_t zagreb_second(const Graph& g);

struct TopologicalIndices {
  std::uint64_t wiener = 0;
  double randic = 0.0;
  std::uint64_t zagreb_first = 0;
  std::uint64_t zagreb_second = 0;
};

TopologicalIndices compute_indices(const Graph& g);

}  // namespace zdg
