#include "zdg/indices.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace zdg {
namespace {

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

}  // namespace

std::uint64_t wiener(const Graph& g) {
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  std::uint64_t total = 0;
  std::vector<std::size_t> dist(g.order());
  for (std::size_t s = 0; s < g.order(); ++s) {
    std::fill(dist.begin(), dist.end(), kUnreached);
    std::queue<std::size_t> frontier;
    dist[s] = 0;
    frontier.push(s);
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
    for (std::size_t t = s + 1; t < g.order(); ++t) {
      if (dist[t] == kUnreached) throw std::domain_error("Wiener index of a disconnected graph");
      total += dist[t];
    }
  }
  return total;
}

double randic(const Graph& g) {
  CompensatedSum sum;
  for (const auto& e : g.edges()) {
    const double product = static_cast<double>(g.degree(e.u)) * static_cast<double>(g.degree(e.v));
    sum.add(1.0 / std::sqrt(product));
  }
  return sum.value();
}

std::uint64_t zagreb_first(const Graph& g) {
  std::uint64_t total = 0;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const std::uint64_t d = g.degree(v);
    total += d * d;
  }
  return total;
}

std::uint64_t zagreb_second(const Graph& g) {
  std::uint64_t total = 0;
  for (const auto& e : g.edges()) {
    total += std::uint64_t{g.degree(e.u)} * g.degree(e.v);
  }
  return total;
}

TopologicalIndices compute_indices(const Graph& g) {
  return {wiener(g), randic(g), zagreb_first(g), zagreb_second(g)};
}

}  // namespace zdg
